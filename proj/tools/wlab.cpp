// wlab: command-line front end.
//
// Exit codes: 0 success, 1 verification or audit failure, 2 input error.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wlab/wlab.hpp"

#ifndef WLAB_DEFAULT_FIXTURE_DIR
#define WLAB_DEFAULT_FIXTURE_DIR "data/fixtures"
#endif

namespace {

using namespace wlab;

int finish(const CommandOutcome& out) {
  if (!out.payload.empty()) std::cout << out.payload;
  if (!out.diagnostics.empty()) std::cerr << out.diagnostics << '\n';
  return out.exit_code;
}

std::string print_result(const InvariantResult& res, const std::string& format) {
  if (format == "json") return to_json(res).dump() + "\n";
  return res.value.str() + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Real enumerative invariants of rational surfaces: W+/W- aggregation along (-2)-curves "
               "and tropical counts on P2, F0, F2.\nEnvironment: WLAB_THREADS caps worker threads (0 = auto)."};
  app.require_subcommand(1);

  // mu
  std::string side = "plus";
  std::uint32_t m = 0, alpha = 0, beta = 0, k = 0;
  auto* mu = app.add_subcommand("mu", "Print the k-th multiplicity mu+ or mu- of a curve");
  mu->add_option("--side", side, "plus or minus")->check(CLI::IsMember({"plus", "minus"}));
  mu->add_option("--m", m, "mass (solitary real nodes)")->required();
  mu->add_option("--alpha", alpha, "real intersection points with E")->required();
  mu->add_option("--beta", beta, "pairs of conjugate intersection points with E")->required();
  mu->add_option("--k", k, "multiple of E removed from the class")->required();

  // ab
  std::string fixture;
  std::string format = "plain";
  bool modified = false;
  auto* ab = app.add_subcommand("ab", "Aggregate W+ or W- from a fixture");
  ab->add_option("--fixture", fixture, "fixture file")->required();
  ab->add_option("--side", side, "plus or minus")->check(CLI::IsMember({"plus", "minus"}));
  ab->add_flag("--modified", modified, "sign from solitary nodes in the selected component (per-curve data)");
  ab->add_flag("--complex", "complex total sum C(alpha+2beta,k) instead (per-curve data)");
  ab->add_option("--format", format, "plain or json")->check(CLI::IsMember({"plain", "json"}));

  // morse
  std::int64_t target_chi = 0;
  auto* morse = app.add_subcommand("morse", "Welschinger invariant of a Morse smoothing of the fixture surface");
  morse->add_option("--fixture", fixture, "fixture file")->required();
  morse->add_option("--target-chi", target_chi, "chi of the smoothed real locus (source chi or chi+2)")->required();
  morse->add_option("--format", format, "plain or json")->check(CLI::IsMember({"plain", "json"}));

  // tropical
  std::string surface, class_text, invariant = "complex", algorithm = "floor";
  auto* trop = app.add_subcommand("tropical", "Tropical count of irreducible rational curves");
  trop->add_option("--surface", surface, "P2, F0 or F2")->required()->check(CLI::IsMember({"P2", "F0", "F2"}));
  trop->add_option("--class", class_text, "\"d\" for P2, \"a,b\" for F0 (aB1+bB2) and F2 (aB+bF)")->required();
  trop->add_option("--invariant", invariant, "complex or welschinger")->check(CLI::IsMember({"complex", "welschinger"}));
  trop->add_option("--algorithm", algorithm, "floor or lattice-path")->check(CLI::IsMember({"floor", "lattice-path"}));
  trop->add_option("--format", format, "plain or json")->check(CLI::IsMember({"plain", "json"}));

  // quadric
  int degree = 0;
  auto* quadric = app.add_subcommand("quadric", "W_Q(dh) of the quadric ellipsoid");
  quadric->add_option("--degree", degree, "d >= 1")->required();
  quadric->add_option("--algorithm", algorithm, "floor or lattice-path")->check(CLI::IsMember({"floor", "lattice-path"}));
  quadric->add_option("--format", format, "plain or json")->check(CLI::IsMember({"plain", "json"}));

  // table
  std::vector<std::string> fixtures;
  std::string table_format = "text";
  std::string fixture_dir = WLAB_DEFAULT_FIXTURE_DIR;
  auto* table = app.add_subcommand("table", "n+/n- table with W+/W- sums, one column pair per fixture");
  table->add_option("--fixture", fixtures, "fixture files (default: the shipped CP2_6 fixtures)");
  table->add_option("--fixtures-dir", fixture_dir, "directory of the shipped fixtures");
  table->add_option("--format", table_format, "text or csv")->check(CLI::IsMember({"text", "csv"}));

  // verify
  std::string suite = "all";
  bool long_checks = false;
  auto* verify = app.add_subcommand("verify", "Run a built-in verification suite");
  verify->add_option("--suite", suite, "paper, cross or all");
  verify->add_option("--fixtures-dir", fixture_dir, "directory of the shipped fixtures");
  verify->add_flag("--long", long_checks, "include the degree-5 complex check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const unsigned threads = thread_count_from_env();
    if (mu->parsed()) {
      const auto v = side == "plus" ? mu_plus(m, alpha, beta, k) : mu_minus(m, alpha, beta, k);
      std::cout << v << '\n';
      return 0;
    }
    if (ab->parsed()) {
      const auto set = load_fixture(fixture);
      const auto sign = parse_sign(side);
      BigInt value;
      std::string provenance;
      if (ab->count("--complex")) {
        value = complex_total(set);
        provenance = "complex total: sum of C(alpha+2beta,k) over records";
      } else if (modified) {
        value = modified_w(set, sign);
        provenance = std::string("modified W") + (sign == MorseSign::plus ? "+" : "-") + ": sign from nodes in " +
                     set.source.selected_component;
      } else {
        value = w_side(set, sign);
        provenance = std::string("W") + (sign == MorseSign::plus ? "+" : "-") + " summed over k";
      }
      InvariantResult res{set.surface->name, set.target_class.coeffs(), set.source, set.r, value, provenance};
      std::cout << print_result(res, format);
      return 0;
    }
    if (morse->parsed()) {
      const auto set = load_fixture(fixture);
      std::cout << print_result(apply_morse(set, target_chi), format);
      return 0;
    }
    if (trop->parsed()) {
      const auto& model = models::by_name(surface);
      const auto res = tropical::tropical_result(model, model.parse_class(class_text), tropical::parse_invariant(invariant),
                                                 tropical::parse_algorithm(algorithm), threads);
      std::cout << print_result(res, format);
      return 0;
    }
    if (quadric->parsed()) {
      std::cout << print_result(tropical::w_quadric_ellipsoid(degree, tropical::parse_algorithm(algorithm), threads), format);
      return 0;
    }
    if (table->parsed()) {
      std::vector<RelativeCountSet> sets;
      if (fixtures.empty())
        for (const auto& col : verify::reference_table()) fixtures.push_back((std::filesystem::path(fixture_dir) / col.file).string());
      for (const auto& f : fixtures) sets.push_back(load_fixture(f));
      return finish(emit_table(sets, table_format == "csv" ? TableFormat::csv : TableFormat::text));
    }
    if (verify->parsed()) {
      return finish(verify::run_verify_suite(suite, {fixture_dir, long_checks, threads}));
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
