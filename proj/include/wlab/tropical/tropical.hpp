#pragma once

// Front door of the tropical engine: complex and purely real (Welschinger)
// counts of irreducible rational curves on P2, F0 and F2 by floor diagrams or
// lattice paths.

#include <string>

#include "wlab/ab_engine.hpp"
#include "wlab/tropical/floor_diagram.hpp"
#include "wlab/tropical/kontsevich.hpp"
#include "wlab/tropical/lattice_path.hpp"
#include "wlab/tropical/polygon.hpp"

namespace wlab::tropical {

enum class Algorithm { floor_diagram, lattice_path };

inline const char* to_string(Algorithm a) { return a == Algorithm::floor_diagram ? "floor" : "lattice-path"; }

inline Algorithm parse_algorithm(const std::string& s) {
  if (s == "floor") return Algorithm::floor_diagram;
  if (s == "lattice-path") return Algorithm::lattice_path;
  throw InputError("algorithm must be floor or lattice-path, got '" + s + "'");
}

inline CountMode parse_invariant(const std::string& s) {
  if (s == "complex") return CountMode::complex;
  if (s == "welschinger") return CountMode::real;
  throw InputError("invariant must be complex or welschinger, got '" + s + "'");
}

inline BigInt floor_diagram_count(const ToricClass& tc, CountMode mode, unsigned threads = 1) {
  if (tc.a == 0) return tc.b == 1 ? 1 : 0;  // fibre classes: only a single fibre is irreducible
  BigInt total = 0;
  for (const auto& marked : enumerate_floor_diagrams(tc, threads))
    total += marked.marking_count *
             (mode == CountMode::complex ? complex_multiplicity(marked.diagram) : BigInt(real_multiplicity(marked.diagram)));
  return total;
}

inline BigInt count(const SurfaceModel& surface, const DivisorClass& d, CountMode mode,
                    Algorithm algorithm = Algorithm::floor_diagram, unsigned threads = 1) {
  const auto tc = toric_class(surface, d);
  if (algorithm == Algorithm::floor_diagram) return floor_diagram_count(tc, mode, threads);
  return lattice_path_count(polygon_for(tc), mode, threads);
}

inline BigInt count_complex(const SurfaceModel& surface, const DivisorClass& d,
                            Algorithm algorithm = Algorithm::floor_diagram, unsigned threads = 1) {
  return count(surface, d, CountMode::complex, algorithm, threads);
}

/// Purely real configuration: all chern_degree - 1 points real.
inline BigInt count_welschinger_real(const SurfaceModel& surface, const DivisorClass& d,
                                     Algorithm algorithm = Algorithm::floor_diagram, unsigned threads = 1) {
  return count(surface, d, CountMode::real, algorithm, threads);
}

/// Real locus of the tautological real toric structure.
inline RealStructureDescriptor toric_real_structure(const SurfaceModel& surface) {
  switch (surface.toric) {
    case ToricFamily::p2: return RealStructureDescriptor(1, {{"RP2", false}});
    case ToricFamily::f0:
    case ToricFamily::f2: return RealStructureDescriptor(0, {{"T2", true}});
    case ToricFamily::none: break;
  }
  throw InputError("surface " + surface.name + " has no toric real structure");
}

inline InvariantResult tropical_result(const SurfaceModel& surface, const DivisorClass& d, CountMode mode,
                                       Algorithm algorithm = Algorithm::floor_diagram, unsigned threads = 1) {
  InvariantResult res;
  res.surface = surface.name;
  res.class_coeffs = d.coeffs();
  res.real_structure = toric_real_structure(surface);
  res.r = points_required(surface, d);
  res.value = count(surface, d, mode, algorithm, threads);
  res.provenance = std::string(mode == CountMode::complex ? "complex count" : "tropical Welschinger count (all points real)") +
                   " via " + (algorithm == Algorithm::floor_diagram ? "floor diagrams" : "lattice paths");
  if (surface.toric == ToricFamily::f2 && d[1] != 0) res.provenance += "; tropical-only, no quadric counterpart";
  return res;
}

/// W_Q(dh) of the quadric ellipsoid, read off the tropical count of F2 in
/// class dB. The class is reported in the F0 basis, h = B1 + B2.
inline InvariantResult w_quadric_ellipsoid(int d, Algorithm algorithm = Algorithm::floor_diagram, unsigned threads = 1) {
  if (d < 1) throw InputError("quadric degree must be a positive integer");
  const auto& f2 = models::f2();
  const auto cls = f2.make_class({d, 0});
  InvariantResult res;
  res.surface = "Q";
  res.class_coeffs = {d, d};
  res.real_structure = RealStructureDescriptor(2, {{"S2", true}});
  res.r = points_required(f2, cls);
  res.value = count_welschinger_real(f2, cls, algorithm, threads);
  res.provenance = std::string("W_Q(dh) = tropical Welschinger count of F2 in class dB via ") +
                   (algorithm == Algorithm::floor_diagram ? "floor diagrams" : "lattice paths");
  return res;
}

}  // namespace wlab::tropical
