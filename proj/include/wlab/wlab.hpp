#pragma once

#include "wlab/ab_engine.hpp"
#include "wlab/bigint.hpp"
#include "wlab/error.hpp"
#include "wlab/fixture.hpp"
#include "wlab/multiplicity.hpp"
#include "wlab/surface_model.hpp"
#include "wlab/table.hpp"
#include "wlab/tropical/tropical.hpp"
#include "wlab/verify.hpp"
