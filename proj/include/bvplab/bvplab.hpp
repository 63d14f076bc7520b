#pragma once

// Umbrella header: the whole laboratory in one include.

#include "bvplab/ascent.hpp"
#include "bvplab/energy.hpp"
#include "bvplab/grid.hpp"
#include "bvplab/hypotheses.hpp"
#include "bvplab/interpolation.hpp"
#include "bvplab/nonlinearity.hpp"
#include "bvplab/primitive.hpp"
#include "bvplab/quadrature.hpp"
#include "bvplab/random.hpp"
#include "bvplab/report_io.hpp"
#include "bvplab/run_config.hpp"
#include "bvplab/shooting.hpp"
#include "bvplab/variational.hpp"
