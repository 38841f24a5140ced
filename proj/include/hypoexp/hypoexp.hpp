#pragma once

// Umbrella header for the hypoexponential-CDF toolkit: exact routes
// (closed form + matrix exponential), the bounded-relative-error
// importance-sampling estimator, and the benchmark harness around them.

#include "hypoexp/bench.hpp"
#include "hypoexp/errors.hpp"
#include "hypoexp/exact.hpp"
#include "hypoexp/highprec.hpp"
#include "hypoexp/importance.hpp"
#include "hypoexp/matexp.hpp"
#include "hypoexp/problem.hpp"
#include "hypoexp/rates_io.hpp"
#include "hypoexp/rng.hpp"
#include "hypoexp/special.hpp"
#include "hypoexp/table.hpp"
