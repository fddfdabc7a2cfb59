#pragma once

#include "pgl/arithmetic.hpp"
#include "pgl/error.hpp"
#include "pgl/eval_result.hpp"
#include "pgl/explicit_formulas.hpp"
#include "pgl/gamma_series.hpp"
#include "pgl/moebius_transform.hpp"
#include "pgl/report.hpp"
#include "pgl/specfun.hpp"
#include "pgl/summation.hpp"
#include "pgl/verify.hpp"
#include "pgl/wide_real.hpp"
#include "pgl/zeta_zeros.hpp"
