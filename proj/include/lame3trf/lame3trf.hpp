#ifndef LAME3TRF_LAME3TRF_HPP
#define LAME3TRF_LAME3TRF_HPP

#include "error.hpp"
#include "power_series.hpp"
#include "scalar_kernels.hpp"
#include "lame_series.hpp"
#include "quadrature.hpp"
#include "integral_forms.hpp"
#include "generating_functions.hpp"

#endif
