#ifndef LAME3TRF_ERROR_HPP
#define LAME3TRF_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lame3trf
{

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A parameter lies outside the domain of the operation.
struct invalid_parameter : error {
    using error::error;
};

// A non-terminating series failed to reach tolerance.
struct non_convergence : error {
    using error::error;
};

// Evaluation requested at a singular point of an equation or kernel.
struct singular_point : error {
    using error::error;
};

// A contour or rational expression hit a pole.
struct pole_error : error {
    using error::error;
};

struct index_error : error {
    using error::error;
};

} // namespace lame3trf

#endif
