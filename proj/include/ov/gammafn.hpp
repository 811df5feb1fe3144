#pragma once

#include "ov/types.hpp"

namespace ov {

// Complex Gamma function, Lanczos approximation (g = 7, 9 coefficients),
// relative error below 1e-13 away from the poles.
cplx gamma_complex(cplx z);

}  // namespace ov
