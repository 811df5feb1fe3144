#pragma once

#include <array>
#include <vector>

#include "ov/types.hpp"

namespace ov {

// Phase function theta(z) = -(sqrt3/2)(xi z - 1/z), xi = y/t.
cplx phase_theta(cplx z, double xi_ratio);

// d/dz theta
cplx phase_theta_deriv(cplx z, double xi_ratio);

// exp(2 i t theta(xi_n)) in the (y,t)-explicit form exp(-i sqrt3 (y xi - t/xi)),
// well defined at t = 0.
cplx evolution_factor(cplx xi, double y, double t);

enum class Region { I, II };

// Stationary-point geometry of the phase for given (y,t).
struct PhaseGeometry {
    double xi_ratio = 0.0;
    Region region = Region::II;
    double kappa = 0.0;                    // 1/sqrt(|xi|), region I only
    std::array<cplx, 6> phase_points{};    // (-1)^j w^n kappa, region I only
    bool has_interval = false;             // interval (-inf,-kappa) u (kappa,inf)

    // enumeration order: (n,j) = (0,0),(0,1),(1,0),(1,1),(2,0),(2,1)
    static int index(int n, int j) { return 2 * n + j; }
};

PhaseGeometry phase_geometry(double y, double t);

}  // namespace ov
