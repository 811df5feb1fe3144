#include "ov/phase.hpp"

#include <cmath>

#include "ov/symmetry.hpp"

namespace ov {

cplx phase_theta(cplx z, double xi_ratio) {
    if (z == cplx(0.0, 0.0)) throw DomainGateError("phase_theta: z = 0");
    return -0.5 * kSqrt3 * (xi_ratio * z - 1.0 / z);
}

cplx phase_theta_deriv(cplx z, double xi_ratio) {
    if (z == cplx(0.0, 0.0)) throw DomainGateError("phase_theta_deriv: z = 0");
    return -0.5 * kSqrt3 * (xi_ratio + 1.0 / (z * z));
}

cplx evolution_factor(cplx xi, double y, double t) {
    if (xi == cplx(0.0, 0.0)) throw DomainGateError("evolution_factor: xi = 0");
    const cplx expo = cplx(0.0, -kSqrt3) * (y * xi - t / xi);
    return std::exp(expo);
}

PhaseGeometry phase_geometry(double y, double t) {
    if (!(t > 0.0)) throw DomainGateError("phase_geometry: t must be positive");
    const double xi = y / t;
    if (xi == 0.0)
        throw DomainGateError("phase_geometry: xi = y/t = 0 is on the region boundary");
    PhaseGeometry g;
    g.xi_ratio = xi;
    if (xi > 0.0) {
        g.region = Region::II;
        return g;
    }
    g.region = Region::I;
    g.kappa = 1.0 / std::sqrt(-xi);
    g.has_interval = true;
    const cplx w = omega();
    cplx rot(1.0, 0.0);
    for (int n = 0; n < 3; ++n) {
        g.phase_points[PhaseGeometry::index(n, 0)] = rot * g.kappa;
        g.phase_points[PhaseGeometry::index(n, 1)] = -rot * g.kappa;
        rot *= w;
    }
    return g;
}

}  // namespace ov
