#include "ov/quadrature.hpp"

#include <array>
#include <cmath>

namespace ov {

namespace {

// Gauss 7 / Kronrod 15 nodes and weights on [-1,1].
constexpr std::array<double, 8> kKronrodNodes = {
    0.000000000000000000000000000000000, 0.207784955007898467600689403773245,
    0.405845151377397166906606412076961, 0.586087235467691130294144838258730,
    0.741531185599394439863864773280788, 0.864864423359769072789712788640926,
    0.949107912342758524526189684047851, 0.991455371120812639206854697526329};
constexpr std::array<double, 8> kKronrodWeights = {
    0.209482141084727828012999174891714, 0.204432940075298892414161999234649,
    0.190350578064785409913256402421014, 0.169004726639267902826583426598550,
    0.140653259715525918745189590510238, 0.104790010322250183839876322541518,
    0.063092092629978553290700663189204, 0.022935322010529224963732008058970};
constexpr std::array<double, 4> kGaussWeights = {
    0.417959183673469387755102040816327, 0.381830050505118944950369775488975,
    0.279705391489276667901467771423780, 0.129484966168869693270611432679082};

struct Panel {
    cplx value;
    double err;
};

Panel gk15(const std::function<cplx(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    cplx kron = kKronrodWeights[0] * f(c);
    cplx gauss = kGaussWeights[0] * f(c);
    for (int i = 1; i < 8; ++i) {
        const cplx fp = f(c + h * kKronrodNodes[i]);
        const cplx fm = f(c - h * kKronrodNodes[i]);
        kron += kKronrodWeights[i] * (fp + fm);
        if (i % 2 == 0) gauss += kGaussWeights[i / 2] * (fp + fm);
    }
    Panel p;
    p.value = kron * h;
    p.err = std::abs(kron - gauss) * std::abs(h);
    return p;
}

cplx adapt(const std::function<cplx(double)>& f, double a, double b, double tol_abs,
           int depth, int max_depth) {
    const Panel p = gk15(f, a, b);
    if (p.err <= tol_abs || depth >= max_depth) return p.value;
    const double c = 0.5 * (a + b);
    return adapt(f, a, c, tol_abs / 2, depth + 1, max_depth) +
           adapt(f, c, b, tol_abs / 2, depth + 1, max_depth);
}

}  // namespace

cplx integrate_gk(const std::function<cplx(double)>& f, double a, double b, double rel_tol,
                  int max_depth) {
    if (a == b) return {0.0, 0.0};
    const Panel probe = gk15(f, a, b);
    const double scale = std::max(std::abs(probe.value), 1e-30);
    return adapt(f, a, b, rel_tol * scale, 0, max_depth);
}

cplx cauchy_integral(const std::function<cplx(double)>& f, double a, double b, cplx z,
                     double rel_tol) {
    return integrate_gk([&](double s) { return f(s) / (s - z); }, a, b, rel_tol);
}

cplx cauchy_principal_value(const std::function<cplx(double)>& f, double a, double b,
                            double x0, double rel_tol) {
    if (!(x0 > a && x0 < b))
        throw DomainGateError("cauchy_principal_value: x0 must be interior");
    const cplx f0 = f(x0);
    // subtract the singular part; the remainder has a removable singularity
    auto reg = [&](double s) {
        const double d = s - x0;
        if (std::abs(d) < 1e-14) {
            const double h = 1e-7 * std::max(1.0, std::abs(x0));
            return (f(x0 + h) - f(x0 - h)) / (2.0 * h);  // f'(x0)
        }
        return (f(s) - f0) / d;
    };
    const cplx smooth = integrate_gk(reg, a, x0, rel_tol) + integrate_gk(reg, x0, b, rel_tol);
    return smooth + f0 * std::log((b - x0) / (x0 - a));
}

}  // namespace ov
