#include "ov/scattering_data.hpp"

#include <algorithm>
#include <cmath>

#include "ov/symmetry.hpp"

namespace ov {

void validate_poles(const std::vector<BasePole>& poles) {
    for (const auto& p : poles) {
        const double m = std::abs(p.xi);
        if (!(m > 0.0)) throw ValidationError("pole with zero modulus");
        if (std::abs(std::arg(p.xi) - kPi / 6.0) > kPoleArgTol)
            throw ValidationError("pole off the ray arg z = pi/6");
        if (!(std::abs(p.c) > 0.0)) throw ValidationError("zero norming constant");
    }
    for (std::size_t i = 0; i < poles.size(); ++i)
        for (std::size_t j = i + 1; j < poles.size(); ++j)
            if (std::abs(poles[i].xi - poles[j].xi) < 1e-12)
                throw ValidationError("duplicate base poles");
}

namespace {

// Fritsch–Carlson slopes for a uniformly sampled array.
std::vector<double> pchip_slopes(const std::vector<double>& v, double h) {
    const std::size_t n = v.size();
    std::vector<double> d(n, 0.0);
    if (n < 2) return d;
    std::vector<double> del(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) del[i] = (v[i + 1] - v[i]) / h;
    d[0] = del[0];
    d[n - 1] = del[n - 2];
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (del[i - 1] * del[i] <= 0.0) {
            d[i] = 0.0;
        } else {
            d[i] = 2.0 * del[i - 1] * del[i] / (del[i - 1] + del[i]);  // harmonic mean
        }
    }
    return d;
}

double pchip_eval(const std::vector<double>& v, const std::vector<double>& d,
                  double zmax, double z) {
    const std::size_t n = v.size();
    const double h = 2.0 * zmax / double(n - 1);
    double s = (z + zmax) / h;
    auto i = static_cast<std::ptrdiff_t>(std::floor(s));
    i = std::clamp<std::ptrdiff_t>(i, 0, static_cast<std::ptrdiff_t>(n) - 2);
    const double t = s - double(i);
    const double h00 = (1 + 2 * t) * (1 - t) * (1 - t);
    const double h10 = t * (1 - t) * (1 - t);
    const double h01 = t * t * (3 - 2 * t);
    const double h11 = t * t * (t - 1);
    return h00 * v[i] + h * h10 * d[i] + h01 * v[i + 1] + h * h11 * d[i + 1];
}

}  // namespace

ReflectionGrid::ReflectionGrid(double z_max, std::vector<cplx> samples)
    : z_max_(z_max), samples_(std::move(samples)) {
    if (samples_.size() < 4) throw ValidationError("reflection grid needs >= 4 samples");
    if (!(z_max_ > 0.0)) throw ValidationError("reflection grid needs z_max > 0");
    double sup = 0.0;
    for (const auto& s : samples_) sup = std::max(sup, std::abs(s));
    if (sup >= 1.0) throw ValidationError("reflection coefficient must satisfy sup|r| < 1");
    if (std::abs(samples_.front()) > 1e-8 || std::abs(samples_.back()) > 1e-8)
        throw ValidationError("reflection coefficient must decay to <1e-8 at the grid ends");
    const double h = 2.0 * z_max_ / double(samples_.size() - 1);
    std::vector<double> re(samples_.size()), im(samples_.size());
    for (std::size_t i = 0; i < samples_.size(); ++i) {
        re[i] = samples_[i].real();
        im[i] = samples_[i].imag();
    }
    dre_ = pchip_slopes(re, h);
    dim_ = pchip_slopes(im, h);
}

double ReflectionGrid::grid_point(std::size_t i) const {
    return -z_max_ + 2.0 * z_max_ * double(i) / double(samples_.size() - 1);
}

cplx ReflectionGrid::operator()(double z) const {
    if (is_zero() || std::abs(z) > z_max_) return {0.0, 0.0};
    std::vector<double> re(samples_.size()), im(samples_.size());
    for (std::size_t i = 0; i < samples_.size(); ++i) {
        re[i] = samples_[i].real();
        im[i] = samples_[i].imag();
    }
    return {pchip_eval(re, dre_, z_max_, z), pchip_eval(im, dim_, z_max_, z)};
}

double ReflectionGrid::sup_abs() const {
    double sup = 0.0;
    for (const auto& s : samples_) sup = std::max(sup, std::abs(s));
    return sup;
}

std::vector<OrbitPole> expand_orbit(const std::vector<BasePole>& poles) {
    validate_poles(poles);
    const cplx w = omega();
    std::vector<OrbitPole> out;
    out.reserve(6 * poles.size());
    // residue slot per orbit location, independent of pole type:
    //   m e^{i pi/6}: (3,1)   i m: (2,1)        m e^{i 5pi/6}: (2,3)
    //   m e^{-i pi/6}: (3,2)  -i m: (1,2)       m e^{-i 5pi/6}: (1,3)
    struct Loc { cplx z; cplx c; int r, col; };
    auto push = [&](int n, PoleKind k, std::initializer_list<Loc> locs) {
        for (const auto& l : locs)
            out.push_back({l.z, l.c, l.r, l.col, n, k});
    };
    // upper half plane first
    for (std::size_t n = 0; n < poles.size(); ++n) {
        const cplx xi = poles[n].xi, c = poles[n].c;
        const cplx xb = std::conj(xi), cb = std::conj(c);
        push(int(n), poles[n].kind,
             {{xi, c, 3, 1},                       // xi_n
              {w * xb, w * cb, 2, 1},              // xi_{n+N}  = i m
              {w * xi, w * c, 2, 3}});             // xi_{n+2N} = m e^{i5pi/6}
    }
    for (std::size_t n = 0; n < poles.size(); ++n) {
        const cplx xi = poles[n].xi, c = poles[n].c;
        const cplx xb = std::conj(xi), cb = std::conj(c);
        const cplx w2 = w * w;
        push(int(n), poles[n].kind,
             {{w2 * xb, w2 * cb, 1, 3},            // xi_{n+3N} = conj(xi_{n+2N}) = m e^{-i5pi/6}
              {w2 * xi, w2 * c, 1, 2},             // xi_{n+4N} = conj(xi_{n+N})  = -i m
              {xb, cb, 3, 2}});                    // xi_{n+5N} = conj(xi_n)
    }
    // configuration check: expansion must not collide
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = i + 1; j < out.size(); ++j)
            if (std::abs(out[i].xi - out[j].xi) < 1e-12)
                throw ValidationError("pole orbit collision: base poles too symmetric");
    return out;
}

}  // namespace ov
