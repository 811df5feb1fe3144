#include "ov/soliton.hpp"

#include <algorithm>
#include <cmath>

#include "ov/phase.hpp"
#include "ov/symmetry.hpp"

namespace ov {

namespace {

struct PoleSpec {
    cplx pole;
    int row, col;
    cplx sigma;        // scalar = sigma * E_n, |sigma| = |c|
    int base_index;
};

// Residue table of one orbit. The anchor carrying the plain constant sits at
// the orbit point whose slot exponent is real: i*m for type-1 (slot (2,1)),
// m e^{i5pi/6} for type-2 (slot (2,3)). The remaining five entries follow the
// symmetry expansion rules applied from that anchor.
void orbit_entries(const BasePole& p, int base_index, std::vector<PoleSpec>& out) {
    const cplx w = omega();
    const cplx w2 = w * w;
    const double m = p.modulus();
    const cplx c = p.c, cb = std::conj(p.c);
    const cplx anchor = (p.kind == PoleKind::type1) ? cplx(0.0, m)
                                                    : m * std::polar(1.0, 5.0 * kPi / 6.0);
    const cplx ab = std::conj(anchor);
    // slots per location (fixed):
    auto slot = [&](const cplx& z) -> std::pair<int, int> {
        const double a = std::arg(z);
        const double tol = 1e-9;
        if (std::abs(a - kPi / 2) < tol) return {2, 1};        // i m
        if (std::abs(a - 5 * kPi / 6) < tol) return {2, 3};    // m e^{i5pi/6}
        if (std::abs(a - kPi / 6) < tol) return {3, 1};        // m e^{ipi/6}
        if (std::abs(a + kPi / 2) < tol) return {1, 2};
        if (std::abs(a + 5 * kPi / 6) < tol) return {1, 3};
        if (std::abs(a + kPi / 6) < tol) return {3, 2};
        throw NumericError("orbit point off the six rays");
    };
    auto add = [&](cplx z, cplx sc) {
        auto [r, c_] = slot(z);
        out.push_back({z, r, c_, sc, base_index});
    };
    add(anchor, c);
    add(w * ab, w * cb);
    add(w * anchor, w * c);
    add(std::conj(w * anchor), w2 * cb);
    add(std::conj(w * ab), w2 * c);
    add(ab, cb);
}

// exponent of the orbit's common real evolution factor
double orbit_exponent(double m, double y, double t) {
    return kSqrt3 * (m * y + t / m);
}

// Saturated-limit residues of one orbit: the coupling rows
//    -sum_{q != p, slot_col(q) = slot_row(p)} v_q[i]/(p - q) = delta_{i,row(p)}
// (the finite system with the scalar factored out and sent to infinity).
void solve_saturated(std::vector<ResidueEntry>& entries, const std::vector<int>& idx) {
    const int n = int(idx.size());
    Eigen::MatrixXcd K = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        const auto& pi = entries[idx[i]];
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            const auto& pj = entries[idx[j]];
            if (pj.slot_col == pi.slot_row) K(i, j) -= 1.0 / (pi.pole - pj.pole);
        }
    }
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(K);
    for (int comp = 1; comp <= 3; ++comp) {
        Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(n);
        for (int i = 0; i < n; ++i)
            if (entries[idx[i]].slot_row == comp) rhs(i) = 1.0;
        Eigen::VectorXcd v = lu.solve(rhs);
        if (!v.allFinite()) throw NumericError("saturated orbit system is singular");
        for (int i = 0; i < n; ++i) entries[idx[i]].v(comp - 1) = v(i);
    }
}

}  // namespace

cplx ResidueCoefficients::alpha(int n, int j) const {
    for (const auto& e : entries)
        if (e.base_index == n && e.pole.imag() > 0 &&
            std::abs(std::arg(e.pole) - (kPi / 6 + j * kPi / 3)) < 1e-9)
            return e.v(0);
    throw ValidationError("no such orbit pole");
}
cplx ResidueCoefficients::beta(int n, int j) const {
    for (const auto& e : entries)
        if (e.base_index == n && e.pole.imag() > 0 &&
            std::abs(std::arg(e.pole) - (kPi / 6 + j * kPi / 3)) < 1e-9)
            return e.v(1);
    throw ValidationError("no such orbit pole");
}
cplx ResidueCoefficients::gamma(int n, int j) const {
    for (const auto& e : entries)
        if (e.base_index == n && e.pole.imag() > 0 &&
            std::abs(std::arg(e.pole) - (kPi / 6 + j * kPi / 3)) < 1e-9)
            return e.v(2);
    throw ValidationError("no such orbit pole");
}

double interaction_shift(double m_k, double m_n) {
    const cplx p(0.0, m_k);
    const double f = (m_k - m_n) / (m_k + m_n);
    const cplx num = (p - m_n * std::polar(1.0, kPi / 6)) * (p - m_n * std::polar(1.0, 5 * kPi / 6));
    const cplx den = (p - m_n * std::polar(1.0, -kPi / 6)) * (p - m_n * std::polar(1.0, -5 * kPi / 6));
    return f * f * (num / den).real();
}

ResidueCoefficients assemble_and_solve(const ScatteringData& data, double y, double t) {
    if (!data.reflectionless())
        throw ValidationError("assemble_and_solve: data must be reflectionless (r == 0)");
    validate_poles(data.poles);

    ResidueCoefficients out;
    out.y = y;
    out.t = t;
    const std::size_t nb = data.poles.size();
    if (nb == 0) return out;

    // classify orbits by the real exponent of their evolution factor
    std::vector<double> expo(nb);
    std::vector<int> state(nb);  // 0 active, +1 saturated, -1 vanished
    for (std::size_t n = 0; n < nb; ++n) {
        expo[n] = orbit_exponent(data.poles[n].modulus(), y, t);
        state[n] = expo[n] > kSaturationExponent ? 1 : (expo[n] < -kSaturationExponent ? -1 : 0);
    }

    // active orbits see saturated ones through the asymptotic constant shift
    std::vector<PoleSpec> specs;
    std::vector<cplx> scalars;  // full scalar per entry (active entries only)
    for (std::size_t n = 0; n < nb; ++n) {
        BasePole p = data.poles[n];
        if (state[n] == 0) {
            double shift = 1.0;
            for (std::size_t k = 0; k < nb; ++k)
                if (k != n && state[k] == 1)
                    shift *= interaction_shift(p.modulus(), data.poles[k].modulus());
            p.c *= shift;
        }
        std::vector<PoleSpec> orb;
        orbit_entries(p, int(n), orb);
        for (auto& s : orb) specs.push_back(s);
    }

    out.entries.reserve(specs.size());
    std::vector<int> active_rows;
    std::vector<int> sat_orbit_start(nb, -1);
    for (std::size_t i = 0; i < specs.size(); ++i) {
        const auto& s = specs[i];
        ResidueEntry e;
        e.pole = s.pole;
        e.slot_row = s.row;
        e.slot_col = s.col;
        e.base_index = s.base_index;
        e.v.setZero();
        const int st = state[s.base_index];
        if (st == 0) {
            e.scalar = s.sigma * std::exp(expo[s.base_index]);
            active_rows.push_back(int(i));
        } else if (st == 1) {
            e.scalar = cplx(0.0, 0.0);  // infinite in the limit; flagged instead
            e.saturated = true;
        } else {
            e.scalar = cplx(0.0, 0.0);
        }
        out.entries.push_back(e);
    }

    // saturated orbits: solve each alone in the saturated limit
    for (std::size_t n = 0; n < nb; ++n) {
        if (state[n] != 1) continue;
        std::vector<int> idx;
        for (std::size_t i = 0; i < out.entries.size(); ++i)
            if (out.entries[i].base_index == int(n)) idx.push_back(int(i));
        solve_saturated(out.entries, idx);
    }

    // active joint system in the sqrt-renormalized parametrization:
    //   vhat_p - sum_{q: col(q)=row(p)} sqrt(s_p s_q)/(p-q) vhat_q = sqrt(s_p) delta_{i,row(p)}
    const int na = int(active_rows.size());
    if (na > 0) {
        std::vector<cplx> sq(na);
        for (int i = 0; i < na; ++i) sq[i] = std::sqrt(out.entries[active_rows[i]].scalar);
        Eigen::MatrixXcd K = Eigen::MatrixXcd::Identity(na, na);
        for (int i = 0; i < na; ++i) {
            const auto& pi = out.entries[active_rows[i]];
            for (int j = 0; j < na; ++j) {
                if (j == i) continue;
                const auto& pj = out.entries[active_rows[j]];
                if (pj.slot_col == pi.slot_row)
                    K(i, j) -= sq[i] * sq[j] / (pi.pole - pj.pole);
            }
        }
        Eigen::PartialPivLU<Eigen::MatrixXcd> lu(K);
        Eigen::MatrixXcd rhs = Eigen::MatrixXcd::Zero(na, 3);
        for (int i = 0; i < na; ++i)
            rhs(i, out.entries[active_rows[i]].slot_row - 1) = sq[i];
        Eigen::MatrixXcd vhat = lu.solve(rhs);
        if (!vhat.allFinite())
            throw NumericError("reflectionless system solve failed (singular)");
        // residual on the row-equilibrated system
        Eigen::MatrixXcd resid = K * vhat - rhs;
        double rinf = 0.0;
        for (int i = 0; i < na; ++i) {
            const double rowscale = std::max(1.0, K.row(i).cwiseAbs().maxCoeff());
            rinf = std::max(rinf, resid.row(i).cwiseAbs().maxCoeff() / rowscale);
        }
        out.residual_inf = rinf;
        for (int i = 0; i < na; ++i)
            for (int comp = 0; comp < 3; ++comp)
                out.entries[active_rows[i]].v(comp) = sq[i] * vhat(i, comp);
    }
    return out;
}

Mat3 eval_Msol(const ResidueCoefficients& coeffs, cplx z) {
    Mat3 M = Mat3::Identity();
    for (const auto& e : coeffs.entries) {
        const cplx d = z - e.pole;
        if (std::abs(d) < 1e-10) throw DomainGateError("eval_Msol: z within 1e-10 of a pole");
        M.col(e.slot_col - 1) += e.v / d;
    }
    return M;
}

OuterSolution outer_taylor(const ResidueCoefficients& coeffs) {
    OuterSolution o;
    o.coeffs = coeffs;
    o.y = coeffs.y;
    o.t = coeffs.t;
    for (const auto& e : coeffs.entries) {
        o.M0.col(e.slot_col - 1) -= e.v / e.pole;
        o.M1.col(e.slot_col - 1) -= e.v / (e.pole * e.pole);
    }
    return o;
}

double x_of_y(const OuterSolution& outer, double y) {
    const cplx den = outer.M0(0, 2) + outer.M0(1, 2) + outer.M0(2, 2);
    const cplx num = outer.M1(0, 2) + outer.M1(1, 2) + outer.M1(2, 2);
    if (std::abs(den) < 1e-12)
        throw NumericError("x_of_y: reconstruction singularity (vanishing denominator)");
    const cplx corr = num / den;
    if (std::abs(corr.imag()) > 1e-9 * std::max(1.0, std::abs(corr)))
        throw NumericError("x_of_y: correction has non-negligible imaginary part");
    return y + corr.real();
}

double x_of_y(const ScatteringData& data, double y, double t) {
    return x_of_y(outer_taylor(assemble_and_solve(data, y, t)), y);
}

double u_of_y(const ScatteringData& data, double y, double t, double h) {
    if (h <= 0.0) h = 1e-4 * std::max(1.0, std::abs(t));
    auto x_at = [&](double tt) { return x_of_y(data, y, tt); };
    if (t >= h) {
        auto central = [&](double hh) { return (x_at(t + hh) - x_at(t - hh)) / (2.0 * hh); };
        const double d1 = central(h), d2 = central(h / 2);
        return (4.0 * d2 - d1) / 3.0;
    }
    // one-sided second-order stencil at the t = 0 edge, Richardson-extrapolated
    auto onesided = [&](double hh) {
        return (-3.0 * x_at(t) + 4.0 * x_at(t + hh) - x_at(t + 2 * hh)) / (2.0 * hh);
    };
    const double d1 = onesided(h), d2 = onesided(h / 2);
    return (4.0 * d2 - d1) / 3.0;
}

SolitonPoint single_loop_soliton(double rho, double phi, double c_hat, double y, double t) {
    if (!(rho > 0.0)) throw ValidationError("single_loop_soliton: rho must be positive");
    if (!(c_hat > 0.0)) throw ValidationError("single_loop_soliton: c_hat must be positive");
    const double A = std::cos(phi + kPi / 3.0);
    const double ehat = (2.0 * kSqrt3 * rho / c_hat) * std::exp(-kSqrt3 * rho * (y + t / (rho * rho)));
    const double den = 1.0 - 4.0 * A * ehat + ehat * ehat;
    if (std::abs(den) < 1e-12) throw NumericError("single_loop_soliton: singular profile");
    SolitonPoint p;
    p.u = (12.0 / (rho * rho)) * ehat * (A - ehat + A * ehat * ehat) / (den * den);
    p.x = y + (2.0 * kSqrt3 / rho) * (-2.0 * A * ehat + ehat * ehat) / den;
    return p;
}

ParametricProfile profile(const ScatteringData& data, const std::vector<double>& y_grid,
                          double t) {
    for (std::size_t i = 1; i < y_grid.size(); ++i)
        if (!(y_grid[i] > y_grid[i - 1]))
            throw ValidationError("profile: y grid must be strictly increasing");
    ParametricProfile pr;
    pr.t = t;
    pr.y = y_grid;
    pr.x.resize(y_grid.size());
    pr.u.resize(y_grid.size());
    for (std::size_t i = 0; i < y_grid.size(); ++i) {
        try {
            pr.x[i] = x_of_y(data, y_grid[i], t);
            pr.u[i] = u_of_y(data, y_grid[i], t);
        } catch (const std::exception& ex) {
            throw NumericError("profile failed at y = " + std::to_string(y_grid[i]) + ": " +
                               ex.what());
        }
    }
    pr.monotone_x = true;
    for (std::size_t i = 1; i < pr.x.size(); ++i)
        if (!(pr.x[i] > pr.x[i - 1])) pr.monotone_x = false;
    return pr;
}

}  // namespace ov
