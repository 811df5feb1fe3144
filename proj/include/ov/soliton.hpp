#pragma once

#include <vector>

#include "ov/scattering_data.hpp"
#include "ov/types.hpp"

namespace ov {

// One rank-one residue of the pole expansion
//   M(z) = I + sum_p R_p/(z - p),  R_p = v_p e_{col}^T.
struct ResidueEntry {
    cplx pole;
    int slot_row = 0;   // E_{row,col} pattern the residue satisfies
    int slot_col = 0;
    cplx scalar;        // coupling scalar s_p (0 for vanished/saturated entries)
    Vec3 v;             // solved residue column
    int base_index = 0;
    bool saturated = false;
};

// Solved reflectionless system at one (y,t).
struct ResidueCoefficients {
    std::vector<ResidueEntry> entries;
    double residual_inf = 0.0;   // sup-norm residual of the (equilibrated) solve
    double y = 0.0, t = 0.0;

    // (B.5)-style accessors: alpha/beta/gamma are rows 1..3 of the residue
    // column at upper-half pole j of base pole n.
    cplx alpha(int n, int j) const;
    cplx beta(int n, int j) const;
    cplx gamma(int n, int j) const;
};

// Taylor data of M at z = 0 plus the residue blocks.
struct OuterSolution {
    Mat3 M0 = Mat3::Identity();
    Mat3 M1 = Mat3::Zero();
    ResidueCoefficients coeffs;
    double y = 0.0, t = 0.0;
};

struct ParametricProfile {
    std::vector<double> y, x, u;
    double t = 0.0;
    bool monotone_x = true;
};

// Exponent saturation threshold: orbits whose residue exponent exceeds this
// are treated as fully decoupled (saturated limit), below the negative as absent.
inline constexpr double kSaturationExponent = 600.0;

ResidueCoefficients assemble_and_solve(const ScatteringData& data, double y, double t);

Mat3 eval_Msol(const ResidueCoefficients& coeffs, cplx z);

OuterSolution outer_taylor(const ResidueCoefficients& coeffs);

double x_of_y(const OuterSolution& outer, double y);

// convenience: assemble + taylor + reconstruct at (y,t)
double x_of_y(const ScatteringData& data, double y, double t);

// u = dx/dt at fixed y (central Richardson differences; one-sided near t=0)
double u_of_y(const ScatteringData& data, double y, double t, double h = 0.0);

struct SolitonPoint {
    double x, u;
};

// Closed-form single loop soliton. The exponential prefactor of e-hat is the
// empirically locked resolution of the printed constant:
//   e-hat = (2 sqrt3 rho / c_hat) exp(-sqrt3 rho (y + t/rho^2)).
// The profile solves the PDE only on the slice cos(phi + pi/3) = -1/2.
SolitonPoint single_loop_soliton(double rho, double phi, double c_hat, double y, double t);

ParametricProfile profile(const ScatteringData& data, const std::vector<double>& y_grid,
                          double t);

// Asymptotic per-soliton constant of an orbit within a multi-orbit solution:
// c_eff = c * prod over faster orbits (m_n < m_k) of the interaction factor.
double interaction_shift(double m_k, double m_n);

}  // namespace ov
