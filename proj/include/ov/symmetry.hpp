#pragma once

#include "ov/types.hpp"

namespace ov {

// Spectral-plane constants shared by every module: the cube root of unity
// and the four permutation matrices entering the symmetry relations
//   M(z) = G1 conj(M(conj z)) G1 = G3 conj(M(w conj z)) G3 = G4 M(w z) G4^-1.
struct SymmetryConstants {
    cplx omega;          // e^{2 pi i/3}
    Mat3 gamma1, gamma2, gamma3, gamma4;

    static const SymmetryConstants& instance();
};

const cplx& omega();
const Mat3& gamma1();
const Mat3& gamma2();
const Mat3& gamma3();
const Mat3& gamma4();

// G X G^-1 for a permutation matrix G (G^-1 == G^T).
Mat3 conj_by(const Mat3& g, const Mat3& x);

}  // namespace ov
