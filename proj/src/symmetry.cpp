#include "ov/symmetry.hpp"

namespace ov {

const SymmetryConstants& SymmetryConstants::instance() {
    static const SymmetryConstants s = [] {
        SymmetryConstants c;
        c.omega = std::polar(1.0, 2.0 * kPi / 3.0);
        c.gamma1 << 0, 1, 0, 1, 0, 0, 0, 0, 1;
        c.gamma2 << 0, 0, 1, 0, 1, 0, 1, 0, 0;
        c.gamma3 << 1, 0, 0, 0, 0, 1, 0, 1, 0;
        c.gamma4 << 0, 0, 1, 1, 0, 0, 0, 1, 0;
        return c;
    }();
    return s;
}

const cplx& omega() { return SymmetryConstants::instance().omega; }
const Mat3& gamma1() { return SymmetryConstants::instance().gamma1; }
const Mat3& gamma2() { return SymmetryConstants::instance().gamma2; }
const Mat3& gamma3() { return SymmetryConstants::instance().gamma3; }
const Mat3& gamma4() { return SymmetryConstants::instance().gamma4; }

Mat3 conj_by(const Mat3& g, const Mat3& x) { return g * x * g.transpose(); }

}  // namespace ov
