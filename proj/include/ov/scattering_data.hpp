#pragma once

#include <optional>
#include <vector>

#include "ov/phase.hpp"
#include "ov/types.hpp"

namespace ov {

enum class PoleKind { type1, type2 };

// Discrete datum: base pole on the ray arg z = pi/6 plus norming constant.
struct BasePole {
    cplx xi;        // m e^{i pi/6}, m > 0
    cplx c;         // nonzero; regular profiles need c on the positive real ray
    PoleKind kind = PoleKind::type1;

    double modulus() const { return std::abs(xi); }
};

// arg tolerance for the pi/6 ray; poles from files are validated, not projected
inline constexpr double kPoleArgTol = 1e-12;

void validate_poles(const std::vector<BasePole>& poles);

// Sampled reflection coefficient on a uniform symmetric grid with monotone
// cubic (Fritsch–Carlson) interpolation for off-grid evaluation.
class ReflectionGrid {
  public:
    ReflectionGrid() = default;  // identically zero
    ReflectionGrid(double z_max, std::vector<cplx> samples);

    bool is_zero() const { return samples_.empty(); }
    double z_max() const { return z_max_; }
    std::size_t size() const { return samples_.size(); }
    const std::vector<cplx>& samples() const { return samples_; }
    double grid_point(std::size_t i) const;

    cplx operator()(double z) const;   // 0 outside [-z_max, z_max]
    double sup_abs() const;

  private:
    double z_max_ = 0.0;
    std::vector<cplx> samples_;
    std::vector<double> dre_, dim_;    // PCHIP endpoint slopes per interval node
};

struct ScatteringData {
    ReflectionGrid r;
    std::vector<BasePole> poles;

    bool reflectionless() const { return r.is_zero(); }
};

// One entry of the symmetry-expanded pole set.
struct OrbitPole {
    cplx xi;      // pole location
    cplx c;       // expanded norming constant (paper's c_{n+kN} rules)
    int slot_row = 0;   // residue slot E_{row,col} at this location
    int slot_col = 0;
    int base_index = 0;
    PoleKind kind = PoleKind::type1;
};

// Expand base poles to the full 6N orbit:
//   xi_{n+N} = w conj(xi_n), xi_{n+2N} = w xi_n, xi_{n+3N} = conj(xi_{n+2N}),
//   xi_{n+4N} = conj(xi_{n+N}), xi_{n+5N} = conj(xi_n),
// with constants c_{n+N} = conj(c_n) w, c_{n+2N} = c_n w,
//   c_{n+3N} = conj(c_{n+2N}), c_{n+4N} = conj(c_{n+N}), c_{n+5N} = conj(c_n).
// Ordering: the 3N upper-half-plane poles first, then their conjugates.
std::vector<OrbitPole> expand_orbit(const std::vector<BasePole>& poles);

}  // namespace ov
