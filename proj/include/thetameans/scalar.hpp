// Branch-aware scalar kernel: real Gamma/Beta and principal complex powers.
//
// Everything downstream (hypergeometric series, theta constants, mean
// iterations) reduces to these few primitives, so their contracts are kept
// deliberately narrow: Gamma and Beta on the positive real axis only, and
// complex powers with the argument convention arg(z) in (-pi, pi].
#ifndef THETAMEANS_SCALAR_HPP
#define THETAMEANS_SCALAR_HPP

#include <complex>

#include "thetameans/errors.hpp"

namespace thetameans {

using Cx = std::complex<double>;

// Side from which a point of the negative real axis (the arg = +-pi boundary
// of the principal branch) is approached.
enum class BoundarySide { kFromAbove, kFromBelow };

// Principal-branch selector. The arg range is fixed to (-pi, pi]; only the
// tie-break on the negative real axis is configurable.
struct BranchSpec {
    static constexpr double kArgMin = -3.14159265358979323846; // open end
    static constexpr double kArgMax = 3.14159265358979323846;  // closed end
    BoundarySide boundary_side = BoundarySide::kFromAbove;
};

inline constexpr BranchSpec kBranchAbove{BoundarySide::kFromAbove};
inline constexpr BranchSpec kBranchBelow{BoundarySide::kFromBelow};

/// Gamma(x) for real x > 0, relative error <= 1e-13.
/// Fixed Lanczos approximation (g = 7, 9 coefficients); arguments in (0, 1/2)
/// are lifted with one step of Gamma(x) = Gamma(x+1)/x, so no reflection is
/// ever needed.
double gamma_real(double x);

/// Beta(a, b) = Gamma(a)Gamma(b)/Gamma(a+b) for real a, b > 0.
double beta_real(double a, double b);

/// z^s with arg(z) in (-pi, pi]. On the negative real axis the branch is
/// picked by `branch.boundary_side`: from above gives arg = +pi, from below
/// arg = -pi. z = 0 requires s > 0 (result 0).
Cx cpow(Cx z, double s, BranchSpec branch = kBranchAbove);

} // namespace thetameans

#endif
