// Gauss hypergeometric function F(a,b,c;z) as the single-valued extension to
// C - {1} (limit from Im z > 0 on the cut (1,inf)), plus the Euler-integral
// oracle, the Gauss-Kummer limit, the classical quadratic transforms, the
// quarter-parameter transformation formula, and circuit matrices.
#ifndef THETAMEANS_HYPERGEOMETRIC_HPP
#define THETAMEANS_HYPERGEOMETRIC_HPP

#include <string_view>

#include "thetameans/scalar.hpp"

namespace thetameans {

// Parameter triple (a, b, c); construction rejects c within 1e-12 of a
// nonpositive integer on the real axis.
struct HParams {
    Cx a, b, c;
    HParams(Cx a_, Cx b_, Cx c_);
};

inline HParams params_half() { return {{0.5, 0}, {0.5, 0}, {1, 0}}; }
inline HParams params_quarter() { return {{0.25, 0}, {0.25, 0}, {1, 0}}; }
inline HParams params_three_quarter() { return {{0.75, 0}, {0.75, 0}, {1, 0}}; }

enum class EvalPath { kDirectSeries, kConnection1mz, kPfaff, kClosedFormLimit };
std::string_view eval_path_name(EvalPath p);

// Value plus evaluation diagnostics.
struct HValue {
    Cx value;
    int terms_used = 0;
    EvalPath path = EvalPath::kDirectSeries;
};

inline constexpr int kSeriesTermCap = 200000;

/// Direct power series on |z| < 1, term recurrence
/// t_{n+1} = t_n (a+n)(b+n) z / ((c+n)(1+n)); stops when |t_n| <= tol |S_n|
/// for 3 consecutive terms. tol must lie in [1e-16, 1e-6].
HValue hgf_series(const HParams& p, Cx z, double tol);

/// lim_{z->1, |z|<1} F(a,b,c;z) = Gamma(c)Gamma(c-a-b)/(Gamma(c-a)Gamma(c-b)).
/// Requires real parameters and Re(c-a-b) > 0 (domain_error otherwise, e.g.
/// for (3/4,3/4,1)).
Cx gauss_kummer(const HParams& p);

/// Single-valued extension of F(a,b,c;.) on C - {1}. Dispatch:
///   z = 1 exactly        -> gauss_kummer (or domain_error if divergent)
///   |z| <= 0.75          -> direct series
///   real z > 1           -> connection formula in 1-z, (1-z)^(c-a-b) taken
///                           with arg(1-z) = -pi (limit from Im z > 0)
///   Re z > 0.75, |1-z|<1 -> connection formula in 1-z
///   Re z <= 0, |z|>=0.75 -> Pfaff map z -> z/(z-1), then series
/// plus wide fallbacks (Pfaff while |z/(z-1)| <= 0.98, connection while
/// Re z >= 1/2 and |(z-1)/z| <= 0.98, raw series while |z| <= 0.995).
/// The connection formula needs real parameters with c-a-b non-integral;
/// where it is the only applicable route and that fails, invalid_parameter
/// is thrown. Points reachable by no route raise unsupported_region.
HValue hgf(const HParams& p, Cx z);

/// True if hgf(p, z) has an evaluation route (no evaluation performed).
bool hgf_supported(const HParams& p, Cx z);

/// Euler integral f2(z) = int_0^1 t^(b-1) (1-t)^(c-b-1) (1-tz)^(-a) dt
/// = B(b, c-b) F(a,b,c;z), by adaptive Gauss-Kronrod quadrature after
/// splitting at t = 1/2 and substituting t = u^2 resp. 1-t = u^2 at the
/// endpoints. Requires real parameters with Re b, Re(c-b), Re(1-a) > 0 and
/// real z in (-1, 1); absolute error <= quad_tol.
Cx euler_f2(const HParams& p, Cx z, double quad_tol);

enum class QuadTransform { kFE1, kFE2, kFE3 };

/// Both sides of the selected classical quadratic transformation, each
/// evaluated through hgf; |z| < 0.3 required. The caller asserts closeness.
///   FE1: F(a,b,2b; 4z/(1+z)^2)            = (1+z)^(2a) F(a,a-b+1/2,b+1/2; z^2)
///   FE2: F(a,b,(a+b+1)/2; z)              = F(a/2,b/2,(a+b+1)/2; 4z(1-z))
///   FE3: F(a,b,(a+b+1)/2; z)  = (1-2z) F((a+1)/2,(b+1)/2,(a+b+1)/2; 4z(1-z))
std::pair<Cx, Cx> quad_transform_check(QuadTransform which, Cx a, Cx b, Cx z);

/// Both sides of the quarter-parameter transformation formula
///   (2+sqrt(2+2w))/4 * F(1/4,1/4,1; 1-w^2)
///     = F(1/4,1/4,1; 1 - ((6 sqrt(2w+2)-w-3)/(2 sqrt(2w+2)+w+3))^2)
/// with the positive square root. w must lie in (w_min, w_max) and above -1.
std::pair<Cx, Cx> transform_quarter(double w, double w_min = 0.05, double w_max = 1.95);

// Complex 2x2 matrix (row major), for the circuit matrices.
struct CMat2 {
    Cx m11, m12, m21, m22;
};

/// Circuit matrices of the loops around 0 and 1 acting on the Euler-integral
/// solution basis:
///   M0 = [[e^(-2 pi i c), e^(-2 pi i b) - 1], [0, 1]]
///   M1 = [[e^(2 pi i (c-a-b)), 0], [1 - e^(-2 pi i a), 1]]
std::pair<CMat2, CMat2> circuit_matrices(const HParams& p);

} // namespace thetameans

#endif
