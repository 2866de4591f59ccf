// Classical means, the auxiliary functions mu0 / nu / mu1 / mu2, the AGM and
// the (mu1, mu2) iteration, their limits, and the hypergeometric and
// theta-series expressions of those limits.
#ifndef THETAMEANS_MEANS_HPP
#define THETAMEANS_MEANS_HPP

#include <array>
#include <utility>
#include <vector>

#include "thetameans/scalar.hpp"

namespace thetameans {

double m_arith(double x, double y);
double m_geom(double x, double y);  // x, y > 0
double m_harm(double x, double y);  // x, y > 0

/// mu0(x,y) = m_G(x, m_A(x,y)) = sqrt(x (x+y) / 2); requires x > 0, x+y > 0.
double mu0(double x, double y);

/// nu(x,y) = 2 m_H(x,y) - m_A(x,y) = (6xy - x^2 - y^2) / (2(x+y));
/// requires x, y > 0. A mean only on x/3 <= y <= 3x; negative for
/// y > (3+2 sqrt2) x.
double nu(double x, double y);

/// mu1(x,y) = m_A(x, mu0(x,y)) = (2x + sqrt(2x(x+y))) / 4 on x > 0, x+y > 0.
double mu1(double x, double y);

/// mu2(x,y) = nu(x, mu0(x,y)) = x (6 sqrt(2x(x+y)) - y - 3x)
///            / (2 (2x + sqrt(2x(x+y)))) on x > 0, x+y > 0.
/// Evaluated through the composed form when x+y is small relative to x.
double mu2(double x, double y);

// Cones S_I = {(x, rx) : x > 0, r in I} used by the inequality suites.
enum class Cone {
    kMinus1Inf,  // r in (-1, inf):  x > 0, x+y > 0
    kMinus1One,  // r in (-1, 1]:    x > 0, -x < y <= x
    kZero17,     // r in (0, 17):    x, y > 0, y < 17x
    kThird3,     // r in (1/3, 3):   x > 0, x/3 < y < 3x
};

bool domain_contains(Cone cone, double x, double y);

/// Arithmetic-geometric mean; iterates (m_A, m_G) until |x_n - y_n| <=
/// tol * x_n. Requires x, y > 0.
double agm(double x, double y, double tol = 1e-15);

// One run of the (mu1, mu2) iteration.
struct IterTrace {
    std::vector<std::pair<double, double>> pairs; // (x_n, y_n), pairs[0] = start
    int n_ordered = 0;                            // first n with 0 < y_n <= x_n
    double limit = 0.0;
    int iterations = 0;
};

/// Iterates (x,y) -> (mu1(x,y), mu2(x,y)) from a start in x > 0, x+y > 0
/// until |x_n - y_n| <= tol * x_n; validates the sandwich monotonicity
/// y_n <= y_{n+1} <= x_{n+1} <= x_n for n >= max(n_ordered, 1) (allowing a
/// few ulps of slack) and records the first ordered index. Convergence is
/// quadratic; hitting the cap signals a bug.
IterTrace mu_iterate(double x, double y, double tol = 1e-14, int cap = 64);

/// x_N / F(1/4,1/4,1; 1 - y_N^2/x_N^2) read off the trace at N = n_ordered;
/// equals trace.limit up to the iteration tolerance.
double limit_via_hgf(const IterTrace& trace);

// Result of the theta-series expression check of a trace.
struct ThetaTraceReport {
    double tau_im = 0.0;              // pure-imaginary tau = t*i solving zeta(ti) = 1 - y^2/x^2
    double xi = 0.0;                  // x / theta_00(ti)^2
    std::array<double, 5> rel_err{};  // per k = 0..4: x_k vs xi * theta_00(2^k ti)^2
};

/// For 0 < y < x: solves zeta(t i) = 1 - y^2/x^2 by bisection on t in
/// [1, 20], then checks x_k = xi * theta_00(2^k t i)^2 for k = 0..4 against
/// the (mu1, mu2) iterates. Throws domain_error when the root is not
/// bracketed or the start is outside 0 < y < x.
ThetaTraceReport theta_trace_check(double x, double y);

} // namespace thetameans

#endif
