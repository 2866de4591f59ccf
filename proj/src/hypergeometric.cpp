#include "thetameans/hypergeometric.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace thetameans {

namespace {

constexpr double kNearTol = 1e-12;        // "within tolerance of the real axis / an integer"
constexpr double kSeriesRadius = 0.75;    // direct-series dispatch radius
constexpr double kPfaffRatioMax = 0.999;  // |z/(z-1)| cap for mapped series
constexpr double kWideSeriesRadius = 0.995;
constexpr double kInternalTol = 1e-15;    // series tolerance used by hgf
constexpr double kPi = 3.14159265358979323846;

bool near_real(Cx v) { return std::abs(v.imag()) <= kNearTol; }

bool params_real(const HParams& p) {
    return near_real(p.a) && near_real(p.b) && near_real(p.c);
}

bool near_nonpos_int(double x) {
    const double r = std::round(x);
    return r <= 0.0 && std::abs(x - r) <= kNearTol;
}

bool near_integer(double x) { return std::abs(x - std::round(x)) <= kNearTol; }

// Real Gamma extended to negative non-integer arguments through the
// recurrence Gamma(x) = Gamma(x+k) / (x (x+1) ... (x+k-1)).
double gamma_signed(double x) {
    if (near_nonpos_int(x)) throw pole_error("gamma_signed: pole at nonpositive integer");
    if (x > 0.0) return gamma_real(x);
    const int k = static_cast<int>(std::ceil(0.5 - x));
    double prod = 1.0;
    for (int j = 0; j < k; ++j) prod *= (x + j);
    return gamma_real(x + k) / prod;
}

// Gamma(n1)Gamma(n2) / (Gamma(d1)Gamma(d2)); a pole in the denominator makes
// the whole coefficient vanish.
double gamma_ratio(double n1, double n2, double d1, double d2) {
    if (near_nonpos_int(d1) || near_nonpos_int(d2)) return 0.0;
    return gamma_signed(n1) * gamma_signed(n2) / (gamma_signed(d1) * gamma_signed(d2));
}

enum class Route { kNone, kGaussKummer, kSeries, kConnection, kConnectionBelow, kPfaff, kSeriesWide };

bool connection_usable(const HParams& p) {
    return params_real(p) && !near_integer((p.c - p.a - p.b).real());
}

bool sub_reachable(Cx w) {
    if (std::abs(w) <= kSeriesRadius) return true;
    if (std::abs(w / (w - 1.0)) <= kPfaffRatioMax) return true;
    return std::abs(w) <= kWideSeriesRadius;
}

Route plan_route(const HParams& p, Cx z) {
    if (z == Cx(1.0, 0.0))
        return (params_real(p) && (p.c - p.a - p.b).real() > 0.0) ? Route::kGaussKummer
                                                                  : Route::kNone;
    const double az = std::abs(z);
    if (az <= kSeriesRadius) return Route::kSeries;
    const bool conn = connection_usable(p);
    if (z.imag() == 0.0 && z.real() > 1.0)
        return (conn && sub_reachable(1.0 - z)) ? Route::kConnectionBelow : Route::kNone;
    if (conn && z.real() > kSeriesRadius && std::abs(1.0 - z) < 1.0) return Route::kConnection;
    // left half plane: the Pfaff ratio is < 1 everywhere, so route it
    // unconditionally; extreme |z| then surfaces as non_convergence at the
    // term cap rather than as an unsupported region
    if (z.real() <= 0.0 && az >= kSeriesRadius) return Route::kPfaff;
    if (std::abs(z / (z - 1.0)) <= kPfaffRatioMax) return Route::kPfaff;
    if (conn && z.real() >= 0.5 && sub_reachable(1.0 - z)) return Route::kConnection;
    if (az <= kWideSeriesRadius) return Route::kSeriesWide;
    return Route::kNone;
}

// Pfaff map z -> z/(z-1); valid while |z/(z-1)| < 1 (i.e. Re z < 1/2), where
// 1-z stays in the right half plane so the principal power is unambiguous.
HValue pfaff_eval(const HParams& p, Cx z) {
    const HParams mapped{p.a, p.c - p.b, p.c};
    HValue inner = hgf_series(mapped, z / (z - 1.0), kInternalTol);
    return {std::pow(Cx(1.0, 0.0) - z, -p.a) * inner.value, inner.terms_used, EvalPath::kPfaff};
}

// Evaluation of a connection-formula factor F(.;w).
HValue connection_sub(const HParams& p, Cx w) {
    if (std::abs(w) <= kSeriesRadius) return hgf_series(p, w, kInternalTol);
    if (std::abs(w / (w - 1.0)) <= kPfaffRatioMax) return pfaff_eval(p, w);
    if (std::abs(w) <= kWideSeriesRadius) return hgf_series(p, w, kInternalTol);
    throw unsupported_region("hgf: connection factor argument unreachable");
}

// Two-term connection formula in 1-z; requires real parameters with c-a-b
// non-integral. `below` selects arg(1-z) = -pi on the cut z in (1, inf),
// i.e. the limit of F from Im z > 0.
HValue connection_eval(const HParams& p, Cx z, bool below) {
    const double a = p.a.real(), b = p.b.real(), c = p.c.real();
    const double cab = c - a - b;
    const Cx w = Cx(1.0, 0.0) - z;
    const double coef_direct = gamma_ratio(c, cab, c - a, c - b);
    const double coef_power = gamma_ratio(c, -cab, a, b);
    const HValue f1 = connection_sub({a, b, a + b - c + 1.0}, w);
    const HValue f2 = connection_sub({c - a, c - b, cab + 1.0}, w);
    const Cx pw = cpow(w, cab, below ? kBranchBelow : kBranchAbove);
    return {coef_direct * f1.value + coef_power * pw * f2.value,
            f1.terms_used + f2.terms_used, EvalPath::kConnection1mz};
}

} // namespace

HParams::HParams(Cx a_, Cx b_, Cx c_) : a(a_), b(b_), c(c_) {
    const auto finite = [](Cx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); };
    if (!finite(a) || !finite(b) || !finite(c))
        throw invalid_parameter("HParams: parameters must be finite");
    if (near_real(c) && near_nonpos_int(c.real()))
        throw invalid_parameter("HParams: c must avoid 0, -1, -2, ...");
}

std::string_view eval_path_name(EvalPath p) {
    switch (p) {
        case EvalPath::kDirectSeries: return "direct-series";
        case EvalPath::kConnection1mz: return "connection-1mz";
        case EvalPath::kPfaff: return "pfaff";
        case EvalPath::kClosedFormLimit: return "closed-form-limit";
    }
    return "?";
}

HValue hgf_series(const HParams& p, Cx z, double tol) {
    if (!(tol >= 1e-16 && tol <= 1e-6))
        throw domain_error("hgf_series: tol must lie in [1e-16, 1e-6]");
    if (!(std::abs(z) < 1.0)) throw domain_error("hgf_series: requires |z| < 1");
    Cx term{1.0, 0.0};
    Cx sum{1.0, 0.0};
    int used = 1;
    int consec = 0;
    for (int n = 0; n < kSeriesTermCap; ++n) {
        const double dn = static_cast<double>(n);
        term *= (p.a + dn) * (p.b + dn) * z / ((p.c + dn) * (dn + 1.0));
        sum += term;
        ++used;
        if (std::abs(term) <= tol * std::abs(sum)) {
            if (++consec == 3) return {sum, used, EvalPath::kDirectSeries};
        } else {
            consec = 0;
        }
    }
    throw non_convergence("hgf_series: term cap reached before convergence");
}

Cx gauss_kummer(const HParams& p) {
    if (!params_real(p))
        throw invalid_parameter("gauss_kummer: real parameters required");
    const double a = p.a.real(), b = p.b.real(), c = p.c.real();
    if (!(c - a - b > 0.0))
        throw domain_error("gauss_kummer: requires Re(c-a-b) > 0");
    return {gamma_ratio(c, c - a - b, c - a, c - b), 0.0};
}

HValue hgf(const HParams& p, Cx z) {
    switch (plan_route(p, z)) {
        case Route::kGaussKummer:
            return {gauss_kummer(p), 0, EvalPath::kClosedFormLimit};
        case Route::kSeries:
        case Route::kSeriesWide:
            return hgf_series(p, z, kInternalTol);
        case Route::kConnection:
            return connection_eval(p, z, false);
        case Route::kConnectionBelow:
            return connection_eval(p, z, true);
        case Route::kPfaff:
            return pfaff_eval(p, z);
        case Route::kNone:
            break;
    }
    if (z == Cx(1.0, 0.0))
        throw domain_error("hgf: z = 1 diverges (Re(c-a-b) <= 0)");
    const bool conn_region = (z.imag() == 0.0 && z.real() > 1.0) ||
                             (z.real() > kSeriesRadius && std::abs(1.0 - z) < 1.0);
    if (conn_region && !connection_usable(p))
        throw invalid_parameter("hgf: connection formula required but c-a-b is integral");
    throw unsupported_region("hgf: no evaluation route for this z");
}

bool hgf_supported(const HParams& p, Cx z) {
    const Route r = plan_route(p, z);
    if (r == Route::kNone) return false;
    // a Pfaff-mapped series with ratio too near 1 would exceed the term cap;
    // callers use this predicate to keep sweep samples inside that budget
    if (r == Route::kPfaff) return std::abs(z / (z - 1.0)) <= 0.9995;
    return true;
}

namespace {

// 15-point Kronrod / 7-point Gauss pair (nodes for [-1, 1]).
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct Segment {
    double lo, hi, value, err;
};

Segment gk15(const std::function<double(double)>& f, double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    double acc_k = 0.0, acc_g = 0.0;
    for (int i = 0; i < 8; ++i) {
        if (kXgk[i] == 0.0) {
            const double v = f(mid);
            acc_k += kWgk[i] * v;
            acc_g += kWg[3] * v;
        } else {
            const double v = f(mid - half * kXgk[i]) + f(mid + half * kXgk[i]);
            acc_k += kWgk[i] * v;
            if (i % 2 == 1) acc_g += kWg[i / 2] * v;
        }
    }
    return {lo, hi, acc_k * half, std::abs(acc_k - acc_g) * half};
}

// Globally adaptive subdivision: always bisect the segment with the largest
// error estimate. Kronrod nodes are interior, so integrable endpoint
// singularities (left over after the u^2 substitution, e.g. u^(-1/2) for
// b = 1/4) only cost extra subdivisions near 0.
double adaptive_gk15(const std::function<double(double)>& f, double lo, double hi, double tol) {
    std::vector<Segment> segs{gk15(f, lo, hi)};
    constexpr int kMaxSegments = 4000;
    while (true) {
        double total_err = 0.0;
        std::size_t worst = 0;
        for (std::size_t i = 0; i < segs.size(); ++i) {
            total_err += segs[i].err;
            if (segs[i].err > segs[worst].err) worst = i;
        }
        if (total_err <= tol) break;
        if (segs.size() >= kMaxSegments)
            throw non_convergence("euler_f2: quadrature did not reach the requested tolerance");
        const Segment s = segs[worst];
        const double mid = 0.5 * (s.lo + s.hi);
        segs[worst] = gk15(f, s.lo, mid);
        segs.push_back(gk15(f, mid, s.hi));
    }
    double value = 0.0;
    for (const Segment& s : segs) value += s.value;
    return value;
}

} // namespace

Cx euler_f2(const HParams& p, Cx z, double quad_tol) {
    if (!params_real(p))
        throw domain_error("euler_f2: real parameters required");
    const double a = p.a.real(), b = p.b.real(), c = p.c.real();
    if (!(b > 0.0 && c - b > 0.0 && 1.0 - a > 0.0))
        throw domain_error("euler_f2: requires Re(b), Re(c-b), Re(1-a) > 0");
    if (std::abs(z.imag()) > 1e-14 || !(z.real() > -1.0 && z.real() < 1.0))
        throw domain_error("euler_f2: requires real z in (-1, 1)");
    if (!(quad_tol > 0.0)) throw domain_error("euler_f2: quad_tol must be positive");
    const double x = z.real();
    const double split = std::sqrt(0.5); // u-coordinate of t = 1/2
    // t = u^2 near t = 0
    const auto left = [&](double u) {
        const double u2 = u * u;
        return 2.0 * std::pow(u, 2.0 * b - 1.0) * std::pow(1.0 - u2, c - b - 1.0) *
               std::pow(1.0 - u2 * x, -a);
    };
    // 1 - t = u^2 near t = 1
    const auto right = [&](double u) {
        const double u2 = u * u;
        return 2.0 * std::pow(u, 2.0 * (c - b) - 1.0) * std::pow(1.0 - u2, b - 1.0) *
               std::pow(1.0 - (1.0 - u2) * x, -a);
    };
    const double v = adaptive_gk15(left, 0.0, split, 0.5 * quad_tol) +
                     adaptive_gk15(right, 0.0, split, 0.5 * quad_tol);
    return {v, 0.0};
}

std::pair<Cx, Cx> quad_transform_check(QuadTransform which, Cx a, Cx b, Cx z) {
    if (!(std::abs(z) < 0.3))
        throw domain_error("quad_transform_check: requires |z| < 0.3");
    const Cx one{1.0, 0.0};
    switch (which) {
        case QuadTransform::kFE1: {
            const Cx lhs = hgf({a, b, 2.0 * b}, 4.0 * z / ((one + z) * (one + z))).value;
            const Cx rhs = std::pow(one + z, 2.0 * a) *
                           hgf({a, a - b + 0.5, b + 0.5}, z * z).value;
            return {lhs, rhs};
        }
        case QuadTransform::kFE2: {
            const Cx cc = (a + b + 1.0) / 2.0;
            const Cx lhs = hgf({a, b, cc}, z).value;
            const Cx rhs = hgf({a / 2.0, b / 2.0, cc}, 4.0 * z * (one - z)).value;
            return {lhs, rhs};
        }
        case QuadTransform::kFE3: {
            const Cx cc = (a + b + 1.0) / 2.0;
            const Cx lhs = hgf({a, b, cc}, z).value;
            const Cx rhs = (one - 2.0 * z) *
                           hgf({(a + 1.0) / 2.0, (b + 1.0) / 2.0, cc}, 4.0 * z * (one - z)).value;
            return {lhs, rhs};
        }
    }
    throw domain_error("quad_transform_check: unknown transform");
}

std::pair<Cx, Cx> transform_quarter(double w, double w_min, double w_max) {
    if (!(w > -1.0)) throw domain_error("transform_quarter: requires w > -1");
    if (!(w > w_min && w < w_max))
        throw domain_error("transform_quarter: w outside the evaluation window");
    const HParams p = params_quarter();
    const double s = std::sqrt(2.0 + 2.0 * w); // positive root, takes 2 at w = 1
    const Cx lhs = (2.0 + s) / 4.0 * hgf(p, Cx(1.0 - w * w, 0.0)).value;
    const double ratio = (6.0 * s - w - 3.0) / (2.0 * s + w + 3.0);
    const Cx rhs = hgf(p, Cx(1.0 - ratio * ratio, 0.0)).value;
    return {lhs, rhs};
}

std::pair<CMat2, CMat2> circuit_matrices(const HParams& p) {
    const auto phase = [](Cx x) { return std::exp(Cx(0.0, 2.0 * kPi) * x); };
    const CMat2 m0{phase(-p.c), phase(-p.b) - 1.0, Cx(0.0, 0.0), Cx(1.0, 0.0)};
    const CMat2 m1{phase(p.c - p.a - p.b), Cx(0.0, 0.0), 1.0 - phase(-p.a), Cx(1.0, 0.0)};
    return {m0, m1};
}

} // namespace thetameans
