#include "thetameans/means.hpp"

#include <cmath>

#include "thetameans/hypergeometric.hpp"
#include "thetameans/theta.hpp"

namespace thetameans {

namespace {

void require_finite(double x, double y, const char* who) {
    if (!std::isfinite(x) || !std::isfinite(y))
        throw domain_error(std::string(who) + ": arguments must be finite");
}

void require_cone_m1inf(double x, double y, const char* who) {
    require_finite(x, y, who);
    if (!(x > 0.0 && x + y > 0.0))
        throw domain_error(std::string(who) + ": requires x > 0 and x + y > 0");
}

} // namespace

double m_arith(double x, double y) {
    require_finite(x, y, "m_arith");
    return (x + y) / 2.0;
}

double m_geom(double x, double y) {
    require_finite(x, y, "m_geom");
    if (!(x > 0.0 && y > 0.0)) throw domain_error("m_geom: requires x, y > 0");
    return std::sqrt(x * y);
}

double m_harm(double x, double y) {
    require_finite(x, y, "m_harm");
    if (!(x > 0.0 && y > 0.0)) throw domain_error("m_harm: requires x, y > 0");
    return 2.0 * x * y / (x + y);
}

double mu0(double x, double y) {
    require_cone_m1inf(x, y, "mu0");
    return std::sqrt(x * (x + y) / 2.0);
}

double nu(double x, double y) {
    require_finite(x, y, "nu");
    if (!(x > 0.0 && y > 0.0)) throw domain_error("nu: requires x, y > 0");
    return (6.0 * x * y - x * x - y * y) / (2.0 * (x + y));
}

double mu1(double x, double y) {
    require_cone_m1inf(x, y, "mu1");
    return (2.0 * x + std::sqrt(2.0 * x * (x + y))) / 4.0;
}

double mu2(double x, double y) {
    require_cone_m1inf(x, y, "mu2");
    // The composed form nu(x, mu0) avoids the cancellation of the closed-form
    // numerator when x + y is small against x; both forms agree to 1e-13 in
    // the overlap (property-tested).
    if (x + y < 0.125 * x) {
        const double m = mu0(x, y);
        return (6.0 * x * m - x * x - m * m) / (2.0 * (x + m));
    }
    const double s = std::sqrt(2.0 * x * (x + y));
    return x * (6.0 * s - y - 3.0 * x) / (2.0 * (2.0 * x + s));
}

bool domain_contains(Cone cone, double x, double y) {
    if (!std::isfinite(x) || !std::isfinite(y) || !(x > 0.0)) return false;
    switch (cone) {
        case Cone::kMinus1Inf: return x + y > 0.0;
        case Cone::kMinus1One: return -x < y && y <= x;
        case Cone::kZero17: return y > 0.0 && y < 17.0 * x;
        case Cone::kThird3: return x / 3.0 < y && y < 3.0 * x;
    }
    return false;
}

double agm(double x, double y, double tol) {
    require_finite(x, y, "agm");
    if (!(x > 0.0 && y > 0.0)) throw domain_error("agm: requires x, y > 0");
    if (!(tol > 0.0)) throw domain_error("agm: tol must be positive");
    for (int n = 0; n < 128; ++n) {
        if (std::abs(x - y) <= tol * x) return x;
        const double a = (x + y) / 2.0;
        const double g = std::sqrt(x * y);
        x = a;
        y = g;
    }
    throw non_convergence("agm: iteration cap reached");
}

IterTrace mu_iterate(double x, double y, double tol, int cap) {
    require_cone_m1inf(x, y, "mu_iterate");
    if (!(tol > 0.0) || cap <= 0) throw domain_error("mu_iterate: bad tol or cap");
    IterTrace trace;
    trace.pairs.emplace_back(x, y);
    while (!(std::abs(x - y) <= tol * x)) {
        if (trace.iterations >= cap)
            throw non_convergence("mu_iterate: cap reached; convergence should be quadratic");
        const double nx = mu1(x, y);
        const double ny = mu2(x, y);
        x = nx;
        y = ny;
        trace.pairs.emplace_back(x, y);
        ++trace.iterations;
    }
    trace.limit = x;
    // first index with 0 < y_n <= x_n (the proof gives n <= 2; found by scan)
    int ordered = -1;
    for (std::size_t n = 0; n < trace.pairs.size(); ++n) {
        if (trace.pairs[n].second > 0.0 && trace.pairs[n].second <= trace.pairs[n].first) {
            ordered = static_cast<int>(n);
            break;
        }
    }
    if (ordered < 0) throw numerics_bug("mu_iterate: no ordered index found");
    trace.n_ordered = ordered;
    // sandwich monotonicity with a few ulps of slack
    const double slack = 1e-13 * trace.pairs[std::min<std::size_t>(1, trace.pairs.size() - 1)].first;
    for (std::size_t n = std::max(ordered, 1); n + 1 < trace.pairs.size(); ++n) {
        const auto [xn, yn] = trace.pairs[n];
        const auto [xn1, yn1] = trace.pairs[n + 1];
        if (!(yn <= yn1 + slack && yn1 <= xn1 + slack && xn1 <= xn + slack))
            throw numerics_bug("mu_iterate: sandwich monotonicity violated");
    }
    if (!(trace.limit > 0.0)) throw numerics_bug("mu_iterate: non-positive limit");
    return trace;
}

double limit_via_hgf(const IterTrace& trace) {
    if (trace.pairs.empty()) throw domain_error("limit_via_hgf: empty trace");
    const auto [xn, yn] = trace.pairs[static_cast<std::size_t>(trace.n_ordered)];
    const double r = yn / xn;
    const HValue f = hgf(params_quarter(), Cx(1.0 - r * r, 0.0));
    return xn / f.value.real();
}

ThetaTraceReport theta_trace_check(double x, double y) {
    require_finite(x, y, "theta_trace_check");
    if (!(0.0 < y && y < x))
        throw domain_error("theta_trace_check: requires 0 < y < x");
    const double target = 1.0 - (y / x) * (y / x);
    const auto zeta_at = [](double t) { return zeta_map(Tau(Cx(0.0, t))).real(); };
    double lo = 1.0, hi = 20.0;
    if (!(zeta_at(lo) >= target && target >= zeta_at(hi)))
        throw domain_error("theta_trace_check: root not bracketed on t in [1, 20]");
    for (int it = 0; it < 200 && hi - lo > 1e-14 * lo; ++it) {
        const double mid = 0.5 * (lo + hi);
        (zeta_at(mid) >= target ? lo : hi) = mid;
    }
    const double t = 0.5 * (lo + hi);

    ThetaTraceReport report;
    report.tau_im = t;
    const double th0 = theta_pq(0, 0, Tau(Cx(0.0, t))).real();
    report.xi = x / (th0 * th0);

    // iterate the pair map far enough for k = 0..4 regardless of where the
    // stopping rule of mu_iterate would land
    IterTrace trace = mu_iterate(x, y);
    double cx = trace.pairs.back().first, cy = trace.pairs.back().second;
    while (trace.pairs.size() < 5) {
        const double nx = mu1(cx, cy), ny = mu2(cx, cy);
        cx = nx;
        cy = ny;
        trace.pairs.emplace_back(cx, cy);
    }
    for (int k = 0; k < 5; ++k) {
        const double th = theta_pq(0, 0, Tau(Cx(0.0, std::ldexp(t, k)))).real();
        const double predicted = report.xi * th * th;
        const double xk = trace.pairs[static_cast<std::size_t>(k)].first;
        report.rel_err[static_cast<std::size_t>(k)] = std::abs(predicted - xk) / xk;
    }
    return report;
}

} // namespace thetameans
