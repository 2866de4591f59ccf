#include "thetameans/theta.hpp"

#include <cmath>

#include "thetameans/hypergeometric.hpp"

namespace thetameans {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kMinImTau = 1e-3;
constexpr double kCircleTol = 1e-12; // |tau| = 1 membership tolerance
constexpr int kRingCap = 10000;

} // namespace

Cx theta_pq(int p, int q, const Tau& tau, double tol) {
    if ((p != 0 && p != 1) || (q != 0 && q != 1))
        throw domain_error("theta_pq: characteristics must be 0 or 1");
    if (!(tol >= 1e-16)) throw domain_error("theta_pq: tol must be >= 1e-16");
    const Cx t = tau.value();
    if (t.imag() < kMinImTau)
        throw domain_error("theta_pq: requires Im tau >= 1e-3");
    // w = e^{i pi tau}, computed once; ring n adds the terms with index n and
    // -n (p = 0) resp. n and -n-1 (p = 1), which share the same |w|-power.
    const Cx w = std::exp(Cx(0.0, kPi) * t);
    const Cx w2 = w * w;
    Cx sum{0.0, 0.0};
    if (p == 0) {
        // w^{n^2}: u_{n+1} = u_n * w^{2n+1}
        Cx u{1.0, 0.0};      // w^{n^2}
        Cx step = w;         // w^{2n+1}
        for (int n = 0; n <= kRingCap; ++n) {
            Cx ring = u;
            if (n > 0) {
                // e^{i pi n q} = (-1)^{nq}
                const double sign = (q == 1 && (n & 1)) ? -1.0 : 1.0;
                ring = 2.0 * sign * u;
            }
            sum += ring;
            if (n >= 2 && std::abs(ring) <= tol) return sum;
            u *= step;
            step *= w2;
        }
    } else {
        // indices n and -n-1: exponent w^{(n+1/2)^2} = w^{1/4} w^{n(n+1)}
        const Cx wquarter = std::exp(Cx(0.0, kPi * 0.25) * t);
        Cx u{1.0, 0.0};      // w^{n(n+1)}
        Cx step = w2;        // w^{2(n+1)}
        for (int n = 0; n <= kRingCap; ++n) {
            Cx ring;
            if (q == 0) {
                ring = 2.0 * wquarter * u;
            } else {
                // phases e^{+- i pi (n+1/2)} cancel ring by ring: theta_11 = 0
                ring = Cx(0.0, 0.0);
            }
            sum += ring;
            const double mag = std::abs(wquarter * u);
            if (n >= 2 && mag <= tol) return sum;
            u *= step;
            step *= w2;
        }
    }
    throw non_convergence("theta_pq: ring cap reached");
}

ThetaTriple theta_all(const Tau& tau) {
    ThetaTriple t{theta_pq(0, 0, tau), theta_pq(0, 1, tau), theta_pq(1, 0, tau)};
    const Cx q00 = t.t00 * t.t00, q01 = t.t01 * t.t01, q10 = t.t10 * t.t10;
    const Cx f00 = q00 * q00, f01 = q01 * q01, f10 = q10 * q10;
    if (std::abs(t.t00) == 0.0)
        throw numerics_bug("theta_all: theta_00 vanished");
    // near the cusps Re tau = +-1 theta_00 is exponentially small against
    // theta_01, so the residual is measured against the largest fourth power
    const double scale = std::max({std::abs(f00), std::abs(f01), std::abs(f10)});
    if (std::abs(f00 - f01 - f10) > 1e-12 * scale)
        throw numerics_bug("theta_all: Jacobi identity violated beyond 1e-12");
    return t;
}

Cx lambda_map(const Tau& tau) {
    const ThetaTriple t = theta_all(tau);
    const Cx r = t.t10 / t.t00;
    const Cx r2 = r * r;
    return r2 * r2;
}

Cx zeta_map(const Tau& tau) {
    const ThetaTriple t = theta_all(tau);
    const Cx a = t.t01 / t.t00, b = t.t10 / t.t00;
    const Cx a2 = a * a, b2 = b * b;
    return 4.0 * (a2 * a2) * (b2 * b2);
}

ThetaSquares theta_double(const ThetaTriple& t) {
    const Cx s00 = t.t00 * t.t00, s01 = t.t01 * t.t01;
    return {(s00 + s01) / 2.0, t.t00 * t.t01, (s00 - s01) / 2.0};
}

bool in_gamma2_domain(const Tau& tau) {
    const Cx t = tau.value();
    return t.real() > -1.0 && t.real() <= 1.0 &&
           std::abs(t - Cx(0.5, 0.0)) >= 0.5 && std::abs(t + Cx(0.5, 0.0)) > 0.5;
}

bool in_gamma12_domain(const Tau& tau) {
    const Cx t = tau.value();
    const double r = std::abs(t);
    if (std::abs(r - 1.0) <= kCircleTol) return t.real() >= 0.0 && t.real() <= 1.0;
    return r > 1.0 && t.real() > -1.0 && t.real() <= 1.0;
}

ReduceResult reduce_to_gamma12_domain(const Tau& tau) {
    Cx t = tau.value();
    // accumulated product of the applied moves, so t_final = acc . t_initial
    GMat acc = gmat_identity();
    const auto apply = [&](const GMat& m) { acc = mat_mul(m, acc); };
    for (int iter = 0; iter < 10000; ++iter) {
        if (in_gamma12_domain(Tau(t))) {
            // tau = acc^{-1} . t ; det(acc) = 1 so the inverse is exact
            return {Tau(t), mat_inv(acc)};
        }
        // translate by multiples of 2 until Re in (-1, 1]
        double k = std::floor((t.real() + 1.0) / 2.0);
        if (t.real() - 2.0 * k == -1.0) k -= 1.0;
        if (k != 0.0) {
            t -= 2.0 * k;
            apply(gmat_real(1, -2 * static_cast<long long>(k), 0, 1));
        }
        if (in_gamma12_domain(Tau(t))) {
            return {Tau(t), mat_inv(acc)};
        }
        const double r = std::abs(t);
        if (r < 1.0 - kCircleTol || (std::abs(r - 1.0) <= kCircleTol && t.real() < 0.0)) {
            t = -1.0 / t;
            apply(mats::s());
        }
    }
    throw non_convergence("reduce_to_gamma12_domain: iteration cap reached");
}

namespace {

void require_lens(Cx z) {
    if (!(std::abs(z) < 1.0 && std::abs(z - Cx(1.0, 0.0)) < 1.0))
        throw domain_error("schwarz map: requires |z| < 1 and |z-1| < 1");
}

} // namespace

Tau schwarz_half(Cx z) {
    require_lens(z);
    const HParams p = params_half();
    const Cx num = hgf(p, Cx(1.0, 0.0) - z).value;
    const Cx den = hgf(p, z).value;
    return Tau(Cx(0.0, 1.0) * num / den);
}

Tau schwarz_quarter(Cx z) {
    require_lens(z);
    const Cx fz = hgf(params_quarter(), z).value;
    const Cx f1mz = hgf({0.75, 0.75, 1.5}, Cx(1.0, 0.0) - z).value;
    const Cx num = kPi * fz + beta_real(0.75, 0.75) * cpow(Cx(1.0, 0.0) - z, 0.5) * f1mz;
    return Tau(Cx(0.0, 1.0) * num / (kPi * fz));
}

Tau schwarz_quarter_alt(Cx z) {
    require_lens(z);
    const Cx fz = hgf(params_quarter(), z).value;
    const Cx f1mz = hgf({0.25, 0.25, 0.5}, Cx(1.0, 0.0) - z).value;
    const Cx num = -kPi * fz + beta_real(0.25, 0.25) * f1mz;
    return Tau(Cx(0.0, 1.0) * num / (kPi * fz));
}

} // namespace thetameans
