#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "thetameans/rng.hpp"
#include "thetameans/theta.hpp"

using namespace thetameans;

namespace {
constexpr double kTheta00i = 1.0864348112133080; // pi^(1/4)/Gamma(3/4)
Tau tau_at(double re, double im) { return Tau{Cx(re, im)}; }
} // namespace

TEST_CASE("theta_pq pinned values") {
    CHECK(theta_pq(1, 1, tau_at(0.0, 1.0)) == Cx(0.0, 0.0));
    CHECK(theta_pq(1, 1, tau_at(0.4, 2.3)) == Cx(0.0, 0.0));
    CHECK(std::abs(theta_pq(0, 0, tau_at(0.0, 1.0)).real() - kTheta00i) <= 1e-13);
    CHECK(std::abs(theta_pq(0, 0, tau_at(0.0, 1.0)).imag()) <= 1e-15);
    const Cx t01 = theta_pq(0, 1, tau_at(0.0, 1.0));
    const Cx t10 = theta_pq(1, 0, tau_at(0.0, 1.0));
    CHECK(std::abs(t01 - t10) <= 1e-13);
    CHECK(t01.real() > 0.0);
}

TEST_CASE("theta_pq against the one-exp-per-term oracle") {
    SampleRng rng(5);
    for (int k = 0; k < 50; ++k) {
        const Cx t{rng.uniform(-1.0, 1.0), rng.uniform(0.3, 6.0)};
        for (const auto& [p, q] : {std::pair{0, 0}, {0, 1}, {1, 0}}) {
            const Cx got = theta_pq(p, q, Tau{t});
            const Cx want = oracles::theta(p, q, t);
            CHECK(std::abs(got - want) <= 1e-13 * (1.0 + std::abs(want)));
        }
    }
}

TEST_CASE("theta_pq preconditions") {
    CHECK_THROWS_AS(theta_pq(2, 0, tau_at(0.0, 1.0)), domain_error);
    CHECK_THROWS_AS(theta_pq(0, 0, tau_at(0.0, 5e-4)), domain_error);
    CHECK_THROWS_AS(theta_pq(0, 0, tau_at(0.0, 1.0), 1e-17), domain_error);
    CHECK_THROWS_AS(Tau{Cx(0.0, -1.0)}, domain_error);
    CHECK_THROWS_AS(Tau{Cx(0.0, 0.0)}, domain_error);
}

TEST_CASE("theta_all bundles and validates the triple") {
    const ThetaTriple at_i = theta_all(tau_at(0.0, 1.0));
    CHECK(std::abs(at_i.t01 - at_i.t10) <= 1e-13);
    const ThetaTriple t = theta_all(tau_at(0.3, 1.7));
    const Cx j = t.t00 * t.t00 * t.t00 * t.t00 - t.t01 * t.t01 * t.t01 * t.t01 -
                 t.t10 * t.t10 * t.t10 * t.t10;
    CHECK(std::abs(j) <= 1e-12 * std::abs(t.t00 * t.t00 * t.t00 * t.t00));
    // theta_01(2i)^2 = theta_00(i) theta_01(i)
    const ThetaTriple at_2i = theta_all(tau_at(0.0, 2.0));
    CHECK(std::abs(at_2i.t01 * at_2i.t01 - at_i.t00 * at_i.t01) <= 1e-13);
}

TEST_CASE("Jacobi identity across the sampling box") {
    SampleRng rng(17);
    for (int k = 0; k < 500; ++k) {
        const ThetaTriple t = theta_all(tau_at(rng.uniform(-1.0, 1.0), rng.uniform(0.3, 10.0)));
        const Cx f00 = t.t00 * t.t00 * t.t00 * t.t00;
        const Cx f01 = t.t01 * t.t01 * t.t01 * t.t01;
        const Cx f10 = t.t10 * t.t10 * t.t10 * t.t10;
        const double scale = std::max({std::abs(f00), std::abs(f01), std::abs(f10)});
        CHECK(std::abs(f00 - f01 - f10) <= 1e-12 * scale);
    }
}

TEST_CASE("lambda_map") {
    CHECK(std::abs(lambda_map(tau_at(0.0, 1.0)) - Cx(0.5, 0.0)) <= 1e-13);
    CHECK(std::abs(lambda_map(tau_at(2.0, 1.0)) - Cx(0.5, 0.0)) <= 1e-13); // period 2
    const Cx small = lambda_map(tau_at(0.0, 5.0));
    const double leading = 16.0 * std::exp(-5.0 * oracles::kPi);
    CHECK(std::abs(small.imag()) <= 1e-18);
    CHECK(small.real() > 0.0);
    CHECK(std::abs(small.real() / leading - 1.0) <= 1e-5); // 16q(1 - 8q + ...)
}

TEST_CASE("zeta_map") {
    CHECK(std::abs(zeta_map(tau_at(0.0, 1.0)) - Cx(1.0, 0.0)) <= 1e-12);
    // zeta = 4 lambda (1 - lambda)
    SampleRng rng(23);
    for (int k = 0; k < 100; ++k) {
        const Tau tau = tau_at(rng.uniform(-1.0, 1.0), rng.uniform(0.3, 5.0));
        const Cx lam = lambda_map(tau);
        CHECK(std::abs(zeta_map(tau) - 4.0 * lam * (1.0 - lam)) <= 1e-12);
    }
    // invariance under tau -> tau + 2
    CHECK(std::abs(zeta_map(tau_at(1.0, 1.0)) - zeta_map(tau_at(-1.0, 1.0))) <= 1e-12);
}

TEST_CASE("twice formulas") {
    {
        // degenerate: t01 = t00 forces theta_10(2 tau)^2 = 0
        const ThetaTriple fake{Cx(1.3, 0.0), Cx(1.3, 0.0), Cx(0.4, 0.0)};
        CHECK(theta_double(fake).t10_sq == Cx(0.0, 0.0));
    }
    {
        const ThetaSquares d = theta_double(theta_all(tau_at(0.0, 1.0)));
        CHECK(d.t10_sq.real() > 0.0);
        CHECK(std::abs(d.t10_sq.imag()) <= 1e-15);
    }
    {
        const ThetaSquares d = theta_double(theta_all(tau_at(0.0, 1.3)));
        const ThetaTriple two = theta_all(tau_at(0.0, 2.6));
        CHECK(std::abs(two.t00 * two.t00 - d.t00_sq) <= 1e-12);
        CHECK(std::abs(two.t01 * two.t01 - d.t01_sq) <= 1e-12);
        CHECK(std::abs(two.t10 * two.t10 - d.t10_sq) <= 1e-12);
    }
    SampleRng rng(29);
    for (int k = 0; k < 500; ++k) {
        const Cx t{rng.uniform(-1.0, 1.0), rng.uniform(0.3, 5.0)};
        const ThetaTriple one = theta_all(Tau{t});
        const ThetaTriple two = theta_all(Tau{2.0 * t});
        const ThetaSquares d = theta_double(one);
        const double scale = std::max({std::abs(one.t00 * one.t00), std::abs(one.t01 * one.t01),
                                       std::abs(one.t10 * one.t10)});
        CHECK(std::abs(two.t00 * two.t00 - d.t00_sq) <= 1e-12 * scale);
        CHECK(std::abs(two.t01 * two.t01 - d.t01_sq) <= 1e-12 * scale);
        CHECK(std::abs(two.t10 * two.t10 - d.t10_sq) <= 1e-12 * scale);
    }
}

TEST_CASE("period 2 of the theta constants") {
    // theta_00^2 and theta_01^2 are invariant under tau -> tau + 2;
    // theta_10 itself picks up the eighth root e^{i pi/2}, so only its
    // fourth power is invariant (the square flips sign)
    SampleRng rng(37);
    for (int k = 0; k < 100; ++k) {
        const Cx t{rng.uniform(-1.0, 1.0), rng.uniform(0.3, 5.0)};
        const ThetaTriple a = theta_all(Tau{t});
        const ThetaTriple b = theta_all(Tau{t + 2.0});
        CHECK(std::abs(a.t00 * a.t00 - b.t00 * b.t00) <= 1e-12 * std::abs(a.t00 * a.t00));
        CHECK(std::abs(a.t01 * a.t01 - b.t01 * b.t01) <= 1e-12 * std::abs(a.t01 * a.t01));
        CHECK(std::abs(a.t10 * a.t10 + b.t10 * b.t10) <= 1e-12 * std::abs(a.t10 * a.t10));
        const Cx a4 = a.t10 * a.t10 * a.t10 * a.t10;
        const Cx b4 = b.t10 * b.t10 * b.t10 * b.t10;
        CHECK(std::abs(a4 - b4) <= 1e-12 * std::abs(a4));
    }
}

TEST_CASE("inversion law with the 01 <-> 10 swap") {
    SampleRng rng(41);
    for (int k = 0; k < 200; ++k) {
        const Cx t{rng.uniform(-1.0, 1.0), rng.uniform(0.3, 5.0)};
        const ThetaTriple a = theta_all(Tau{t});
        const ThetaTriple b = theta_all(Tau{-1.0 / t});
        const Cx f = Cx(0.0, -1.0) * t;
        CHECK(std::abs(b.t00 * b.t00 - f * a.t00 * a.t00) <= 1e-11 * std::abs(b.t00 * b.t00));
        CHECK(std::abs(b.t01 * b.t01 - f * a.t10 * a.t10) <= 1e-11 * std::abs(b.t01 * b.t01));
        CHECK(std::abs(b.t10 * b.t10 - f * a.t01 * a.t01) <= 1e-11 * std::abs(b.t10 * b.t10));
    }
}

TEST_CASE("fundamental domain predicates") {
    CHECK(in_gamma2_domain(tau_at(0.0, 2.0)));
    CHECK(in_gamma12_domain(tau_at(0.0, 2.0)));
    CHECK(!in_gamma12_domain(tau_at(0.5, 0.1)));
    CHECK(!in_gamma2_domain(tau_at(0.5, 0.1))); // inside the right excluded disk
    // the arc |tau| = 1 belongs to the Gamma_12 domain for 0 <= Re <= 1
    const double c = std::cos(oracles::kPi / 3.0), s = std::sin(oracles::kPi / 3.0);
    CHECK(in_gamma12_domain(tau_at(c, s)));
    CHECK(!in_gamma12_domain(tau_at(-c, s)));
    // half-open boundary conditions of the Gamma(2) domain
    CHECK(in_gamma2_domain(tau_at(1.0, 2.0)));
    CHECK(!in_gamma2_domain(tau_at(-1.0, 2.0)));
    CHECK(in_gamma2_domain(tau_at(0.5, 0.5)));   // |tau - 1/2| = 1/2 included
    CHECK(!in_gamma2_domain(tau_at(-0.5, 0.5))); // |tau + 1/2| = 1/2 excluded
}

TEST_CASE("reduction into the Gamma_12 domain") {
    {
        const ReduceResult r = reduce_to_gamma12_domain(tau_at(0.0, 2.0));
        CHECK(r.reduced.value() == Cx(0.0, 2.0));
        CHECK(r.g == gmat_identity());
    }
    {
        const ReduceResult r = reduce_to_gamma12_domain(tau_at(2.0, 2.0));
        CHECK(std::abs(r.reduced.value() - Cx(0.0, 2.0)) <= 1e-15);
        CHECK(r.g == gmat_real(1, 2, 0, 1));
    }
    {
        // a point deep below the domain needs several inversion steps
        const ReduceResult r = reduce_to_gamma12_domain(tau_at(0.1, 0.1));
        CHECK(in_gamma12_domain(r.reduced));
        CHECK(in_gamma12(r.g));
        const Cx back = mobius(r.g, r.reduced).value();
        CHECK(std::abs(back - Cx(0.1, 0.1)) <= 1e-12);
        CHECK(std::abs(zeta_map(r.reduced) - zeta_map(tau_at(0.1, 0.1))) <=
              1e-10 * (1.0 + std::abs(zeta_map(r.reduced))));
    }
    SampleRng rng(43);
    for (int k = 0; k < 300; ++k) {
        const Cx t{rng.uniform(-3.0, 3.0), rng.uniform(0.02, 4.0)};
        const ReduceResult r = reduce_to_gamma12_domain(Tau{t});
        CHECK(in_gamma12_domain(r.reduced));
        CHECK(in_gamma12(r.g));
        const Cx back = mobius(r.g, r.reduced).value();
        CHECK(std::abs(back - t) <= 1e-12 * std::abs(t));
        if (r.reduced.value().imag() >= 1e-3 && t.imag() >= 1e-3) {
            const Cx z_in = zeta_map(Tau{t});
            const Cx z_red = zeta_map(r.reduced);
            CHECK(std::abs(z_in - z_red) <= 1e-10 * (1.0 + std::abs(z_in)));
        }
    }
}

TEST_CASE("Schwarz map round trips") {
    CHECK(std::abs(schwarz_half(Cx(0.5, 0.0)).value() - Cx(0.0, 1.0)) <= 1e-13);
    for (const Cx z : {Cx(0.2, 0.0), Cx(0.8, 0.0), Cx(0.4, 0.15)}) {
        CHECK(std::abs(lambda_map(schwarz_half(z)) - z) <= 1e-8);
    }
    for (const Cx z : {Cx(0.5, 0.0), Cx(0.35, -0.1), Cx(0.62, 0.12)}) {
        const Tau tau = schwarz_quarter(z);
        CHECK(std::abs(zeta_map(tau) - z) <= 1e-8);
        CHECK(std::abs(tau.value() - schwarz_quarter_alt(z).value()) <= 1e-8);
    }
    // z -> 1 sends the quarter map to tau = i
    CHECK(std::abs(schwarz_quarter(Cx(1.0 - 1e-12, 0.0)).value() - Cx(0.0, 1.0)) <= 1e-6);
    CHECK_THROWS_AS(schwarz_half(Cx(2.0, 0.0)), domain_error);
    CHECK_THROWS_AS(schwarz_quarter(Cx(-0.5, 0.0)), domain_error);
}

TEST_CASE("lambda is negative real along Re tau = +-1") {
    for (double sign : {-1.0, 1.0}) {
        for (double im = 1.0; im <= 5.0; im += 1.0) {
            const Cx lam = lambda_map(tau_at(sign, im));
            CHECK(std::abs(lam.imag()) <= 1e-10);
            CHECK(lam.real() < 0.0);
        }
    }
}

TEST_CASE("sign of Im lambda inside the Gamma(2) domain") {
    // Re tau >= 0 gives Im lambda >= 0, Re tau < 0 gives Im lambda < 0
    SampleRng rng(61);
    int checked = 0;
    while (checked < 200) {
        const Cx t{rng.uniform(-1.0, 1.0), rng.uniform(0.45, 5.0)};
        const Tau tau{t};
        if (!in_gamma2_domain(tau)) continue;
        // stay off the boundary pieces where Im lambda degenerates to 0
        if (std::abs(t.real()) > 0.95 || std::abs(t.real()) < 0.05) continue;
        const Cx lam = lambda_map(tau);
        if (t.real() >= 0.0) CHECK(lam.imag() >= -1e-12);
        else CHECK(lam.imag() < 1e-12);
        ++checked;
    }
}
