#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "thetameans/hypergeometric.hpp"
#include "thetameans/rng.hpp"

using namespace thetameans;

namespace {
// theta_00(i)^2 = sqrt(pi)/Gamma(3/4)^2; also F(1/2,1/2,1;1/2) and the
// Gauss-Kummer value of (1/4,1/4,1)
constexpr double kTheta00iSq = 1.1803405990160962;
constexpr double kTwoLn2 = 1.3862943611198906;
constexpr double kFQuarterHalf = 1.0399733431968039; // F(1/4,1/4,1;1/2)
} // namespace

TEST_CASE("HParams rejects nonpositive integer c") {
    CHECK_THROWS_AS(HParams(1.0, 1.0, 0.0), invalid_parameter);
    CHECK_THROWS_AS(HParams(1.0, 1.0, -2.0), invalid_parameter);
    CHECK_THROWS_AS(HParams(1.0, 1.0, Cx(-2.0 + 1e-13, 0.0)), invalid_parameter);
    CHECK_NOTHROW(HParams(1.0, 1.0, 0.5));
    CHECK_NOTHROW(HParams(1.0, 1.0, Cx(-2.0, 0.5))); // off the real axis is fine
}

TEST_CASE("hgf_series pinned values") {
    const HParams any{0.3, 0.7, 1.1};
    CHECK(hgf_series(any, {0.0, 0.0}, 1e-15).value == Cx(1.0, 0.0));
    const HValue half = hgf_series(params_half(), {0.5, 0.0}, 1e-15);
    CHECK(std::abs(half.value.real() - kTheta00iSq) <= 1e-13);
    CHECK(std::abs(half.value - oracles::hgf_series(0.5, 0.5, 1.0, 0.5)) <= 1e-14);
    const HValue log_case = hgf_series({1.0, 1.0, 2.0}, {0.5, 0.0}, 1e-15);
    CHECK(std::abs(log_case.value.real() - kTwoLn2) <= 1e-13); // -ln(1-z)/z
    CHECK(log_case.terms_used > 3);
    CHECK(log_case.terms_used < kSeriesTermCap);
}

TEST_CASE("hgf_series preconditions") {
    CHECK_THROWS_AS(hgf_series(params_half(), {1.0, 0.0}, 1e-15), domain_error);
    CHECK_THROWS_AS(hgf_series(params_half(), {0.3, 0.0}, 1e-18), domain_error);
    CHECK_THROWS_AS(hgf_series(params_half(), {0.3, 0.0}, 1e-3), domain_error);
}

TEST_CASE("hgf path consistency inside |z| <= 0.6") {
    SampleRng rng(11);
    const HParams quarter = params_quarter();
    const HParams complex_params{Cx(0.3, 0.1), Cx(0.7, 0.0), Cx(1.1, 0.0)};
    for (int k = 0; k < 200; ++k) {
        const double r = 0.6 * std::sqrt(rng.uniform01());
        const double phi = rng.uniform(-oracles::kPi, oracles::kPi);
        const Cx z = std::polar(r, phi);
        for (const HParams& p : {quarter, complex_params}) {
            const Cx direct = hgf_series(p, z, 1e-15).value;
            const Cx routed = hgf(p, z).value;
            CHECK(std::abs(routed - direct) <= 1e-12 * std::abs(direct));
        }
    }
}

TEST_CASE("hgf connection path agrees with the raw series in the overlap") {
    // connection route is taken for Re z > 0.75, |1-z| < 1; the raw series
    // still converges there, giving an independent cross-check
    SampleRng rng(12);
    for (const HParams& p : {params_quarter(), params_three_quarter()}) {
        for (int k = 0; k < 40; ++k) {
            const double x = rng.uniform(0.76, 0.9);
            const Cx via_conn = hgf(p, {x, 0.0}).value;
            const Cx via_series = hgf_series(p, {x, 0.0}, 1e-15).value;
            CHECK(std::abs(via_conn - via_series) <= 1e-9 * std::abs(via_series));
        }
    }
}

TEST_CASE("hgf Pfaff path agrees with the raw series in the overlap") {
    SampleRng rng(13);
    for (int k = 0; k < 60; ++k) {
        const double x = -rng.uniform(0.76, 0.95);
        for (const HParams& p : {params_quarter(), params_half()}) {
            const Cx via_pfaff = hgf(p, {x, 0.0}).value;
            const Cx via_series = hgf_series(p, {x, 0.0}, 1e-15).value;
            CHECK(std::abs(via_pfaff - via_series) <= 1e-11 * std::abs(via_series));
        }
    }
}

TEST_CASE("hgf at and beyond z = 1") {
    const HValue at_one = hgf(params_quarter(), {1.0, 0.0});
    CHECK(at_one.path == EvalPath::kClosedFormLimit);
    CHECK(std::abs(at_one.value.real() - kTheta00iSq) <= 1e-12);
    CHECK_THROWS_AS(hgf(params_three_quarter(), {1.0, 0.0}), domain_error);
    // on the cut the value is the limit from Im z > 0
    const Cx on_cut = hgf(params_quarter(), {1.5, 0.0}).value;
    const Cx from_above = hgf(params_quarter(), {1.5, 1e-9}).value;
    const Cx from_below = hgf(params_quarter(), {1.5, -1e-9}).value;
    CHECK(std::abs(on_cut - from_above) <= 1e-6);
    CHECK(std::abs(on_cut - from_below) > 1e-2); // jump across the cut
}

TEST_CASE("hgf error taxonomy") {
    // (1/2,1/2,1) has c-a-b = 0: the connection formula does not exist, so
    // crossing the cut beyond the series radius must fail cleanly
    CHECK_THROWS_AS(hgf(params_half(), {1.8, 0.0}), invalid_parameter);
    CHECK_THROWS_AS(hgf(params_half(), {2.0, 3.0}), unsupported_region);
    CHECK(hgf_supported(params_half(), {0.9, 0.0}));       // wide-series route
    CHECK(hgf_supported(params_quarter(), {1.8, 0.0}));    // connection route
    CHECK(!hgf_supported(params_half(), {1.8, 0.0}));
    CHECK(!hgf_supported(params_half(), {2.0, 3.0}));
    CHECK(hgf_supported(params_half(), {-40.0, 0.0}));     // Pfaff route
}

TEST_CASE("hgf far into the left half plane matches the AGM value") {
    // F(1/2,1/2,1;-3) = 1/agm(1,2), frozen from the iteration oracle
    const Cx f = hgf(params_half(), {-3.0, 0.0}).value;
    CHECK(std::abs(f.real() - 0.6864402503091751) <= 1e-12);
    CHECK(std::abs(1.0 / oracles::agm(1.0, 2.0) - f.real()) <= 1e-12);
}

TEST_CASE("gauss_kummer") {
    CHECK(std::abs(gauss_kummer(params_quarter()).real() - kTheta00iSq) <= 1e-12);
    CHECK(gauss_kummer({0.3, 0.0, 1.2}).real() == doctest::Approx(1.0).epsilon(1e-13));
    CHECK_THROWS_AS(gauss_kummer(params_three_quarter()), domain_error);
}

TEST_CASE("euler_f2 against closed form and series") {
    const HParams quarter = params_quarter();
    // z = 0 reduces to the Beta integral B(1/4, 3/4) = pi sqrt(2)
    CHECK(std::abs(euler_f2(quarter, {0.0, 0.0}, 1e-9).real() - 4.442882938158366) <= 1e-8);
    const double b_quarter = beta_real(0.25, 0.75);
    for (const double z : {-0.5, 0.25, 0.5, 0.75}) {
        const Cx lhs = euler_f2(quarter, {z, 0.0}, 1e-8);
        const Cx rhs = b_quarter * hgf(quarter, {z, 0.0}).value;
        CHECK(std::abs(lhs - rhs) <= 1e-6);
    }
    const Cx lhs_half = euler_f2(params_half(), {0.5, 0.0}, 1e-8);
    CHECK(std::abs(lhs_half.real() - oracles::kPi * kTheta00iSq) <= 1e-6);
}

TEST_CASE("euler_f2 preconditions") {
    CHECK_THROWS_AS(euler_f2({1.5, 0.25, 1.0}, {0.0, 0.0}, 1e-8), domain_error); // 1-a < 0
    CHECK_THROWS_AS(euler_f2(params_quarter(), {1.5, 0.0}, 1e-8), domain_error);
    CHECK_THROWS_AS(euler_f2(params_quarter(), {0.2, 0.3}, 1e-8), domain_error);
}

TEST_CASE("quadratic transforms") {
    const Cx a{0.5, 0.0}, b{0.5, 0.0};
    {
        const auto [lhs, rhs] = quad_transform_check(QuadTransform::kFE2, a, b, {0.0, 0.0});
        CHECK(std::abs(lhs - Cx(1.0, 0.0)) <= 1e-15);
        CHECK(std::abs(rhs - Cx(1.0, 0.0)) <= 1e-15);
    }
    {
        const auto [lhs, rhs] = quad_transform_check(QuadTransform::kFE2, a, b, {0.1, 0.0});
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(lhs));
        // both sides equal F(1/4,1/4,1;0.36), 4z(1-z) = 0.36
        const Cx oracle = oracles::hgf_series(0.25, 0.25, 1.0, 0.36);
        CHECK(std::abs(lhs - oracle) <= 1e-12 * std::abs(oracle));
    }
    {
        const auto [lhs, rhs] = quad_transform_check(QuadTransform::kFE3, a, b, {0.1, 0.0});
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(lhs));
        const Cx oracle = Cx(0.8, 0.0) * oracles::hgf_series(0.75, 0.75, 1.0, 0.36);
        CHECK(std::abs(rhs - oracle) <= 1e-12 * std::abs(oracle));
    }
    for (const Cx z : {Cx(0.1, 0.0), Cx(-0.2, 0.0), Cx(0.1, 0.1)}) {
        const auto [lhs, rhs] = quad_transform_check(QuadTransform::kFE1, a, b, z);
        CHECK(std::abs(lhs - rhs) <= 1e-11 * std::abs(lhs));
    }
    CHECK_THROWS_AS(quad_transform_check(QuadTransform::kFE2, a, b, {0.31, 0.0}), domain_error);
}

TEST_CASE("transform_quarter") {
    {
        const auto [lhs, rhs] = transform_quarter(1.0);
        CHECK(std::abs(lhs - Cx(1.0, 0.0)) <= 1e-14);
        CHECK(std::abs(rhs - Cx(1.0, 0.0)) <= 1e-14);
    }
    {
        const auto [lhs, rhs] = transform_quarter(0.5);
        CHECK(std::abs(lhs - rhs) <= 1e-9 * std::abs(lhs));
        // independent left side: prefactor (2+sqrt(3))/4 against the raw series
        const Cx oracle = (2.0 + std::sqrt(3.0)) / 4.0 * oracles::hgf_series(0.25, 0.25, 1.0, 0.75, 4000);
        CHECK(std::abs(lhs - oracle) <= 1e-9 * std::abs(oracle));
    }
    {
        // 1 - w^2 < 0 exercises the Pfaff route on the left side
        const auto [lhs, rhs] = transform_quarter(1.5);
        CHECK(std::abs(lhs - rhs) <= 1e-9 * std::abs(lhs));
    }
    CHECK_THROWS_AS(transform_quarter(-2.0), domain_error);
    CHECK_THROWS_AS(transform_quarter(1.97), domain_error);
}

TEST_CASE("circuit matrices at the pinned parameter triples") {
    const auto close = [](Cx got, double re, double im) {
        return std::abs(got - Cx(re, im)) <= 1e-12;
    };
    {
        const auto [m0, m1] = circuit_matrices(params_half());
        CHECK(close(m0.m11, 1, 0));
        CHECK(close(m0.m12, -2, 0));
        CHECK(close(m0.m21, 0, 0));
        CHECK(close(m0.m22, 1, 0));
        CHECK(close(m1.m11, 1, 0));
        CHECK(close(m1.m21, 2, 0));
    }
    {
        const auto [m0, m1] = circuit_matrices(params_quarter());
        CHECK(close(m0.m12, -1, -1));
        CHECK(close(m1.m11, -1, 0));
        CHECK(close(m1.m21, 1, 1));
    }
    {
        const auto [m0, m1] = circuit_matrices({0.0, 0.0, 1.0});
        CHECK(close(m0.m11, 1, 0));
        CHECK(close(m0.m12, 0, 0));
        CHECK(close(m1.m11, 1, 0));
        CHECK(close(m1.m21, 0, 0));
    }
}

TEST_CASE("hgf quarter value frozen from the series oracle") {
    CHECK(std::abs(hgf(params_quarter(), {0.5, 0.0}).value.real() - kFQuarterHalf) <= 1e-13);
}
