#include <doctest.h>

#include <regex>
#include <string>
#include <thread>
#include <vector>

#include "thetameans/errors.hpp"
#include "thetameans/hypergeometric.hpp"
#include "thetameans/identities.hpp"
#include "thetameans/theta.hpp"

using namespace thetameans;

TEST_CASE("catalog shape") {
    const auto& cat = identity_catalog();
    CHECK(cat.size() == 18);
    CHECK(find_identity("jacobi").has_value());
    CHECK(find_identity("theta-trace").has_value());
    CHECK(!find_identity("no-such-identity").has_value());
    CHECK_THROWS_AS(run_identity("no-such-identity"), domain_error);
}

TEST_CASE("every catalog identity passes at its defaults") {
    for (const IdentitySpec& spec : identity_catalog()) {
        int skipped = 0;
        const IdentityReport r = run_identity(spec.id, 0, 1, 0.0, &skipped);
        INFO(std::string(spec.id) << ": max_rel_err = " << r.max_rel_err
                                  << " tol = " << r.tolerance << " skipped = " << skipped);
        CHECK(r.passed);
        CHECK(r.samples > 0);
        CHECK(r.max_rel_err <= r.tolerance);
        CHECK((r.passed == (r.max_rel_err <= r.tolerance)));
    }
}

TEST_CASE("reports are byte-identical per seed except wall_ms") {
    IdentityReport a = run_identity("twice", 200, 99);
    IdentityReport b = run_identity("twice", 200, 99);
    a.wall_ms = 0.0;
    b.wall_ms = 0.0;
    CHECK(report_to_json({a}) == report_to_json({b}));
    CHECK(report_to_csv({a}) == report_to_csv({b}));
}

TEST_CASE("report serialization shape") {
    const IdentityReport r = run_identity("transform-quarter");
    const std::string json = report_to_json({r});
    CHECK(json.find("\"identity_id\": \"transform-quarter\"") != std::string::npos);
    CHECK(json.find("\"passed\": true") != std::string::npos);
    CHECK(json.back() == '\n');
    const std::string csv = report_to_csv({r});
    CHECK(csv.rfind("identity_id,samples,max_rel_err,tolerance,passed,seed,wall_ms\n", 0) == 0);
    CHECK(std::regex_search(csv, std::regex("transform-quarter,50,.*,true,1,")));
}

TEST_CASE("kernels are stateless across threads") {
    // four threads evaluate the same grid; results must match the serial run
    const auto run = [](std::vector<Cx>& out) {
        const HParams p = params_quarter();
        for (int k = 0; k < 50; ++k) {
            const Cx z{-4.0 + 0.09 * k, 0.3};
            out.push_back(hgf(p, z).value);
            out.push_back(theta_pq(0, 0, Tau{Cx(0.01 * k, 1.0 + 0.05 * k)}));
        }
    };
    std::vector<Cx> serial;
    run(serial);
    std::vector<std::vector<Cx>> parallel(4);
    std::vector<std::thread> workers;
    for (auto& out : parallel) workers.emplace_back(run, std::ref(out));
    for (auto& w : workers) w.join();
    for (const auto& out : parallel) CHECK(out == serial);
}

TEST_CASE("custom tolerance flows into the verdict") {
    const IdentityReport strict = run_identity("j-act", 50, 1, 1e-30);
    CHECK(!strict.passed);
    CHECK(strict.tolerance == 1e-30);
    const IdentityReport loose = run_identity("j-act", 50, 1, 1e-3);
    CHECK(loose.passed);
}
