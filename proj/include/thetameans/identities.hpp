// Catalog of numerically checkable identities, with seeded deterministic
// sampling, and report serialization (JSON / CSV).
#ifndef THETAMEANS_IDENTITIES_HPP
#define THETAMEANS_IDENTITIES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace thetameans {

struct IdentityReport {
    std::string identity_id;
    long long samples = 0;
    double max_rel_err = 0.0;
    double tolerance = 0.0;
    bool passed = false; // always max_rel_err <= tolerance
    std::uint64_t seed = 0;
    double wall_ms = 0.0;
};

struct IdentitySpec {
    std::string_view id;
    long long default_samples;
    double default_tol;
    std::string_view note; // sampling region / residual definition, for --help
};

/// All known identity ids with their default sample counts and tolerances.
const std::vector<IdentitySpec>& identity_catalog();

/// Spec for one id; nullopt when unknown.
std::optional<IdentitySpec> find_identity(std::string_view id);

/// Runs one identity sweep. samples <= 0 or tol <= 0 pick the catalog
/// defaults. skipped_out (may be null) receives the number of samples that
/// were drawn but skipped (e.g. zeta landing on the cut [1, inf)).
IdentityReport run_identity(std::string_view id, long long samples = 0,
                            std::uint64_t seed = 1, double tol = 0.0,
                            int* skipped_out = nullptr);

std::string report_to_json(const std::vector<IdentityReport>& reports, int indent = 2);
std::string report_to_csv(const std::vector<IdentityReport>& reports);

} // namespace thetameans

#endif
