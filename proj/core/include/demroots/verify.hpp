#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace demroots {

struct VerifyCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyResult {
    std::vector<VerifyCheck> checks;

    bool all_pass() const;
};

/// The built-in fixture suite: deterministic desk-scale checks of the whole
/// pipeline (dual cones, root enumeration, derivations and exponentials, the
/// rank-one classifier and the horospherical engine) against frozen values.
VerifyResult run_builtin_fixture_suite();

nlohmann::ordered_json verify_to_json(const VerifyResult& r);
std::string verify_to_text(const VerifyResult& r);

}  // namespace demroots
