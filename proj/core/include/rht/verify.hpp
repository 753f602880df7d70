#pragma once

// Built-in self checks run by `rht verify`.

#include <string>
#include <string_view>
#include <vector>

namespace rht {

struct VerifyResult {
    std::string suite;
    std::string name;
    bool passed = false;
    std::string detail;
    double millis = 0;
};

/// Suites: "core", "models", "immersion" or "all". Throws ValidationError
/// for other names.
std::vector<VerifyResult> run_verify(std::string_view suite, unsigned seed = 1);

}  // namespace rht
