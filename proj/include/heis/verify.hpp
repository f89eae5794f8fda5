#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace heis {

enum class VerifyLevel { fast, full };

struct ClaimResult {
    std::string name;
    bool pass = false;
    double residual = 0.0;   // worst violation measure; pass iff residual <= tolerance
    double tolerance = 0.0;
    std::string note;
};

struct VerifyReport {
    std::string level;
    std::uint64_t seed = 0;
    bool all_pass = false;
    std::vector<ClaimResult> claims;
};

/// Runs the whole verification battery with deterministic sampling.
VerifyReport verify_suite(VerifyLevel level, std::uint64_t seed = 20240901);

/// Byte-stable JSON rendering (numbers rounded to 9 significant digits).
std::string verify_report_json(const VerifyReport& rep);

}  // namespace heis
