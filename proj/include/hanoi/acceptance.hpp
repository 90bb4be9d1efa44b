#ifndef HANOI_ACCEPTANCE_HPP
#define HANOI_ACCEPTANCE_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace hanoi {

// Fixed default seed for every randomized routine; overridable by flag only.
inline constexpr std::uint64_t kDefaultSeed = 271828;

struct AcceptanceOptions {
    bool quick = false;            // reduced caps, subset of instances
    std::string data_dir = "data"; // shipped witness location
    std::uint64_t seed = kDefaultSeed;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// Runs the full battery, printing one PASS/FAIL line per criterion to `log`.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt, std::ostream& log);

} // namespace hanoi

#endif
