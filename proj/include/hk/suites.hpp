#ifndef HK_SUITES_HPP
#define HK_SUITES_HPP

#include <cstdint>
#include <string>

#include <json.hpp>

namespace hk {

inline constexpr const char* kToolVersion = "hk-verify 1.0.0";

struct SuiteResult {
    nlohmann::json report;
    bool pass = true;
};

struct SuiteDefaults {
    int wheeling_max_degree = 8;
    int lefschetz_max_n = 12;
    int identities_max_n = 40;
    int rr_max_n = 20;
    int phi_max_n = 3;
    int phi_trials = 50;
    int sl2_trials = 100;
    int todd_n = 8;
    std::uint64_t seed = 42;
    bool assume_p1_positive = false;
};

SuiteResult run_wheeling(int max_degree);
SuiteResult run_phi_check(const std::string& diagram, int max_n, int gens, int trials,
                          std::uint64_t seed);
SuiteResult run_sl2_check(int max_n, int gens, int trials, std::uint64_t seed);
SuiteResult run_lefschetz(int max_n, std::uint64_t seed, bool assume_p1_positive);
SuiteResult run_todd(int n);
SuiteResult run_rr(const std::string& family, int max_n);
std::string rr_csv(const std::string& family, int max_n);
SuiteResult run_identities(int max_n);
SuiteResult run_all(const SuiteDefaults& defaults);

} // namespace hk

#endif
