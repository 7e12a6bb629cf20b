#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ftc/decoder.hpp"

// Parallel Monte Carlo logical-rate estimation and crossing-based
// threshold extraction. Results are bit-for-bit reproducible for a given
// master seed, independent of the worker count.

namespace ftc::sim {

struct ConfigInvalid : std::runtime_error {
    explicit ConfigInvalid(const std::string& m) : std::runtime_error(m) {}
};
struct NoCrossingInGrid : std::runtime_error {
    explicit NoCrossingInGrid(const std::string& m) : std::runtime_error(m) {}
};

struct SimConfig {
    std::string complex_name;
    std::vector<int> sizes;           // torus dims L (cube L,L,L)
    std::vector<CheckType> types{CheckType::X};
    std::string decoder = "peeling";  // "peeling" | "union-find"
    std::string model = "erasure";    // "erasure" | "flip" | "mixed"
    double p_other = 0.0;             // fixed value of the non-swept knob in mixed mode
    std::vector<double> grid;         // swept probabilities, ascending
    long trials_per_point = 10000;
    std::uint64_t seed = 1;
    int jobs = 0;  // 0 = hardware concurrency

    void validate() const;  // throws ConfigInvalid
};

struct SimRow {
    std::string complex_name;
    CheckType type;
    std::string decoder;
    std::string model;
    int L = 0;
    double p = 0;
    long trials = 0;
    long failures = 0;
    double rate = 0, ci_low = 0, ci_high = 0;
    std::uint64_t seed = 0;
};

struct SimResult {
    std::vector<SimRow> rows;
};

SimResult run_montecarlo(const SimConfig& cfg);

/// CSV with the exact header
/// complex,check_type,decoder,error_model,L,p,trials,failures,logical_rate,ci_low,ci_high,seed
void write_csv(const SimResult& r, std::ostream& out);

struct ThresholdEstimate {
    double p_star = 0;
    double ci_low = 0, ci_high = 0;
    std::string method;
};

/// Mean of the pairwise crossings of consecutive-size logical-rate curves,
/// interpolated linearly in log-odds; bootstrap CI over binomial
/// resamples. Rows must belong to a single (complex, type, decoder,
/// model) group.
ThresholdEstimate estimate_threshold(const SimResult& rows);

/// Wilson 95% interval.
std::pair<double, double> wilson_interval(long failures, long trials);

}  // namespace ftc::sim
