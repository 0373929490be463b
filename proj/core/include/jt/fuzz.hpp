#pragma once

#include "jt/branch_evaluation.hpp"
#include "jt/program.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace jt {

struct FuzzConfig {
    std::uint64_t seed = 0;
    std::size_t count = 0;
    std::size_t max_atoms = 6;
    std::size_t max_rules = 12;
    std::size_t max_body = 3;
};

struct FuzzEntry {
    std::string program;
    BranchEvaluation semantics = BranchEvaluation::WellFounded;
    std::string engine_result; // JSON
    std::string oracle_result; // JSON
    bool agree = false;
    std::vector<std::string> defects;

    /// One JSON object, keys sorted, no trailing newline.
    [[nodiscard]] std::string to_json_line() const;
};

struct FuzzReport {
    std::vector<FuzzEntry> entries;
    std::size_t programs = 0;

    [[nodiscard]] std::size_t mismatches() const;
    [[nodiscard]] std::size_t defect_count() const;
};

/// Deterministic 64-bit generator (splitmix64); identical streams on every
/// platform, unlike the standard distributions.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_{seed} {}
    std::uint64_t next();
    /// Uniform in [lo, hi].
    std::size_t range(std::size_t lo, std::size_t hi);
    bool coin() { return (next() >> 63) != 0; }

private:
    std::uint64_t state_;
};

/// Random ground program over atoms p0..p(n-1) without opens.
Program random_program(SplitMix64& rng, std::size_t max_atoms, std::size_t max_rules,
                       std::size_t max_body);

/// Compares justification semantics against the classical oracles for all
/// four semantics on `config.count` random programs and checks that no fact
/// and its negation are both supported at any fixpoint or model candidate.
FuzzReport fuzz_check(const FuzzConfig& config);

} // namespace jt
