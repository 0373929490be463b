#pragma once

#include "jt/branch_evaluation.hpp"
#include "jt/frame.hpp"
#include "jt/interpretation.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace jt {

/// At most one chosen rule per defined fact.
class Justification {
public:
    /// Sets (or replaces) the rule chosen for `r.head`.
    void choose(const Rule& r) { choice_[r.head] = r; }
    void unchoose(Fact head) { choice_.erase(head); }

    [[nodiscard]] const Rule* rule_for(Fact head) const
    {
        auto it = choice_.find(head);
        return it == choice_.end() ? nullptr : &it->second;
    }
    [[nodiscard]] bool contains(Fact head) const { return choice_.contains(head); }
    [[nodiscard]] const std::map<Fact, Rule>& choices() const { return choice_; }
    [[nodiscard]] std::size_t size() const { return choice_.size(); }

    bool operator==(const Justification&) const = default;

private:
    std::map<Fact, Rule> choice_;
};

/// The part of a justification's graph reachable from a start fact.
struct ReachableGraph {
    std::vector<Fact> nodes;                  // ascending
    std::vector<std::pair<Fact, Fact>> edges; // head -> body member, ascending
    std::vector<Fact> sinks;                  // open and logical nodes
};

ReachableGraph reachable_graph(const Frame& frame, const Justification& j, Fact start);

/// Throws StartUnmapped if `j` has no rule for `start`.
bool is_locally_complete(const Frame& frame, const Justification& j, Fact start);

/// { be(b) : b a branch of j starting at `start` }, computed from the strongly
/// connected structure of the reachable graph. Throws NotLocallyComplete.
std::set<Fact> branch_values(const Frame& frame, const Justification& j, Fact start,
                             BranchEvaluation be);

struct BranchPrefix {
    std::vector<Fact> path;
    bool truncated = false; // false: ends in a sink
};

/// All paths from `start` that either end in a sink or reach `max_len` nodes.
std::vector<BranchPrefix> enumerate_branch_prefixes(const Frame& frame, const Justification& j,
                                                    Fact start, std::size_t max_len);

inline constexpr std::size_t default_search_cap = 1'000'000;

struct SupportResult {
    bool supported = false;
    std::optional<Justification> witness;
};

/// Searches justifications for `x` depth-first: pending facts in ascending
/// code order, rules in declaration order. Returns the first justification
/// whose branch values from `x` all lie in `interp`. Partial choices whose
/// values already escape `interp` are cut, which never skips a success.
/// Throws SearchSpaceTooLarge once more than `cap` choices were tried.
SupportResult supports_bruteforce(const Frame& frame, BranchEvaluation be,
                                  const Interpretation& interp, Fact x,
                                  std::size_t cap = default_search_cap);

/// All defined facts supported in `interp`.
Interpretation supported_set(const Frame& frame, BranchEvaluation be, const Interpretation& interp);

/// Same verdict as supports_bruteforce, without enumerating justifications.
bool supports(const Frame& frame, BranchEvaluation be, const Interpretation& interp, Fact x);

} // namespace jt
