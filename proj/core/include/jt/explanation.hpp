#pragma once

#include "jt/justification.hpp"

#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace jt {

/// A supporting justification for `root`, restricted to what is reachable
/// from it, together with its graph and branch values.
struct Explanation {
    Fact root;
    BranchEvaluation evaluation = BranchEvaluation::WellFounded;
    Justification justification;
    std::vector<Fact> nodes;                  // ascending
    std::vector<std::pair<Fact, Fact>> edges; // ascending
    std::set<Fact> values;
    std::shared_ptr<const Vocabulary> vocab;
};

/// Throws NotSupported if `x` is not supported in `interp`.
Explanation explain(const Frame& frame, BranchEvaluation be, const Interpretation& interp, Fact x);

/// Graphviz digraph; nodes and edges in ascending fact order.
std::string export_dot(const Explanation& e);

/// {"edges":[[from,to],...],"nodes":[...],"root":...} with printable names.
std::string export_json(const Explanation& e);

} // namespace jt
