#pragma once

#include "jt/fact.hpp"

#include <cstddef>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

namespace jt {

enum class BranchEvaluation { WellFounded, Stable, KripkeKleene, Completion };

inline constexpr BranchEvaluation all_branch_evaluations[] = {
    BranchEvaluation::WellFounded, BranchEvaluation::Stable,
    BranchEvaluation::KripkeKleene, BranchEvaluation::Completion};

/// "wf", "stable", "kk", "sp"
std::string_view to_string(BranchEvaluation be);
std::optional<BranchEvaluation> parse_branch_evaluation(std::string_view name);

namespace branch_class {
struct FiniteEndingIn { Fact sink; };
struct InfinitePositiveTail {};
struct InfiniteNegativeTail {};
struct InfiniteMixed {};
struct FirstSignSwitch { Fact switched_to; };
struct SameSignFinite { Fact sink; };
struct SameSignInfinite { Polarity polarity; };
struct SecondElement { Fact second; };
} // namespace branch_class

using BranchClass = std::variant<branch_class::FiniteEndingIn, branch_class::InfinitePositiveTail,
                                 branch_class::InfiniteNegativeTail, branch_class::InfiniteMixed,
                                 branch_class::FirstSignSwitch, branch_class::SameSignFinite,
                                 branch_class::SameSignInfinite, branch_class::SecondElement>;

/// An ultimately periodic branch. Without `loop_start` the branch is finite
/// and its last element is the open or logical fact it ends in. With
/// `loop_start = k` the elements from index k onward repeat forever.
struct Branch {
    std::vector<Fact> elements;
    std::optional<std::size_t> loop_start;
};

/// Classifies `branch` into the classes `be` distinguishes.
BranchClass classify(BranchEvaluation be, const Branch& branch);

/// Throws InvalidArgument if `cls` is not a class of `be`.
Fact value_of_class(BranchEvaluation be, const BranchClass& cls);

inline Fact evaluate(BranchEvaluation be, const Branch& branch)
{
    return value_of_class(be, classify(be, branch));
}

} // namespace jt
