#include "jt/branch_evaluation.hpp"

#include "jt/error.hpp"

#include <algorithm>

namespace jt {

std::string_view to_string(BranchEvaluation be)
{
    switch (be) {
    case BranchEvaluation::WellFounded: return "wf";
    case BranchEvaluation::Stable: return "stable";
    case BranchEvaluation::KripkeKleene: return "kk";
    case BranchEvaluation::Completion: return "sp";
    }
    return "?";
}

std::optional<BranchEvaluation> parse_branch_evaluation(std::string_view name)
{
    for (BranchEvaluation be : all_branch_evaluations)
        if (to_string(be) == name)
            return be;
    return std::nullopt;
}

namespace {

// Element k of the (possibly infinite) unrolled branch.
Fact element_at(const Branch& b, std::size_t k)
{
    if (k < b.elements.size() || !b.loop_start)
        return b.elements.at(k);
    const std::size_t start = *b.loop_start;
    const std::size_t period = b.elements.size() - start;
    return b.elements[start + (k - start) % period];
}

BranchClass tail_class(const Branch& b)
{
    using namespace branch_class;
    if (!b.loop_start)
        return FiniteEndingIn{b.elements.back()};
    auto first = b.elements.begin() + static_cast<std::ptrdiff_t>(*b.loop_start);
    const bool all_pos = std::all_of(first, b.elements.end(), [](Fact x) { return x.is_positive(); });
    const bool all_neg = std::all_of(first, b.elements.end(), [](Fact x) { return x.is_negative(); });
    if (all_pos)
        return InfinitePositiveTail{};
    if (all_neg)
        return InfiniteNegativeTail{};
    return InfiniteMixed{};
}

} // namespace

BranchClass classify(BranchEvaluation be, const Branch& branch)
{
    using namespace branch_class;
    if (branch.elements.empty() || (branch.loop_start && *branch.loop_start >= branch.elements.size()))
        throw Error{ErrorKind::InvalidArgument, "malformed branch"};
    if (!branch.loop_start && branch.elements.size() < 2)
        throw Error{ErrorKind::InvalidArgument, "finite branch needs a defined fact and a sink"};

    switch (be) {
    case BranchEvaluation::WellFounded:
    case BranchEvaluation::KripkeKleene:
        return tail_class(branch);
    case BranchEvaluation::Completion:
        return SecondElement{element_at(branch, 1)};
    case BranchEvaluation::Stable: {
        const Fact first = branch.elements.front();
        for (std::size_t k = 1; k < branch.elements.size(); ++k) {
            const Fact x = branch.elements[k];
            if (x.is_literal() && x.polarity() != first.polarity())
                return FirstSignSwitch{x};
        }
        if (!branch.loop_start)
            return SameSignFinite{branch.elements.back()};
        return SameSignInfinite{first.polarity()};
    }
    }
    throw Error{ErrorKind::InvalidArgument, "unknown branch evaluation"};
}

Fact value_of_class(BranchEvaluation be, const BranchClass& cls)
{
    using namespace branch_class;
    auto invalid = [&]() -> Fact {
        throw Error{ErrorKind::InvalidArgument,
                    "branch class not used by " + std::string{to_string(be)}};
    };
    switch (be) {
    case BranchEvaluation::WellFounded:
        if (auto* c = std::get_if<FiniteEndingIn>(&cls))
            return c->sink;
        if (std::holds_alternative<InfiniteNegativeTail>(cls))
            return Fact::t();
        if (std::holds_alternative<InfinitePositiveTail>(cls))
            return Fact::f();
        if (std::holds_alternative<InfiniteMixed>(cls))
            return Fact::u();
        return invalid();
    case BranchEvaluation::KripkeKleene:
        if (auto* c = std::get_if<FiniteEndingIn>(&cls))
            return c->sink;
        if (std::holds_alternative<InfiniteNegativeTail>(cls) ||
            std::holds_alternative<InfinitePositiveTail>(cls) ||
            std::holds_alternative<InfiniteMixed>(cls))
            return Fact::u();
        return invalid();
    case BranchEvaluation::Stable:
        if (auto* c = std::get_if<FirstSignSwitch>(&cls))
            return c->switched_to;
        if (auto* c = std::get_if<SameSignFinite>(&cls))
            return c->sink;
        if (auto* c = std::get_if<SameSignInfinite>(&cls))
            return c->polarity == Polarity::Positive ? Fact::f() : Fact::t();
        return invalid();
    case BranchEvaluation::Completion:
        if (auto* c = std::get_if<SecondElement>(&cls))
            return c->second;
        return invalid();
    }
    return invalid();
}

} // namespace jt
