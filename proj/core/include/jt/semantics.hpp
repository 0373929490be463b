#pragma once

#include "jt/branch_evaluation.hpp"
#include "jt/frame.hpp"
#include "jt/interpretation.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <vector>

namespace jt {

/// Values for open atoms, keyed by the positive open literal.
using OpenAssignment = std::map<Fact, bool>;

enum class TruthValue { True, False, Unknown };

std::string_view to_string(TruthValue v);

/// Three-valued reading of a fact set: x true iff x is in it, false iff ~x is.
class ThreeValuedModel {
public:
    ThreeValuedModel() = default;
    ThreeValuedModel(std::shared_ptr<const Vocabulary> vocab, const Interpretation& facts);

    [[nodiscard]] TruthValue value(AtomId atom) const { return values_.at(atom); }
    [[nodiscard]] TruthValue value(Fact literal) const;
    [[nodiscard]] std::size_t size() const { return values_.size(); }
    [[nodiscard]] const Vocabulary& vocabulary() const { return *vocab_; }

    bool operator==(const ThreeValuedModel& other) const { return values_ == other.values_; }

private:
    std::shared_ptr<const Vocabulary> vocab_;
    std::vector<TruthValue> values_;
};

/// {t} together with the assigned open literals.
Interpretation initial_interpretation(const OpenAssignment& opens);

Interpretation support_operator(const Frame& frame, BranchEvaluation be, const Interpretation& interp);

/// Least fixpoint of I -> I u support_operator(I) above `base`.
Interpretation extended_lfp(const Frame& frame, BranchEvaluation be, const Interpretation& base);

ThreeValuedModel wf_model(const Frame& frame, const OpenAssignment& opens);
ThreeValuedModel kk_model(const Frame& frame, const OpenAssignment& opens);

inline constexpr std::size_t default_model_atom_cap = 24;

/// Called for a fact x such that both x and ~x are supported in a candidate.
using DefectHandler = std::function<void(Fact x, const Interpretation& candidate)>;

/// Total interpretations M (over the defined atoms; opens as assigned) in
/// which every defined member of M is supported under `be`. Candidates are
/// tried in binary counting order over defined atoms in ascending id.
/// Without a handler a defect throws DefectDetected.
std::vector<Interpretation> total_models(const Frame& frame, BranchEvaluation be,
                                         const OpenAssignment& opens,
                                         const DefectHandler& on_defect = {},
                                         std::size_t atom_cap = default_model_atom_cap);

inline std::vector<Interpretation> stable_models(const Frame& frame, const OpenAssignment& opens)
{
    return total_models(frame, BranchEvaluation::Stable, opens);
}

inline std::vector<Interpretation> supported_models(const Frame& frame, const OpenAssignment& opens)
{
    return total_models(frame, BranchEvaluation::Completion, opens);
}

/// Facts x with both x and ~x supported in `interp`.
std::vector<Fact> defects(const Frame& frame, BranchEvaluation be, const Interpretation& interp);

} // namespace jt
