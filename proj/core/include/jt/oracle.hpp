#pragma once

#include "jt/branch_evaluation.hpp"
#include "jt/program.hpp"
#include "jt/semantics.hpp"

#include <map>
#include <string>
#include <vector>

namespace jt {

/// Open atom values by printable name, as read from an opens file.
using NamedOpens = std::map<std::string, bool>;

/// Semantics output in a form both the justification engine and the classical
/// oracles can produce. Three-valued semantics (wf, kk) fill `three_valued`;
/// model semantics (stable, sp) fill `models` with the true atoms of each
/// model, each list sorted and the list of models sorted.
struct SemanticsResult {
    BranchEvaluation semantics = BranchEvaluation::WellFounded;
    std::map<std::string, TruthValue> three_valued;
    std::vector<std::vector<std::string>> models;

    [[nodiscard]] bool is_three_valued() const
    {
        return semantics == BranchEvaluation::WellFounded ||
               semantics == BranchEvaluation::KripkeKleene;
    }

    /// Compact JSON with sorted keys.
    [[nodiscard]] std::string to_json() const;

    bool operator==(const SemanticsResult&) const = default;
};

/// Resolves names against a frame. Throws UnknownFact or NotOpen.
OpenAssignment resolve_opens(const Frame& frame, const NamedOpens& named);

/// Justification semantics of a frame, in oracle-comparable form. With a
/// handler, defects are reported for the fixpoint (wf, kk) or for every model
/// candidate (stable, sp) instead of raising DefectDetected.
SemanticsResult engine_models(const Frame& frame, BranchEvaluation semantics,
                              const OpenAssignment& opens, const DefectHandler& on_defect = {});

/// Classical reference semantics computed directly on a ground program:
/// stable via Gelfond-Lifschitz reducts, wf via the alternating fixpoint,
/// kk via Fitting's operator, sp via fixpoints of the immediate consequence
/// operator. Assigned opens become facts (true) or stay rule-less (false);
/// unassigned opens are not supported and throw InvalidArgument.
SemanticsResult oracle_models(const Program& ground_program, BranchEvaluation semantics,
                              const NamedOpens& opens = {});

} // namespace jt
