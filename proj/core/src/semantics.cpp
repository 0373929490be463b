#include "jt/semantics.hpp"

#include "jt/error.hpp"
#include "jt/justification.hpp"

namespace jt {

std::string_view to_string(TruthValue v)
{
    switch (v) {
    case TruthValue::True: return "true";
    case TruthValue::False: return "false";
    case TruthValue::Unknown: return "unknown";
    }
    return "?";
}

ThreeValuedModel::ThreeValuedModel(std::shared_ptr<const Vocabulary> vocab, const Interpretation& facts)
    : vocab_{std::move(vocab)}, values_(vocab_->size(), TruthValue::Unknown)
{
    for (AtomId a = 0; a < values_.size(); ++a) {
        const bool pos = facts.contains(Fact::literal(a, Polarity::Positive));
        const bool neg = facts.contains(Fact::literal(a, Polarity::Negative));
        if (pos && neg)
            throw Error{ErrorKind::DefectDetected, vocab_->name(a) + " is both true and false"};
        if (pos)
            values_[a] = TruthValue::True;
        else if (neg)
            values_[a] = TruthValue::False;
    }
}

TruthValue ThreeValuedModel::value(Fact literal) const
{
    const TruthValue v = value(literal.atom());
    if (literal.is_positive() || v == TruthValue::Unknown)
        return v;
    return v == TruthValue::True ? TruthValue::False : TruthValue::True;
}

Interpretation initial_interpretation(const OpenAssignment& opens)
{
    Interpretation out{Fact::t()};
    for (const auto& [fact, value] : opens)
        out.insert(value ? fact : negate(fact));
    return out;
}

Interpretation support_operator(const Frame& frame, BranchEvaluation be, const Interpretation& interp)
{
    return supported_set(frame, be, interp);
}

Interpretation extended_lfp(const Frame& frame, BranchEvaluation be, const Interpretation& base)
{
    Interpretation current = base;
    while (true) {
        Interpretation next = current;
        next |= support_operator(frame, be, current);
        if (next == current)
            return current;
        current = std::move(next);
    }
}

ThreeValuedModel wf_model(const Frame& frame, const OpenAssignment& opens)
{
    return {frame.vocabulary_ptr(),
            extended_lfp(frame, BranchEvaluation::WellFounded, initial_interpretation(opens))};
}

ThreeValuedModel kk_model(const Frame& frame, const OpenAssignment& opens)
{
    return {frame.vocabulary_ptr(),
            extended_lfp(frame, BranchEvaluation::KripkeKleene, initial_interpretation(opens))};
}

std::vector<Fact> defects(const Frame& frame, BranchEvaluation be, const Interpretation& interp)
{
    const Interpretation supported = supported_set(frame, be, interp);
    std::vector<Fact> out;
    for (Fact x : supported.facts())
        if (x.is_positive() && supported.contains(negate(x)))
            out.push_back(x);
    return out;
}

std::vector<Interpretation> total_models(const Frame& frame, BranchEvaluation be,
                                         const OpenAssignment& opens, const DefectHandler& on_defect,
                                         std::size_t atom_cap)
{
    std::vector<AtomId> atoms;
    for (AtomId a = 0; a < frame.vocabulary().size(); ++a)
        if (frame.is_defined(Fact::literal(a, Polarity::Positive)) ||
            frame.is_defined(Fact::literal(a, Polarity::Negative)))
            atoms.push_back(a);
    if (atoms.size() > atom_cap)
        throw Error{ErrorKind::SearchSpaceTooLarge,
                    std::to_string(atoms.size()) + " defined atoms exceed the cap of " +
                        std::to_string(atom_cap)};

    const Interpretation base = initial_interpretation(opens);
    std::vector<Interpretation> models;
    const std::uint64_t candidates = std::uint64_t{1} << atoms.size();
    for (std::uint64_t mask = 0; mask < candidates; ++mask) {
        Interpretation candidate = base;
        for (std::size_t k = 0; k < atoms.size(); ++k)
            candidate.insert(Fact::literal(atoms[k], ((mask >> k) & 1U) != 0 ? Polarity::Positive
                                                                              : Polarity::Negative));
        const Interpretation supported = supported_set(frame, be, candidate);
        for (Fact x : supported.facts()) {
            if (!x.is_positive() || !supported.contains(negate(x)))
                continue;
            if (!on_defect)
                throw Error{ErrorKind::DefectDetected, frame.to_string(x)};
            on_defect(x, candidate);
        }
        bool model = true;
        for (Fact y : candidate.facts()) {
            if (frame.is_defined(y) && !supported.contains(y)) {
                model = false;
                break;
            }
        }
        if (model)
            models.push_back(std::move(candidate));
    }
    return models;
}

} // namespace jt
