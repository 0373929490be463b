#include "jt/oracle.hpp"

#include "jt/error.hpp"
#include "json.hpp"

#include <algorithm>
#include <map>

namespace jt {

std::string SemanticsResult::to_json() const
{
    nlohmann::json out;
    if (is_three_valued()) {
        out = nlohmann::json::object();
        for (TruthValue v : {TruthValue::True, TruthValue::False, TruthValue::Unknown})
            out[std::string{jt::to_string(v)}] = nlohmann::json::array();
        for (const auto& [name, v] : three_valued)
            out[std::string{jt::to_string(v)}].push_back(name);
    } else {
        out = models;
    }
    return out.dump();
}

OpenAssignment resolve_opens(const Frame& frame, const NamedOpens& named)
{
    OpenAssignment out;
    for (const auto& [text, value] : named) {
        const std::string name = parse_atom(text).to_string();
        const auto atom = frame.vocabulary().find(name);
        if (!atom)
            throw Error{ErrorKind::UnknownFact, name};
        const Fact x = Fact::literal(*atom);
        if (!frame.is_open(x))
            throw Error{ErrorKind::NotOpen, name};
        out[x] = value;
    }
    return out;
}

SemanticsResult engine_models(const Frame& frame, BranchEvaluation semantics,
                              const OpenAssignment& opens, const DefectHandler& on_defect)
{
    SemanticsResult out;
    out.semantics = semantics;
    const Vocabulary& vocab = frame.vocabulary();
    if (out.is_three_valued()) {
        const Interpretation fixpoint = extended_lfp(frame, semantics, initial_interpretation(opens));
        if (on_defect) {
            for (Fact x : defects(frame, semantics, fixpoint))
                on_defect(x, fixpoint);
            for (AtomId a = 0; a < vocab.size(); ++a)
                if (fixpoint.contains(Fact::literal(a, Polarity::Positive)) &&
                    fixpoint.contains(Fact::literal(a, Polarity::Negative)))
                    return out; // inconsistent fixpoint, already reported above
        }
        const ThreeValuedModel model{frame.vocabulary_ptr(), fixpoint};
        for (AtomId a = 0; a < vocab.size(); ++a)
            out.three_valued[vocab.name(a)] = model.value(a);
        return out;
    }
    for (const Interpretation& m : total_models(frame, semantics, opens, on_defect)) {
        std::vector<std::string> atoms;
        for (Fact x : m.facts())
            if (x.is_positive())
                atoms.push_back(vocab.name(x.atom()));
        std::sort(atoms.begin(), atoms.end());
        out.models.push_back(std::move(atoms));
    }
    std::sort(out.models.begin(), out.models.end());
    return out;
}

namespace {

// Normal program over atom indices; `blocked` rules can never fire.
struct ClassicalRule {
    std::size_t head = 0;
    std::vector<std::size_t> pos;
    std::vector<std::size_t> neg;
    bool blocked = false;
};

using AtomSet = std::vector<bool>;

class ClassicalProgram {
public:
    ClassicalProgram(const Program& program, const NamedOpens& opens)
    {
        std::set<std::string> names;
        for (const SchematicRule& r : program.rules) {
            names.insert(r.head.to_string());
            for (const BodyLiteral& l : r.body)
                if (l.kind == BodyLiteral::Kind::Atom)
                    names.insert(l.atom.to_string());
        }
        names_.assign(names.begin(), names.end());
        for (std::size_t k = 0; k < names_.size(); ++k)
            index_[names_[k]] = k;

        for (const SchematicRule& r : program.rules) {
            ClassicalRule cr;
            cr.head = index_.at(r.head.to_string());
            for (const BodyLiteral& l : r.body) {
                switch (l.kind) {
                case BodyLiteral::Kind::True: cr.blocked = cr.blocked || l.negated; break;
                case BodyLiteral::Kind::False: cr.blocked = cr.blocked || !l.negated; break;
                case BodyLiteral::Kind::Atom:
                    (l.negated ? cr.neg : cr.pos).push_back(index_.at(l.atom.to_string()));
                    break;
                }
            }
            rules_.push_back(std::move(cr));
        }

        std::map<std::string, bool> normalized;
        for (const auto& [text, value] : opens)
            normalized[parse_atom(text).to_string()] = value;
        for (const std::string& name : names_) {
            if (!program.is_open(parse_atom(name)))
                continue;
            auto it = normalized.find(name);
            if (it == normalized.end())
                throw Error{ErrorKind::InvalidArgument, "no value for open atom " + name};
            if (it->second)
                rules_.push_back(ClassicalRule{index_.at(name), {}, {}, false});
        }
        for (const auto& [name, value] : normalized)
            if (!index_.contains(name))
                throw Error{ErrorKind::UnknownFact, name};
    }

    [[nodiscard]] std::size_t size() const { return names_.size(); }
    [[nodiscard]] const std::string& name(std::size_t k) const { return names_[k]; }

    // Least model of the reduct w.r.t. `context`.
    [[nodiscard]] AtomSet gamma(const AtomSet& context) const
    {
        AtomSet m(size(), false);
        bool changed = true;
        while (changed) {
            changed = false;
            for (const ClassicalRule& r : rules_) {
                if (r.blocked || m[r.head] || any(r.neg, context) || !all(r.pos, m))
                    continue;
                m[r.head] = true;
                changed = true;
            }
        }
        return m;
    }

    [[nodiscard]] AtomSet immediate_consequence(const AtomSet& m) const
    {
        AtomSet out(size(), false);
        for (const ClassicalRule& r : rules_)
            if (!r.blocked && all(r.pos, m) && !any(r.neg, m))
                out[r.head] = true;
        return out;
    }

    // Least fixpoint of Fitting's operator, as (true atoms, false atoms).
    [[nodiscard]] std::pair<AtomSet, AtomSet> fitting() const
    {
        AtomSet t(size(), false), f(size(), false);
        while (true) {
            AtomSet nt(size(), false), nf(size(), true);
            for (const ClassicalRule& r : rules_) {
                const bool body_true = !r.blocked && all(r.pos, t) && all(r.neg, f);
                const bool body_false = r.blocked || any(r.pos, f) || any(r.neg, t);
                if (body_true)
                    nt[r.head] = true;
                if (!body_false)
                    nf[r.head] = false;
            }
            if (nt == t && nf == f)
                return {t, f};
            t = std::move(nt);
            f = std::move(nf);
        }
    }

private:
    static bool all(const std::vector<std::size_t>& atoms, const AtomSet& s)
    {
        return std::all_of(atoms.begin(), atoms.end(), [&](std::size_t a) { return s[a]; });
    }
    static bool any(const std::vector<std::size_t>& atoms, const AtomSet& s)
    {
        return std::any_of(atoms.begin(), atoms.end(), [&](std::size_t a) { return s[a]; });
    }

    std::vector<std::string> names_;
    std::map<std::string, std::size_t> index_;
    std::vector<ClassicalRule> rules_;
};

constexpr std::size_t oracle_atom_cap = 24;

} // namespace

SemanticsResult oracle_models(const Program& ground_program, BranchEvaluation semantics,
                              const NamedOpens& opens)
{
    const ClassicalProgram prog{ground_program, opens};
    const std::size_t n = prog.size();
    SemanticsResult out;
    out.semantics = semantics;

    auto fill = [&](const AtomSet& t, const AtomSet& f) {
        for (std::size_t k = 0; k < n; ++k)
            out.three_valued[prog.name(k)] =
                t[k] ? TruthValue::True : (f[k] ? TruthValue::False : TruthValue::Unknown);
    };

    switch (semantics) {
    case BranchEvaluation::WellFounded: {
        // alternating fixpoint: T = lfp(gamma o gamma), non-false = gamma(T)
        AtomSet t(n, false);
        while (true) {
            AtomSet next = prog.gamma(prog.gamma(t));
            if (next == t)
                break;
            t = std::move(next);
        }
        AtomSet f = prog.gamma(t);
        f.flip();
        fill(t, f);
        return out;
    }
    case BranchEvaluation::KripkeKleene: {
        const auto [t, f] = prog.fitting();
        fill(t, f);
        return out;
    }
    case BranchEvaluation::Stable:
    case BranchEvaluation::Completion:
        break;
    }

    if (n > oracle_atom_cap)
        throw Error{ErrorKind::SearchSpaceTooLarge, std::to_string(n) + " atoms"};
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        AtomSet m(n, false);
        for (std::size_t k = 0; k < n; ++k)
            m[k] = ((mask >> k) & 1U) != 0;
        const AtomSet image = semantics == BranchEvaluation::Stable ? prog.gamma(m)
                                                                   : prog.immediate_consequence(m);
        if (image != m)
            continue;
        std::vector<std::string> atoms;
        for (std::size_t k = 0; k < n; ++k)
            if (m[k])
                atoms.push_back(prog.name(k));
        out.models.push_back(std::move(atoms));
    }
    std::sort(out.models.begin(), out.models.end());
    return out;
}

} // namespace jt
