#include "jt/fuzz.hpp"

#include "jt/oracle.hpp"
#include "json.hpp"

namespace jt {

std::uint64_t SplitMix64::next()
{
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::size_t SplitMix64::range(std::size_t lo, std::size_t hi)
{
    return lo + static_cast<std::size_t>(next() % (hi - lo + 1));
}

std::string FuzzEntry::to_json_line() const
{
    nlohmann::json j;
    j["program"] = program;
    j["semantics"] = std::string{to_string(semantics)};
    j["engine_result"] = nlohmann::json::parse(engine_result);
    j["oracle_result"] = nlohmann::json::parse(oracle_result);
    j["agree"] = agree;
    j["defects"] = defects;
    return j.dump();
}

std::size_t FuzzReport::mismatches() const
{
    std::size_t n = 0;
    for (const FuzzEntry& e : entries)
        n += e.agree ? 0 : 1;
    return n;
}

std::size_t FuzzReport::defect_count() const
{
    std::size_t n = 0;
    for (const FuzzEntry& e : entries)
        n += e.defects.size();
    return n;
}

Program random_program(SplitMix64& rng, std::size_t max_atoms, std::size_t max_rules,
                       std::size_t max_body)
{
    const std::size_t atoms = rng.range(1, std::max<std::size_t>(1, max_atoms));
    const std::size_t rules = rng.range(1, std::max<std::size_t>(1, max_rules));
    auto atom = [&] { return Atom{"p" + std::to_string(rng.range(0, atoms - 1)), {}}; };

    Program prog;
    for (std::size_t r = 0; r < rules; ++r) {
        SchematicRule rule;
        rule.head = atom();
        const std::size_t body = rng.range(0, max_body);
        for (std::size_t k = 0; k < body; ++k) {
            BodyLiteral lit;
            lit.negated = rng.coin();
            lit.atom = atom();
            rule.body.push_back(std::move(lit));
        }
        prog.rules.push_back(std::move(rule));
    }
    return prog;
}

FuzzReport fuzz_check(const FuzzConfig& config)
{
    FuzzReport report;
    SplitMix64 rng{config.seed};
    for (std::size_t p = 0; p < config.count; ++p) {
        const Program prog = random_program(rng, config.max_atoms, config.max_rules, config.max_body);
        const Frame frame = to_frame(prog);
        ++report.programs;
        for (BranchEvaluation be : all_branch_evaluations) {
            FuzzEntry entry;
            entry.program = to_string(prog);
            entry.semantics = be;
            auto on_defect = [&](Fact x, const Interpretation& where) {
                std::string set;
                for (Fact y : where.facts())
                    set += (set.empty() ? "" : ",") + frame.to_string(y);
                entry.defects.push_back(frame.to_string(x) + " and " + frame.to_string(negate(x)) +
                                        " supported in {" + set + "}");
            };
            const SemanticsResult engine = engine_models(frame, be, {}, on_defect);
            const SemanticsResult oracle = oracle_models(prog, be);
            entry.engine_result = engine.to_json();
            entry.oracle_result = oracle.to_json();
            entry.agree = engine == oracle;
            report.entries.push_back(std::move(entry));
        }
    }
    return report;
}

} // namespace jt
