// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "fixtures.hpp"
#include "generators.hpp"
#include "jt/explanation.hpp"
#include "jt/fuzz.hpp"
#include "jt/session.hpp"
#include "lasso_oracle.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace jt;
using jt::testing::fact;

namespace {

// Pinned limits.
constexpr double golden_time_limit_s = 1.0;
constexpr std::uint64_t fuzz_seed = 20240501;
constexpr std::size_t fuzz_programs = 500;
constexpr std::size_t checker_instances = 1000;
constexpr std::size_t branch_justifications = 500;
constexpr std::size_t max_defined_in_branch_check = 8;
constexpr std::size_t relevance_sessions = 200;
constexpr std::size_t max_session_opens = 10;

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void report(const std::string& name, const std::function<Outcome()>& check, double time_limit_s = 0)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = check();
    } catch (const std::exception& e) {
        o = {false, std::string{"exception: "} + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (time_limit_s > 0 && seconds >= time_limit_s) {
        o.pass = false;
        o.detail += "; exceeded " + std::to_string(time_limit_s) + " s";
    }
    failures += o.pass ? 0 : 1;
    std::ostringstream line;
    line.precision(3);
    line << std::fixed << (o.pass ? "PASS" : "FAIL") << "  " << name << "  (" << seconds << " s)  " << o.detail;
    std::cout << line.str() << std::endl;
}

const char* const golden_dot = R"dot(digraph justification {
  n6 [label="edge(a,b)"];
  n14 [label="edge(b,c)"];
  n24 [label="path(a,b)"];
  n26 [label="path(a,c)", peripheries=2];
  n32 [label="path(b,c)"];
  n24 -> n6;
  n26 -> n24;
  n26 -> n32;
  n32 -> n14;
}
)dot";

Outcome path_example()
{
    const Frame frame = jt::testing::path_frame();
    const OpenAssignment edges = jt::testing::example_edges(frame);
    const Interpretation i = jt::testing::interpretation(frame, {"edge(a,b)", "edge(b,c)"});
    const Explanation e = explain(frame, BranchEvaluation::WellFounded, i, fact(frame, "path(a,c)"));

    std::vector<std::string> nodes;
    for (Fact x : e.nodes)
        nodes.push_back(frame.to_string(x));
    std::vector<std::pair<std::string, std::string>> arrows;
    for (const auto& [from, to] : e.edges)
        arrows.emplace_back(frame.to_string(from), frame.to_string(to));
    const bool graph = nodes == std::vector<std::string>{"edge(a,b)", "edge(b,c)", "path(a,b)", "path(a,c)", "path(b,c)"} &&
                       arrows == std::vector<std::pair<std::string, std::string>>{{"path(a,b)", "edge(a,b)"},
                                                                                 {"path(a,c)", "path(a,b)"},
                                                                                 {"path(a,c)", "path(b,c)"},
                                                                                 {"path(b,c)", "edge(b,c)"}};
    const std::string dot = export_dot(e);
    const bool stable_dot = dot == golden_dot &&
                            dot == export_dot(explain(frame, BranchEvaluation::WellFounded, i, fact(frame, "path(a,c)")));

    const ThreeValuedModel m = wf_model(frame, edges);
    bool model = true;
    for (Fact x : frame.defined()) {
        if (!x.is_positive())
            continue;
        const std::string name = frame.to_string(x);
        const bool expected = name == "path(a,b)" || name == "path(b,c)" || name == "path(a,c)";
        model = model && m.value(x) == (expected ? TruthValue::True : TruthValue::False);
    }
    return {graph && stable_dot && model, "graph " + std::string{graph ? "exact" : "differs"} + ", dot " +
                                              (stable_dot ? "golden" : "differs") + ", wf model " +
                                              (model ? "exact" : "differs")};
}

Outcome negation_loop()
{
    const Frame frame = jt::testing::frame_of("p :- not p.");
    Justification j;
    j.choose(jt::testing::rule(frame, "p", {"~p"}));
    j.choose(jt::testing::rule(frame, "~p", {"p"}));
    const Fact p = fact(frame, "p");
    const bool wf = branch_values(frame, j, p, BranchEvaluation::WellFounded) == std::set<Fact>{Fact::u()};
    const bool st = branch_values(frame, j, p, BranchEvaluation::Stable) == std::set<Fact>{negate(p)};
    const bool unknown = wf_model(frame, {}).value(p) == TruthValue::Unknown;
    const bool no_models = stable_models(frame, {}).empty();
    return {wf && st && unknown && no_models,
            std::string{"wf {u} "} + (wf ? "yes" : "no") + ", stable {~p} " + (st ? "yes" : "no") +
                ", p unknown " + (unknown ? "yes" : "no") + ", no stable models " + (no_models ? "yes" : "no")};
}

const FuzzReport& fuzz_corpus()
{
    static const FuzzReport report = fuzz_check({fuzz_seed, fuzz_programs, 6, 12, 3});
    return report;
}

Outcome oracle_equivalence()
{
    const FuzzReport& r = fuzz_corpus();
    std::string detail = std::to_string(r.programs) + " programs, " + std::to_string(r.entries.size()) +
                         " comparisons, " + std::to_string(r.mismatches()) + " mismatches";
    for (const FuzzEntry& e : r.entries)
        if (!e.agree) {
            detail += "; first: " + e.to_json_line();
            break;
        }
    return {r.programs >= fuzz_programs && r.mismatches() == 0, detail};
}

Outcome non_defectiveness()
{
    const FuzzReport& r = fuzz_corpus();
    return {r.programs >= fuzz_programs && r.defect_count() == 0,
            std::to_string(r.entries.size()) + " fixpoint/model checks, " + std::to_string(r.defect_count()) +
                " defects"};
}

Outcome checker_equivalence()
{
    SplitMix64 rng{fuzz_seed + 1};
    std::size_t instances = 0;
    std::size_t agree = 0;
    std::size_t supported = 0;
    std::size_t over_cap = 0;
    while (instances < checker_instances) {
        const Frame frame = jt::testing::random_frame(rng, {4, 10, 3, true});
        const Interpretation interp = jt::testing::random_interpretation(rng, frame, rng.range(20, 90));
        for (BranchEvaluation be : all_branch_evaluations) {
            for (Fact x : frame.defined()) {
                bool brute = false;
                try {
                    brute = supports_bruteforce(frame, be, interp, x).supported;
                } catch (const Error& e) {
                    if (e.kind() != ErrorKind::SearchSpaceTooLarge)
                        throw;
                    ++over_cap;
                    continue;
                }
                ++instances;
                supported += brute ? 1 : 0;
                agree += supports(frame, be, interp, x) == brute ? 1 : 0;
            }
        }
    }
    return {agree == instances, std::to_string(agree) + "/" + std::to_string(instances) + " agree (" +
                                    std::to_string(supported) + " supported, " + std::to_string(over_cap) +
                                    " skipped over cap)"};
}

Outcome branch_soundness()
{
    SplitMix64 rng{fuzz_seed + 2};
    std::size_t checked = 0;
    std::size_t agree = 0;
    while (checked < branch_justifications) {
        const Frame frame = jt::testing::random_frame(rng, {4, 12, 3, true});
        if (frame.defined().size() > max_defined_in_branch_check)
            continue;
        const Justification j = jt::testing::random_total_justification(rng, frame);
        const Fact start = jt::testing::random_defined(rng, frame);
        bool ok = true;
        for (BranchEvaluation be : all_branch_evaluations) {
            const auto oracle = jt::testing::lasso_values(frame, j, start, be);
            const std::set<Fact> got = branch_values(frame, j, start, be);
            ok = ok && got == oracle.all;
            if (be != BranchEvaluation::Completion)
                for (Fact v : got)
                    ok = ok && (!frame.is_open(v) || oracle.finite.contains(v));
        }
        ++checked;
        agree += ok ? 1 : 0;
    }
    return {agree == checked, std::to_string(agree) + "/" + std::to_string(checked) +
                                  " justifications agree under all four evaluations"};
}

Outcome relevance()
{
    SplitMix64 rng{fuzz_seed + 3};
    std::size_t sessions = 0;
    std::size_t irrelevant_answers = 0;
    std::size_t violations = 0;
    std::size_t undecided_after = 0;
    while (sessions < relevance_sessions) {
        const std::size_t opens = rng.range(1, max_session_opens);
        const Program program = jt::testing::random_program_with_opens(rng, opens, opens + 4, 10, 3);
        std::set<std::string> names;
        for (std::size_t k = 0; k < opens; ++k)
            names.insert("p" + std::to_string(k));
        auto frame = std::make_shared<const Frame>(to_frame(program, names));
        if (frame->defined().empty())
            continue;
        std::vector<Fact> open_atoms;
        for (std::size_t k = 0; k < opens; ++k)
            open_atoms.push_back(fact(*frame, "p" + std::to_string(k)));
        std::vector<Fact> queries;
        for (Fact x : frame->defined())
            if (x.is_positive())
                queries.push_back(x);
        const BranchEvaluation be = rng.coin() ? BranchEvaluation::WellFounded : BranchEvaluation::KripkeKleene;

        OpenAssignment answered;
        for (Fact o : open_atoms)
            if (rng.range(0, 3) == 0)
                answered[o] = rng.coin();
        const SessionState state{frame, be, answered, queries};
        ++sessions;

        std::set<Fact> all_relevant;
        for (const QueryState& q : state.queries())
            all_relevant.insert(q.relevant.begin(), q.relevant.end());

        for (Fact o : open_atoms) {
            if (answered.contains(o))
                continue;
            for (bool v : {false, true}) {
                const SessionState next = session_step(state, {action::Answer{o, v}});
                for (std::size_t k = 0; k < queries.size(); ++k) {
                    const auto& rel = state.queries()[k].relevant;
                    if (std::find(rel.begin(), rel.end(), o) != rel.end())
                        continue;
                    ++irrelevant_answers;
                    violations += next.queries()[k].status != state.queries()[k].status ? 1 : 0;
                }
            }
        }

        SessionState full = state;
        for (Fact o : all_relevant)
            full = session_step(full, {action::Answer{o, rng.coin()}});
        for (const QueryState& q : full.queries())
            undecided_after += q.status == Decision::Open ? 1 : 0;
    }
    return {violations == 0 && undecided_after == 0,
            std::to_string(sessions) + " sessions, " + std::to_string(irrelevant_answers) +
                " irrelevant answers checked, " + std::to_string(violations) + " changed a status, " +
                std::to_string(undecided_after) + " queries open after answering all relevant opens"};
}

} // namespace

int main()
{
    report("path example: explanation graph, DOT and well-founded model", path_example, golden_time_limit_s);
    report("p <- ~p: branch values, well-founded model, stable models", negation_loop, golden_time_limit_s);
    report("oracle equivalence on random programs (wf, stable, kk, sp)", oracle_equivalence);
    report("non-defectiveness on the same corpus", non_defectiveness);
    report("optimized checker agrees with brute force", checker_equivalence);
    report("branch values agree with prefix and lasso enumeration", branch_soundness);
    report("counterfactual relevance on random sessions", relevance);
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
