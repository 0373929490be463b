#include "jt/fuzz.hpp"
#include "jt/justification.hpp"
#include "jt/program.hpp"
#include "jt/semantics.hpp"

#include <benchmark/benchmark.h>

#include <string>

namespace {

constexpr const char* path_rules = "path(X,Y) :- edge(X,Y).\n"
                                   "path(X,Y) :- path(X,Z), path(Z,Y).\n"
                                   "#open edge/2.\n";

std::string node(int k) { return "n" + std::to_string(k); }

jt::Frame path_frame(int nodes)
{
    std::set<std::string> domain;
    for (int k = 0; k < nodes; ++k)
        domain.insert(node(k));
    return jt::to_frame(jt::ground(jt::parse(path_rules), domain));
}

// Edges along the chain n0 -> n1 -> ... ; all other edges false.
jt::OpenAssignment chain_edges(const jt::Frame& frame, int nodes)
{
    jt::OpenAssignment opens;
    for (jt::Fact x : frame.open())
        if (x.is_positive())
            opens[x] = false;
    for (int k = 0; k + 1 < nodes; ++k)
        opens[*frame.vocabulary().parse_fact("edge(" + node(k) + "," + node(k + 1) + ")")] = true;
    return opens;
}

void BM_SupportsPathEnd(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const jt::Frame frame = path_frame(n);
    const jt::Interpretation i = jt::initial_interpretation(chain_edges(frame, n));
    const jt::Fact x = *frame.vocabulary().parse_fact("path(" + node(0) + "," + node(n - 1) + ")");
    for (auto _ : state)
        benchmark::DoNotOptimize(jt::supports(frame, jt::BranchEvaluation::WellFounded, i, x));
}
BENCHMARK(BM_SupportsPathEnd)->DenseRange(3, 7);

void BM_BruteForcePathEnd(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const jt::Frame frame = path_frame(n);
    const jt::Interpretation i = jt::initial_interpretation(chain_edges(frame, n));
    const jt::Fact x = *frame.vocabulary().parse_fact("path(" + node(0) + "," + node(n - 1) + ")");
    for (auto _ : state)
        benchmark::DoNotOptimize(jt::supports_bruteforce(frame, jt::BranchEvaluation::WellFounded, i, x));
}
BENCHMARK(BM_BruteForcePathEnd)->DenseRange(3, 5);

void BM_WellFoundedModelPath(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const jt::Frame frame = path_frame(n);
    const jt::OpenAssignment opens = chain_edges(frame, n);
    for (auto _ : state)
        benchmark::DoNotOptimize(jt::wf_model(frame, opens));
}
BENCHMARK(BM_WellFoundedModelPath)->DenseRange(3, 7);

void BM_StableModelsRandom(benchmark::State& state)
{
    jt::SplitMix64 rng{7};
    std::vector<jt::Frame> frames;
    for (int k = 0; k < 16; ++k)
        frames.push_back(jt::to_frame(jt::random_program(rng, static_cast<std::size_t>(state.range(0)), 12, 3)));
    std::size_t k = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(jt::stable_models(frames[k++ % frames.size()], {}));
}
BENCHMARK(BM_StableModelsRandom)->Arg(4)->Arg(6)->Arg(8);

// A ring of alternating signs: every branch_values call walks one large SCC.
void BM_BranchValuesRing(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    auto vocab = std::make_shared<jt::Vocabulary>();
    for (std::size_t k = 0; k < n; ++k)
        vocab->intern("a" + std::to_string(k));
    std::vector<jt::Rule> rules;
    for (std::size_t k = 0; k < n; ++k) {
        const auto pol = k % 2 == 0 ? jt::Polarity::Positive : jt::Polarity::Negative;
        const auto next_pol = k % 2 == 0 ? jt::Polarity::Negative : jt::Polarity::Positive;
        rules.emplace_back(jt::Fact::literal(static_cast<jt::AtomId>(k), pol),
                           std::vector<jt::Fact>{jt::Fact::literal(static_cast<jt::AtomId>((k + 1) % n), next_pol)});
    }
    const jt::Frame frame = jt::build_frame(std::move(rules), vocab);
    jt::Justification j;
    for (const jt::Rule& r : frame.rules())
        j.choose(r);
    const jt::Fact start = jt::Fact::literal(0);
    for (auto _ : state)
        for (jt::BranchEvaluation be : jt::all_branch_evaluations)
            benchmark::DoNotOptimize(jt::branch_values(frame, j, start, be));
}
BENCHMARK(BM_BranchValuesRing)->RangeMultiplier(4)->Range(16, 4096);

} // namespace
BENCHMARK_MAIN();
