#include "doctest.h"
#include "generators.hpp"
#include "jt/error.hpp"
#include "jt/frame.hpp"

#include <algorithm>

using namespace jt;
using jt::testing::numbered_vocabulary;

namespace {

Fact pos(AtomId a) { return Fact::literal(a); }
Fact neg(AtomId a) { return Fact::literal(a, Polarity::Negative); }

std::vector<std::vector<Fact>> bodies_of(const Frame& frame, Fact head)
{
    std::vector<std::vector<Fact>> out;
    for (RuleId id : frame.rules_for(head))
        out.push_back(frame.rule(id).body);
    return out;
}

ErrorKind kind_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::InvalidArgument;
}

} // namespace

TEST_CASE("defined facts are the heads, everything else is open")
{
    auto vocab = std::make_shared<Vocabulary>();
    const AtomId path = vocab->intern("path(a,c)");
    const AtomId edge = vocab->intern("edge(a,c)");
    const Frame frame = build_frame({Rule{pos(path), {pos(edge)}}}, vocab);
    CHECK(frame.defined() == std::vector<Fact>{pos(path)});
    const auto open = frame.open();
    CHECK(std::find(open.begin(), open.end(), pos(edge)) != open.end());
    CHECK(frame.is_open(neg(path)));
}

TEST_CASE("p <- ~p before complementation")
{
    const Frame frame = build_frame({Rule{pos(0), {neg(0)}}}, numbered_vocabulary(1, "p"));
    CHECK(frame.defined() == std::vector<Fact>{pos(0)});
    CHECK(frame.open() == std::vector<Fact>{neg(0)});
}

TEST_CASE("malformed rules are rejected")
{
    auto vocab = numbered_vocabulary(1, "p");
    CHECK(kind_of([&] { build_frame({Rule{pos(0), {}}}, vocab); }) == ErrorKind::EmptyBody);
    CHECK(kind_of([&] { build_frame({Rule{Fact::t(), {pos(0)}}}, vocab); }) == ErrorKind::LogicalHead);
}

TEST_CASE("duplicate rules collapse, first declaration order is kept")
{
    auto vocab = numbered_vocabulary(3);
    const Frame frame = build_frame({Rule{pos(0), {pos(2)}}, Rule{pos(0), {pos(1)}},
                                     Rule{pos(0), {pos(2), pos(2)}}},
                                    vocab);
    CHECK(frame.rules().size() == 2);
    CHECK(bodies_of(frame, pos(0)) == std::vector<std::vector<Fact>>{{pos(2)}, {pos(1)}});
}

TEST_CASE("complement enumerates negated selections")
{
    // a <- {b, c}; a <- {d}  gives  ~a <- {~b, ~d}; ~a <- {~c, ~d}
    auto vocab = numbered_vocabulary(4); // a0=a a1=b a2=c a3=d
    const Frame frame = build_frame({Rule{pos(0), {pos(1), pos(2)}}, Rule{pos(0), {pos(3)}}}, vocab);
    const Fact heads[] = {pos(0)};
    const Frame c = complement(frame, heads);
    CHECK(bodies_of(c, neg(0)) ==
          std::vector<std::vector<Fact>>{{neg(1), neg(3)}, {neg(2), neg(3)}});
    CHECK(c.is_defined(neg(0)));
}

TEST_CASE("complement of p <- ~p and of a <- t")
{
    auto vocab = numbered_vocabulary(1, "p");
    const Fact p[] = {pos(0)};
    const Frame loop = complement(build_frame({Rule{pos(0), {neg(0)}}}, vocab), p);
    CHECK(bodies_of(loop, neg(0)) == std::vector<std::vector<Fact>>{{pos(0)}});

    const Frame fact = complement(build_frame({Rule{pos(0), {Fact::t()}}}, vocab), p);
    CHECK(bodies_of(fact, neg(0)) == std::vector<std::vector<Fact>>{{Fact::f()}});
}

TEST_CASE("complement errors")
{
    auto vocab = numbered_vocabulary(2);
    const Frame frame = build_frame({Rule{pos(0), {pos(1)}}}, vocab);
    const Fact missing[] = {pos(1)};
    CHECK(kind_of([&] { complement(frame, missing); }) == ErrorKind::NotDefined);

    // 2 rules with 3 distinct members each -> 9 dual bodies
    auto wide = numbered_vocabulary(7);
    const Frame big = build_frame({Rule{pos(0), {pos(1), pos(2), pos(3)}},
                                   Rule{pos(0), {pos(4), pos(5), pos(6)}}},
                                  wide);
    const Fact head[] = {pos(0)};
    CHECK(kind_of([&] { complement(big, head, 8); }) == ErrorKind::ComplementTooLarge);
    CHECK(complement(big, head, 9).rules_for(neg(0)).size() == 9);
}

TEST_CASE("complement is idempotent")
{
    SplitMix64 rng{7};
    for (int round = 0; round < 100; ++round) {
        const Frame frame = jt::testing::random_frame(rng);
        std::vector<Fact> heads;
        for (Fact x : frame.defined())
            if (x.is_positive())
                heads.push_back(x);
        const Frame once = complement(frame, heads);
        const Frame twice = complement(once, heads);
        CHECK(once.rules().size() == twice.rules().size());
    }
}

TEST_CASE("hitting-set property of complemented bodies (brute force)")
{
    // For every total I: some dual body of ~x lies in I iff every body of x
    // has a member whose negation lies in I.
    SplitMix64 rng{11};
    for (int round = 0; round < 200; ++round) {
        const Frame frame = jt::testing::random_frame(rng, {3, 6, 3, true});
        const std::size_t atoms = frame.vocabulary().size();
        for (Fact x : frame.defined()) {
            if (!x.is_positive() || frame.is_defined(negate(x)))
                continue;
            const Fact heads[] = {x};
            const Frame c = complement(frame, heads);
            for (std::uint32_t mask = 0; mask < (1U << atoms); ++mask) {
                Interpretation total{Fact::t()};
                for (AtomId a = 0; a < atoms; ++a)
                    total.insert(((mask >> a) & 1U) != 0 ? pos(a) : neg(a));
                // u, i are in neither I nor its negation image; keep them out
                bool every_body_hit = true;
                for (RuleId id : frame.rules_for(x)) {
                    const auto& body = frame.rule(id).body;
                    every_body_hit = every_body_hit &&
                                     std::any_of(body.begin(), body.end(), [&](Fact e) {
                                         return total.contains(negate(e));
                                     });
                }
                bool some_dual_in = false;
                for (RuleId id : c.rules_for(negate(x))) {
                    const auto& body = c.rule(id).body;
                    some_dual_in = some_dual_in || std::all_of(body.begin(), body.end(), [&](Fact e) {
                                       return total.contains(e);
                                   });
                }
                CHECK(every_body_hit == some_dual_in);
            }
        }
    }
}
