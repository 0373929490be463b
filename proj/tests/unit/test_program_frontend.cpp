#include "doctest.h"
#include "fixtures.hpp"
#include "jt/fuzz.hpp"
#include "jt/program.hpp"

using namespace jt;
using jt::testing::fact;
using jt::testing::frame_of;

namespace {

std::vector<std::string> bodies(const Frame& frame, std::string_view head)
{
    std::vector<std::string> out;
    for (RuleId id : frame.rules_for(fact(frame, head)))
        out.push_back(frame.to_string(frame.rule(id)));
    return out;
}

Atom random_atom(SplitMix64& rng)
{
    static const char* terms[] = {"a", "b", "X", "Y", "_z"};
    Atom atom{std::string{"pq"[rng.range(0, 1)]} + std::to_string(rng.range(0, 2)), {}};
    for (std::size_t k = rng.range(0, 2); k > 0; --k) {
        const std::string name = terms[rng.range(0, 4)];
        const bool var = name[0] == '_' || (name[0] >= 'A' && name[0] <= 'Z');
        atom.args.push_back(Term{var ? Term::Kind::Variable : Term::Kind::Constant, name});
    }
    return atom;
}

Program random_schematic(SplitMix64& rng)
{
    Program p;
    for (std::size_t r = rng.range(1, 5); r > 0; --r) {
        SchematicRule rule{random_atom(rng), {}};
        for (std::size_t k = rng.range(0, 3); k > 0; --k) {
            BodyLiteral lit;
            lit.negated = rng.coin();
            const std::size_t kind = rng.range(0, 5);
            if (kind == 0)
                lit.kind = BodyLiteral::Kind::True;
            else if (kind == 1)
                lit.kind = BodyLiteral::Kind::False;
            else
                lit.atom = random_atom(rng);
            rule.body.push_back(std::move(lit));
        }
        p.rules.push_back(std::move(rule));
    }
    if (rng.coin())
        p.open_decls.insert({"r", rng.range(0, 2)});
    if (rng.coin())
        p.domain_decls = {"a", "c"};
    return p;
}

} // namespace

TEST_CASE("parse the path program")
{
    const Program p = parse(jt::testing::path_program);
    REQUIRE(p.rules.size() == 2);
    CHECK(p.open_decls == std::set<PredicateSignature>{{"edge", 2}});
    CHECK(p.rules[0].head.to_string() == "path(X,Y)");
    CHECK(p.rules[1].body.size() == 2);
    CHECK(p.rules[1].body[1].atom.args[0].kind == Term::Kind::Variable);
    CHECK_FALSE(p.is_ground());
}

TEST_CASE("parse p :- not p.")
{
    const Program p = parse("p :- not p.");
    REQUIRE(p.rules.size() == 1);
    REQUIRE(p.rules[0].body.size() == 1);
    CHECK(p.rules[0].body[0].negated);
    CHECK(p.rules[0].body[0].atom.predicate == "p");
    CHECK(p.is_ground());
}

TEST_CASE("facts, true/false literals and the domain directive")
{
    const Program p = parse("#domain b, a.\nq.\nr :- true, not false.\n");
    CHECK(p.domain_decls == std::set<std::string>{"a", "b"});
    CHECK(p.rules[0].body.empty());
    CHECK(p.rules[1].body[0].kind == BodyLiteral::Kind::True);
    CHECK(p.rules[1].body[1].kind == BodyLiteral::Kind::False);
    CHECK(p.rules[1].body[1].negated);
}

TEST_CASE("syntax errors carry positions")
{
    try {
        parse("p :-");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.kind() == ErrorKind::SyntaxError);
        REQUIRE_FALSE(e.errors().empty());
        CHECK(e.errors()[0].line == 1);
        CHECK(e.errors()[0].column == 5);
    }
}

TEST_CASE("every bad line is reported")
{
    try {
        parse("p :- q\nr.\ns :- .\nt(.\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.errors().size() >= 2);
        for (const SyntaxError& s : e.errors())
            CHECK(s.line >= 1);
    }
}

TEST_CASE("ground instantiates over the domain")
{
    const Program g = ground(parse(jt::testing::path_program), {"a", "b", "c"});
    CHECK(g.is_ground());
    std::size_t edge_rules = 0;
    std::size_t chain_rules = 0;
    for (const auto& r : g.rules)
        (r.body.size() == 1 ? edge_rules : chain_rules) += 1;
    CHECK(edge_rules == 9);
    CHECK(chain_rules == 27);
}

TEST_CASE("ground leaves propositional programs alone")
{
    const Program p = parse("p :- not q. q :- not p.");
    CHECK(ground(p) == p);
}

TEST_CASE("ground without constants")
{
    try {
        ground(parse(jt::testing::path_program));
        FAIL("expected EmptyDomain");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::EmptyDomain);
    }
    // constants mentioned in the program are the default domain
    const Program g = ground(parse("path(X,Y) :- edge(X,Y).\nedge(a,b).\n#open other/1."));
    CHECK(g.rules.size() == 5);
}

TEST_CASE("to_frame lowers and complements")
{
    const Frame loop = frame_of("p :- not p.");
    CHECK(bodies(loop, "p") == std::vector<std::string>{"p <- {~p}"});
    CHECK(bodies(loop, "~p") == std::vector<std::string>{"~p <- {p}"});

    const Frame f = frame_of("q.");
    CHECK(bodies(f, "q") == std::vector<std::string>{"q <- {t}"});
    CHECK(bodies(f, "~q") == std::vector<std::string>{"~q <- {f}"});

    const Frame r = frame_of("r :- s.");
    CHECK(bodies(r, "s") == std::vector<std::string>{"s <- {f}"});
    CHECK(bodies(r, "~s") == std::vector<std::string>{"~s <- {t}"});
    CHECK(bodies(r, "~r") == std::vector<std::string>{"~r <- {~s}"});
}

TEST_CASE("open atoms stay open in both polarities")
{
    const Frame frame = jt::testing::path_frame();
    CHECK(frame.is_open(fact(frame, "edge(a,b)")));
    CHECK(frame.is_open(fact(frame, "~edge(a,b)")));
    CHECK(frame.is_defined(fact(frame, "~path(c,a)")));
    CHECK(frame.defined().size() == 18);
}

TEST_CASE("open predicates may not head rules")
{
    try {
        frame_of("edge(a,b).\n#open edge/2.");
        FAIL("expected OpenAsHead");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::OpenAsHead);
    }
}

TEST_CASE("print and parse round-trip")
{
    const char* fixed[] = {
        "#domain a, b.\n#open edge/2.\npath(X,Y) :- edge(X,Y).\n",
        "p :- not q, true.\nq :- not p, not false.\nr.\n",
    };
    for (const char* text : fixed) {
        const Program p = parse(text);
        CHECK(parse(to_string(p)) == p);
    }
    SplitMix64 rng{3};
    for (int k = 0; k < 300; ++k) {
        const Program p = random_program(rng, 6, 12, 3);
        CHECK(parse(to_string(p)) == p);
    }
    for (int k = 0; k < 300; ++k) {
        const Program p = random_schematic(rng);
        CHECK(parse(to_string(p)) == p);
    }
}
