#include "doctest.h"
#include "jt/fact.hpp"

#include <array>

using namespace jt;

namespace {
constexpr std::array<Logical, 4> values{Logical::t, Logical::f, Logical::u, Logical::i};
}

TEST_CASE("negation of logical values")
{
    CHECK(negate(Fact::t()) == Fact::f());
    CHECK(negate(Fact::f()) == Fact::t());
    CHECK(negate(Fact::u()) == Fact::u());
    CHECK(negate(Fact::i()) == Fact::i());
}

TEST_CASE("negation of literals flips polarity and keeps the atom")
{
    Vocabulary vocab;
    const AtomId edge = vocab.intern("edge(a,b)");
    const AtomId path = vocab.intern("path(a,b)");
    const Fact e = Fact::literal(edge);
    CHECK(negate(e) == Fact::literal(edge, Polarity::Negative));
    CHECK(negate(e).atom() == edge);
    CHECK(vocab.to_string(negate(e)) == "~edge(a,b)");
    CHECK(negate(negate(Fact::literal(path))) == Fact::literal(path));
}

TEST_CASE("involution and sign flip hold for every fact")
{
    for (std::uint32_t code = 0; code < 4 + 2 * 16; ++code) {
        const Fact x = Fact::from_code(code);
        CHECK(negate(negate(x)) == x);
        if (x.is_literal()) {
            CHECK(negate(x) != x);
            CHECK(sign(negate(x)) != sign(x));
        }
    }
}

TEST_CASE("sign")
{
    CHECK(sign(Fact::literal(0)) == Polarity::Positive);
    CHECK(sign(Fact::literal(0, Polarity::Negative)) == Polarity::Negative);
    CHECK_FALSE(sign(Fact::u()).has_value());
    CHECK_FALSE(sign(Fact::t()).has_value());
}

TEST_CASE("Belnap orders")
{
    CHECK(leq(Order::Truth, Logical::f, Logical::t));
    CHECK(leq(Order::Information, Logical::u, Logical::i));
    CHECK_FALSE(leq(Order::Truth, Logical::u, Logical::i));
    CHECK_FALSE(leq(Order::Truth, Logical::i, Logical::u));
    CHECK_FALSE(leq(Order::Information, Logical::f, Logical::t));
    CHECK(leq(Order::Information, Logical::f, Logical::i));
    CHECK_FALSE(leq(Order::Truth, Logical::t, Logical::f));
}

TEST_CASE("both orders are partial orders (exhaustive)")
{
    for (Order o : {Order::Truth, Order::Information}) {
        for (Logical a : values) {
            CHECK(leq(o, a, a));
            for (Logical b : values) {
                if (leq(o, a, b) && leq(o, b, a))
                    CHECK(a == b);
                for (Logical c : values)
                    if (leq(o, a, b) && leq(o, b, c))
                        CHECK(leq(o, a, c));
            }
        }
    }
}

TEST_CASE("codes order logical values first, then atoms with positive before negative")
{
    CHECK(Fact::i() < Fact::literal(0));
    CHECK(Fact::literal(0) < Fact::literal(0, Polarity::Negative));
    CHECK(Fact::literal(0, Polarity::Negative) < Fact::literal(1));
}

TEST_CASE("vocabulary round-trips printable names")
{
    Vocabulary vocab;
    vocab.intern("p");
    CHECK(vocab.intern("p") == 0);
    CHECK(vocab.parse_fact("~p") == Fact::literal(0, Polarity::Negative));
    CHECK(vocab.parse_fact("u") == Fact::u());
    CHECK_FALSE(vocab.parse_fact("q").has_value());
}
