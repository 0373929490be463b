#pragma once

#include "jt/error.hpp"
#include "jt/justification.hpp"
#include "jt/program.hpp"
#include "jt/semantics.hpp"

#include <memory>
#include <string>
#include <string_view>

namespace jt::testing {

inline constexpr std::string_view path_program = R"(% transitive closure over a finite node set
path(X,Y) :- edge(X,Y).
path(X,Y) :- path(X,Z), path(Z,Y).
#open edge/2.
)";

inline Frame frame_of(std::string_view text, const std::set<std::string>& domain = {})
{
    return to_frame(ground(parse(text), domain));
}

inline Frame path_frame()
{
    return frame_of(path_program, {"a", "b", "c"});
}

/// Looks a fact up by printable name ("path(a,c)", "~p", "t"); throws if absent.
inline Fact fact(const Frame& frame, std::string_view name)
{
    if (auto x = frame.vocabulary().parse_fact(name))
        return *x;
    throw Error{ErrorKind::UnknownFact, std::string{name}};
}

/// edge(a,b) and edge(b,c) true, every other edge false.
inline OpenAssignment example_edges(const Frame& frame)
{
    OpenAssignment opens;
    for (Fact x : frame.open())
        if (x.is_positive())
            opens[x] = false;
    opens[fact(frame, "edge(a,b)")] = true;
    opens[fact(frame, "edge(b,c)")] = true;
    return opens;
}

inline Interpretation interpretation(const Frame& frame, std::initializer_list<std::string_view> names)
{
    Interpretation out;
    for (auto n : names)
        out.insert(fact(frame, n));
    return out;
}

/// The frame rule `head <- body` given by printable names; throws if absent.
inline const Rule& rule(const Frame& frame, std::string_view head, std::initializer_list<std::string_view> body)
{
    std::vector<Fact> facts;
    for (auto n : body)
        facts.push_back(fact(frame, n));
    const Rule wanted{fact(frame, head), facts};
    for (RuleId id : frame.rules_for(wanted.head))
        if (frame.rule(id) == wanted)
            return frame.rule(id);
    throw Error{ErrorKind::InvalidArgument, "no such rule " + frame.to_string(wanted)};
}

/// path(a,c) through b, each step justified by its edge.
inline Justification example_justification(const Frame& frame)
{
    Justification j;
    j.choose(rule(frame, "path(a,c)", {"path(a,b)", "path(b,c)"}));
    j.choose(rule(frame, "path(a,b)", {"edge(a,b)"}));
    j.choose(rule(frame, "path(b,c)", {"edge(b,c)"}));
    return j;
}

} // namespace jt::testing
