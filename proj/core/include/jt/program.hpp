#pragma once

#include "jt/error.hpp"
#include "jt/frame.hpp"

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace jt {

struct Term {
    enum class Kind { Constant, Variable };
    Kind kind = Kind::Constant;
    std::string name;

    bool operator==(const Term&) const = default;
};

struct Atom {
    std::string predicate;
    std::vector<Term> args;

    [[nodiscard]] bool is_ground() const;
    /// "p" or "p(a,X)"
    [[nodiscard]] std::string to_string() const;

    bool operator==(const Atom&) const = default;
};

struct BodyLiteral {
    enum class Kind { Atom, True, False };
    Kind kind = Kind::Atom;
    bool negated = false;
    Atom atom; // only for Kind::Atom

    bool operator==(const BodyLiteral&) const = default;
};

/// `head :- body.`; an empty body is a fact.
struct SchematicRule {
    Atom head;
    std::vector<BodyLiteral> body;

    bool operator==(const SchematicRule&) const = default;
};

using PredicateSignature = std::pair<std::string, std::size_t>;

struct Program {
    std::vector<SchematicRule> rules;
    std::set<PredicateSignature> open_decls;
    std::set<std::string> domain_decls;

    [[nodiscard]] bool is_open(const Atom& atom) const
    {
        return open_decls.contains({atom.predicate, atom.args.size()});
    }
    /// Declared constants plus every constant mentioned in a rule.
    [[nodiscard]] std::set<std::string> constants() const;
    [[nodiscard]] bool is_ground() const;

    bool operator==(const Program&) const = default;
};

struct SyntaxError {
    std::size_t line = 0;
    std::size_t column = 0;
    std::string message;
};

/// Thrown by parse(); carries every diagnostic found in the input.
class ParseError : public Error {
public:
    explicit ParseError(std::vector<SyntaxError> errors);
    [[nodiscard]] const std::vector<SyntaxError>& errors() const { return errors_; }

private:
    std::vector<SyntaxError> errors_;
};

/// Grammar:
///   rule   ::= atom '.' | atom ':-' lit (',' lit)* '.'
///   lit    ::= ['not'] (atom | 'true' | 'false')
///   atom   ::= ident ['(' term (',' term)* ')']
///   decl   ::= '#open' ident '/' int '.' | '#domain' const (',' const)* '.'
/// Variables start with an uppercase letter or '_'; '%' starts a line comment.
Program parse(std::string_view text);

/// Parses a single ground atom such as "edge(a,b)".
Atom parse_atom(std::string_view text);

/// Prints a program in the concrete syntax accepted by parse().
std::string to_string(const Program& program);
std::string to_string(const SchematicRule& rule);

/// Instantiates every rule for all substitutions of its variables over
/// `domain` (ascending). When `domain` is empty the program's own constants
/// are used. Throws EmptyDomain if variables occur but no constant exists.
Program ground(const Program& program, const std::set<std::string>& domain = {});

/// Lowers a ground program to a complemented frame. Atoms are interned in
/// ascending name order. `extra_atoms` are added to the vocabulary as well.
Frame to_frame(const Program& ground_program, const std::set<std::string>& extra_atoms = {});

} // namespace jt
