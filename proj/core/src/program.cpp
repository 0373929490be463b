#include "jt/program.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>

namespace jt {

// ---------------------------------------------------------------------------
// AST helpers
// ---------------------------------------------------------------------------

bool Atom::is_ground() const
{
    return std::none_of(args.begin(), args.end(),
                        [](const Term& t) { return t.kind == Term::Kind::Variable; });
}

std::string Atom::to_string() const
{
    std::string out = predicate;
    if (args.empty())
        return out;
    out += '(';
    for (std::size_t k = 0; k < args.size(); ++k) {
        if (k > 0)
            out += ',';
        out += args[k].name;
    }
    return out + ')';
}

std::set<std::string> Program::constants() const
{
    std::set<std::string> out = domain_decls;
    auto collect = [&](const Atom& a) {
        for (const Term& t : a.args)
            if (t.kind == Term::Kind::Constant)
                out.insert(t.name);
    };
    for (const SchematicRule& r : rules) {
        collect(r.head);
        for (const BodyLiteral& l : r.body)
            if (l.kind == BodyLiteral::Kind::Atom)
                collect(l.atom);
    }
    return out;
}

bool Program::is_ground() const
{
    return std::all_of(rules.begin(), rules.end(), [](const SchematicRule& r) {
        return r.head.is_ground() &&
               std::all_of(r.body.begin(), r.body.end(), [](const BodyLiteral& l) {
                   return l.kind != BodyLiteral::Kind::Atom || l.atom.is_ground();
               });
    });
}

namespace {

std::string error_summary(const std::vector<SyntaxError>& errors)
{
    std::string out;
    for (const SyntaxError& e : errors) {
        if (!out.empty())
            out += "; ";
        out += std::to_string(e.line) + ":" + std::to_string(e.column) + ": " + e.message;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

enum class Tok { Ident, Variable, Number, LParen, RParen, Comma, Dot, Neck, Slash, Directive, End, Bad };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    std::size_t line = 1;
    std::size_t column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_{text} {}

    Token next()
    {
        skip_space();
        Token tok;
        tok.line = line_;
        tok.column = column_;
        if (pos_ >= text_.size()) {
            tok.kind = Tok::End;
            return tok;
        }
        const char c = text_[pos_];
        auto is_word = [](char ch) {
            return std::isalnum(static_cast<unsigned char>(ch)) != 0 || ch == '_';
        };
        if (std::islower(static_cast<unsigned char>(c)) != 0) {
            tok.kind = Tok::Ident;
            tok.text = take_while(is_word);
        } else if (std::isupper(static_cast<unsigned char>(c)) != 0 || c == '_') {
            tok.kind = Tok::Variable;
            tok.text = take_while(is_word);
        } else if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            tok.kind = Tok::Number;
            tok.text = take_while([](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; });
        } else if (c == '#') {
            advance();
            tok.kind = Tok::Directive;
            tok.text = take_while(is_word);
        } else if (c == ':' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
            advance();
            advance();
            tok.kind = Tok::Neck;
            tok.text = ":-";
        } else {
            advance();
            tok.text = std::string(1, c);
            switch (c) {
            case '(': tok.kind = Tok::LParen; break;
            case ')': tok.kind = Tok::RParen; break;
            case ',': tok.kind = Tok::Comma; break;
            case '.': tok.kind = Tok::Dot; break;
            case '/': tok.kind = Tok::Slash; break;
            default: tok.kind = Tok::Bad; break;
            }
        }
        return tok;
    }

private:
    void advance()
    {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void skip_space()
    {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n')
                    advance();
            } else if (std::isspace(static_cast<unsigned char>(c)) != 0) {
                advance();
            } else {
                break;
            }
        }
    }

    template <typename Pred>
    std::string take_while(Pred pred)
    {
        const std::size_t begin = pos_;
        while (pos_ < text_.size() && pred(text_[pos_]))
            advance();
        return std::string{text_.substr(begin, pos_ - begin)};
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

struct Abort {};

class Parser {
public:
    explicit Parser(std::string_view text) : lexer_{text} { tok_ = lexer_.next(); }

    Program program()
    {
        Program prog;
        while (tok_.kind != Tok::End) {
            try {
                statement(prog);
            } catch (const Abort&) {
                recover();
            }
        }
        if (!errors_.empty())
            throw ParseError{errors_};
        return prog;
    }

    Atom single_atom()
    {
        Atom a;
        try {
            a = atom();
            if (tok_.kind != Tok::End)
                fail("unexpected '" + tok_.text + "' after atom");
        } catch (const Abort&) {
        }
        if (!errors_.empty())
            throw ParseError{errors_};
        return a;
    }

private:
    [[noreturn]] void fail(const std::string& message)
    {
        errors_.push_back({tok_.line, tok_.column, message});
        throw Abort{};
    }

    std::string describe() const
    {
        return tok_.kind == Tok::End ? std::string{"end of input"} : "'" + tok_.text + "'";
    }

    void expect(Tok kind, const char* what)
    {
        if (tok_.kind != kind)
            fail(std::string{"expected "} + what + ", found " + describe());
        tok_ = lexer_.next();
    }

    void recover()
    {
        while (tok_.kind != Tok::End && tok_.kind != Tok::Dot)
            tok_ = lexer_.next();
        if (tok_.kind == Tok::Dot)
            tok_ = lexer_.next();
    }

    void statement(Program& prog)
    {
        if (tok_.kind == Tok::Directive) {
            directive(prog);
            return;
        }
        SchematicRule rule;
        if (tok_.kind == Tok::Ident && (tok_.text == "not" || tok_.text == "true" || tok_.text == "false"))
            fail("'" + tok_.text + "' cannot be a rule head");
        rule.head = atom();
        if (tok_.kind == Tok::Neck) {
            tok_ = lexer_.next();
            rule.body.push_back(literal());
            while (tok_.kind == Tok::Comma) {
                tok_ = lexer_.next();
                rule.body.push_back(literal());
            }
        }
        expect(Tok::Dot, "'.'");
        prog.rules.push_back(std::move(rule));
    }

    void directive(Program& prog)
    {
        const std::string name = tok_.text;
        tok_ = lexer_.next();
        if (name == "open") {
            if (tok_.kind != Tok::Ident)
                fail("expected predicate name, found " + describe());
            std::string pred = tok_.text;
            tok_ = lexer_.next();
            expect(Tok::Slash, "'/'");
            if (tok_.kind != Tok::Number)
                fail("expected arity, found " + describe());
            const std::size_t arity = std::stoul(tok_.text);
            tok_ = lexer_.next();
            expect(Tok::Dot, "'.'");
            prog.open_decls.insert({std::move(pred), arity});
        } else if (name == "domain") {
            std::vector<std::string> names{constant()};
            while (tok_.kind == Tok::Comma) {
                tok_ = lexer_.next();
                names.push_back(constant());
            }
            expect(Tok::Dot, "'.'");
            prog.domain_decls.insert(names.begin(), names.end());
        } else {
            fail("unknown directive '#" + name + "'");
        }
    }

    std::string constant()
    {
        if (tok_.kind != Tok::Ident && tok_.kind != Tok::Number)
            fail("expected constant, found " + describe());
        std::string out = tok_.text;
        tok_ = lexer_.next();
        return out;
    }

    BodyLiteral literal()
    {
        BodyLiteral lit;
        if (tok_.kind == Tok::Ident && tok_.text == "not") {
            lit.negated = true;
            tok_ = lexer_.next();
        }
        if (tok_.kind == Tok::Ident && tok_.text == "true") {
            lit.kind = BodyLiteral::Kind::True;
            tok_ = lexer_.next();
        } else if (tok_.kind == Tok::Ident && tok_.text == "false") {
            lit.kind = BodyLiteral::Kind::False;
            tok_ = lexer_.next();
        } else {
            lit.atom = atom();
        }
        return lit;
    }

    Atom atom()
    {
        if (tok_.kind != Tok::Ident)
            fail("expected atom, found " + describe());
        Atom a;
        a.predicate = tok_.text;
        tok_ = lexer_.next();
        if (tok_.kind != Tok::LParen)
            return a;
        tok_ = lexer_.next();
        a.args.push_back(term());
        while (tok_.kind == Tok::Comma) {
            tok_ = lexer_.next();
            a.args.push_back(term());
        }
        expect(Tok::RParen, "')'");
        return a;
    }

    Term term()
    {
        Term t;
        switch (tok_.kind) {
        case Tok::Variable: t.kind = Term::Kind::Variable; break;
        case Tok::Ident:
        case Tok::Number: t.kind = Term::Kind::Constant; break;
        default: fail("expected term, found " + describe());
        }
        t.name = tok_.text;
        tok_ = lexer_.next();
        return t;
    }

    Lexer lexer_;
    Token tok_;
    std::vector<SyntaxError> errors_;
};

std::string to_string(const BodyLiteral& l)
{
    std::string out = l.negated ? "not " : "";
    switch (l.kind) {
    case BodyLiteral::Kind::True: return out + "true";
    case BodyLiteral::Kind::False: return out + "false";
    case BodyLiteral::Kind::Atom: return out + l.atom.to_string();
    }
    return out;
}

Atom substitute(const Atom& a, const std::map<std::string, std::string>& binding)
{
    Atom out = a;
    for (Term& t : out.args) {
        if (t.kind == Term::Kind::Variable) {
            t.kind = Term::Kind::Constant;
            t.name = binding.at(t.name);
        }
    }
    return out;
}

} // namespace

ParseError::ParseError(std::vector<SyntaxError> errors)
    : Error{ErrorKind::SyntaxError, error_summary(errors)}, errors_{std::move(errors)}
{
}

Program parse(std::string_view text)
{
    return Parser{text}.program();
}

Atom parse_atom(std::string_view text)
{
    return Parser{text}.single_atom();
}

std::string to_string(const SchematicRule& rule)
{
    std::string out = rule.head.to_string();
    for (std::size_t k = 0; k < rule.body.size(); ++k)
        out += (k == 0 ? " :- " : ", ") + to_string(rule.body[k]);
    return out + ".";
}

std::string to_string(const Program& program)
{
    std::string out;
    if (!program.domain_decls.empty()) {
        out += "#domain ";
        bool first = true;
        for (const std::string& c : program.domain_decls) {
            out += (first ? "" : ", ") + c;
            first = false;
        }
        out += ".\n";
    }
    for (const auto& [pred, arity] : program.open_decls)
        out += "#open " + pred + "/" + std::to_string(arity) + ".\n";
    for (const SchematicRule& r : program.rules)
        out += to_string(r) + "\n";
    return out;
}

Program ground(const Program& program, const std::set<std::string>& domain)
{
    const std::set<std::string> constants = domain.empty() ? program.constants() : domain;
    const std::vector<std::string> values{constants.begin(), constants.end()};

    Program out;
    out.open_decls = program.open_decls;
    out.domain_decls = program.domain_decls;
    for (const SchematicRule& rule : program.rules) {
        std::vector<std::string> vars;
        auto collect = [&](const Atom& a) {
            for (const Term& t : a.args)
                if (t.kind == Term::Kind::Variable &&
                    std::find(vars.begin(), vars.end(), t.name) == vars.end())
                    vars.push_back(t.name);
        };
        collect(rule.head);
        for (const BodyLiteral& l : rule.body)
            if (l.kind == BodyLiteral::Kind::Atom)
                collect(l.atom);

        if (vars.empty()) {
            out.rules.push_back(rule);
            continue;
        }
        if (values.empty())
            throw Error{ErrorKind::EmptyDomain, to_string(rule)};

        // odometer over the variables, first variable most significant
        std::vector<std::size_t> digits(vars.size(), 0);
        while (true) {
            std::map<std::string, std::string> binding;
            for (std::size_t k = 0; k < vars.size(); ++k)
                binding[vars[k]] = values[digits[k]];
            SchematicRule inst;
            inst.head = substitute(rule.head, binding);
            for (const BodyLiteral& l : rule.body) {
                BodyLiteral g = l;
                if (g.kind == BodyLiteral::Kind::Atom)
                    g.atom = substitute(l.atom, binding);
                inst.body.push_back(std::move(g));
            }
            out.rules.push_back(std::move(inst));

            std::size_t k = vars.size();
            while (k > 0 && ++digits[k - 1] == values.size())
                digits[--k] = 0;
            if (k == 0)
                break;
        }
    }
    return out;
}

Frame to_frame(const Program& ground_program, const std::set<std::string>& extra_atoms)
{
    if (!ground_program.is_ground())
        throw Error{ErrorKind::InvalidArgument, "to_frame expects a ground program"};

    std::set<std::string> names = extra_atoms;
    std::set<std::string> open_names;
    for (const SchematicRule& r : ground_program.rules) {
        if (ground_program.is_open(r.head))
            throw Error{ErrorKind::OpenAsHead, to_string(r)};
        names.insert(r.head.to_string());
        for (const BodyLiteral& l : r.body) {
            if (l.kind == BodyLiteral::Kind::Atom) {
                names.insert(l.atom.to_string());
                if (ground_program.is_open(l.atom))
                    open_names.insert(l.atom.to_string());
            }
        }
    }
    for (const std::string& n : extra_atoms)
        if (ground_program.is_open(parse_atom(n)))
            open_names.insert(n);

    auto vocab = std::make_shared<Vocabulary>();
    for (const std::string& n : names)
        vocab->intern(n);
    auto literal = [&](const std::string& name, bool negated) {
        return Fact::literal(*vocab->find(name), negated ? Polarity::Negative : Polarity::Positive);
    };

    std::vector<Rule> rules;
    std::set<std::string> with_rules;
    for (const SchematicRule& r : ground_program.rules) {
        std::vector<Fact> body;
        for (const BodyLiteral& l : r.body) {
            switch (l.kind) {
            case BodyLiteral::Kind::True: body.push_back(l.negated ? Fact::f() : Fact::t()); break;
            case BodyLiteral::Kind::False: body.push_back(l.negated ? Fact::t() : Fact::f()); break;
            case BodyLiteral::Kind::Atom: body.push_back(literal(l.atom.to_string(), l.negated)); break;
            }
        }
        if (body.empty())
            body.push_back(Fact::t());
        const std::string head = r.head.to_string();
        with_rules.insert(head);
        rules.emplace_back(literal(head, false), std::move(body));
    }
    for (const std::string& n : names)
        if (!open_names.contains(n) && !with_rules.contains(n))
            rules.emplace_back(literal(n, false), std::vector<Fact>{Fact::f()});

    Frame frame = build_frame(std::move(rules), vocab);
    std::vector<Fact> heads;
    for (Fact x : frame.defined())
        if (x.is_positive())
            heads.push_back(x);
    return complement(frame, heads);
}

} // namespace jt
