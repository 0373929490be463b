#include "jfy/loading.hpp"

#include <fstream>
#include <sstream>

namespace jfy {

namespace {

// Fact names come from users, not program text: a malformed one is an
// unknown fact rather than a syntax error in the program.
jt::Atom atom_named(std::string_view name)
{
    try {
        return jt::parse_atom(name);
    } catch (const jt::ParseError&) {
        throw jt::Error{jt::ErrorKind::UnknownFact, std::string{name}};
    }
}

void add_constants(std::set<std::string>& domain, std::string_view name)
{
    for (const jt::Term& t : atom_named(name).args)
        if (t.kind == jt::Term::Kind::Constant)
            domain.insert(t.name);
}

} // namespace

Loaded load(std::string_view text, const jt::NamedOpens& opens)
{
    const jt::Program program = jt::parse(text);
    std::set<std::string> domain = program.constants();
    std::set<std::string> extra;
    for (const auto& [name, value] : opens) {
        add_constants(domain, name);
        extra.insert(atom_named(name).to_string());
    }

    Loaded out;
    out.ground = jt::ground(program, domain);
    auto frame = std::make_shared<const jt::Frame>(jt::to_frame(out.ground, extra));
    out.opens = jt::resolve_opens(*frame, opens);
    for (jt::Fact x : frame->open())
        if (x.is_positive() && !out.opens.contains(x))
            out.unassigned_opens.push_back(frame->to_string(x));
    out.frame = std::move(frame);
    return out;
}

std::string read_file(const std::string& path)
{
    std::ifstream in{path, std::ios::binary};
    if (!in)
        throw std::runtime_error{"cannot read " + path};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

jt::Fact resolve_fact(const jt::Frame& frame, std::string_view name)
{
    std::string normal;
    if (!name.empty() && name.front() == '~') {
        name.remove_prefix(1);
        normal = "~";
    }
    if (name == "t" || name == "f" || name == "u" || name == "i")
        normal += name;
    else
        normal += atom_named(name).to_string();
    if (auto x = frame.vocabulary().parse_fact(normal))
        return *x;
    throw jt::Error{jt::ErrorKind::UnknownFact, std::string{name}};
}

std::string describe(const jt::ParseError& e, std::string_view file)
{
    std::string out;
    for (const jt::SyntaxError& s : e.errors()) {
        if (!file.empty())
            out += std::string{file} + ":";
        out += std::to_string(s.line) + ":" + std::to_string(s.column) + ": " + s.message + "\n";
    }
    return out;
}

} // namespace jfy
