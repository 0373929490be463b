#include "jt/explanation.hpp"

#include "jt/error.hpp"
#include "json.hpp"

namespace jt {

Explanation explain(const Frame& frame, BranchEvaluation be, const Interpretation& interp, Fact x)
{
    if (!supports(frame, be, interp, x))
        throw Error{ErrorKind::NotSupported, frame.to_string(x)};
    SupportResult found = supports_bruteforce(frame, be, interp, x);
    if (!found.supported)
        throw Error{ErrorKind::NotSupported, frame.to_string(x)};

    Explanation e;
    e.root = x;
    e.evaluation = be;
    e.justification = std::move(*found.witness);
    e.vocab = frame.vocabulary_ptr();
    ReachableGraph g = reachable_graph(frame, e.justification, x);
    e.nodes = std::move(g.nodes);
    e.edges = std::move(g.edges);
    e.values = branch_values(frame, e.justification, x, be);
    return e;
}

namespace {

std::string quoted(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

} // namespace

std::string export_dot(const Explanation& e)
{
    std::string out = "digraph justification {\n";
    for (Fact x : e.nodes) {
        out += "  n" + std::to_string(x.code()) + " [label=" + quoted(e.vocab->to_string(x));
        if (x == e.root)
            out += ", peripheries=2";
        out += "];\n";
    }
    for (const auto& [from, to] : e.edges)
        out += "  n" + std::to_string(from.code()) + " -> n" + std::to_string(to.code()) + ";\n";
    return out + "}\n";
}

std::string export_json(const Explanation& e)
{
    nlohmann::json j;
    j["root"] = e.vocab->to_string(e.root);
    j["nodes"] = nlohmann::json::array();
    for (Fact x : e.nodes)
        j["nodes"].push_back(e.vocab->to_string(x));
    j["edges"] = nlohmann::json::array();
    for (const auto& [from, to] : e.edges)
        j["edges"].push_back({e.vocab->to_string(from), e.vocab->to_string(to)});
    return j.dump();
}

} // namespace jt
