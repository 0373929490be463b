#include "jfy/views.hpp"

#include "jt/error.hpp"

namespace jfy {

using nlohmann::json;

jt::NamedOpens opens_from_json(const json& value)
{
    if (value.is_null())
        return {};
    if (!value.is_object())
        throw jt::Error{jt::ErrorKind::InvalidArgument, "opens must be an object of booleans"};
    jt::NamedOpens out;
    for (const auto& [name, v] : value.items()) {
        if (!v.is_boolean())
            throw jt::Error{jt::ErrorKind::InvalidArgument, "value of " + name + " must be a boolean"};
        out[name] = v.get<bool>();
    }
    return out;
}

json explanation_view(const jt::Explanation& e)
{
    return json::parse(jt::export_json(e));
}

json answered_view(const jt::SessionState& state)
{
    json out = json::object();
    for (const auto& [fact, value] : state.answered())
        out[state.frame().to_string(fact)] = value;
    return out;
}

json session_view(const jt::SessionState& state)
{
    json queries = json::array();
    for (const jt::QueryState& q : state.queries()) {
        json view;
        view["fact"] = state.frame().to_string(q.fact);
        view["status"] = std::string{jt::to_string(q.status)};
        view["relevant_opens"] = json::array();
        for (jt::Fact o : q.relevant)
            view["relevant_opens"].push_back(state.frame().to_string(o));
        if (q.explanation)
            view["explanation"] = explanation_view(*q.explanation);
        queries.push_back(std::move(view));
    }
    return json{{"answered", answered_view(state)},
                {"queries", std::move(queries)},
                {"semantics", std::string{jt::to_string(state.evaluation())}}};
}

json models_view(const Loaded& loaded, jt::BranchEvaluation be)
{
    const jt::SemanticsResult result = jt::engine_models(*loaded.frame, be, loaded.opens);
    return json{{"result", json::parse(result.to_json())},
                {"semantics", std::string{jt::to_string(be)}},
                {"unassigned_opens", loaded.unassigned_opens}};
}

} // namespace jfy
