#include "jfy/service.hpp"

#include "jfy/loading.hpp"
#include "jfy/views.hpp"
#include "json.hpp"
#include "jt/error.hpp"

#include <fstream>

namespace jfy {

using nlohmann::json;

struct Service::Session {
    std::mutex mutex;
    std::string program;
    jt::NamedOpens initial_opens;
    std::optional<jt::SessionState> state;
};

namespace {

Response reply(int status, const json& body) { return Response{status, body.dump()}; }

Response error_reply(int status, const std::string& message)
{
    return reply(status, json{{"error", message}});
}

Response parse_error_reply(const jt::ParseError& e)
{
    json errors = json::array();
    for (const jt::SyntaxError& s : e.errors())
        errors.push_back({{"line", s.line}, {"column", s.column}, {"message", s.message}});
    return reply(422, json{{"error", "syntax error"}, {"errors", errors}});
}

// Bad requests name facts or values the program does not allow; other
// engine errors mean the program itself cannot be served.
int status_for(const jt::Error& e)
{
    switch (e.kind()) {
    case jt::ErrorKind::NotOpen:
    case jt::ErrorKind::UnknownFact:
    case jt::ErrorKind::InvalidArgument: return 400;
    default: return 422;
    }
}

bool is_json(const std::string& content_type)
{
    return content_type.substr(0, content_type.find(';')) == "application/json";
}

std::vector<std::string> split_path(const std::string& path)
{
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start < path.size()) {
        std::size_t end = path.find('/', start);
        if (end == std::string::npos)
            end = path.size();
        if (end > start)
            parts.push_back(path.substr(start, end - start));
        start = end + 1;
    }
    return parts;
}

std::optional<jt::BranchEvaluation> semantics_of(const json& body)
{
    if (!body.contains("semantics"))
        return jt::BranchEvaluation::WellFounded;
    if (!body["semantics"].is_string())
        return std::nullopt;
    return jt::parse_branch_evaluation(body["semantics"].get<std::string>());
}

std::vector<std::string> queries_of(const json& body)
{
    std::vector<std::string> out;
    if (!body.contains("queries"))
        return out;
    if (!body["queries"].is_array())
        throw jt::Error{jt::ErrorKind::InvalidArgument, "queries must be an array of fact names"};
    for (const json& q : body["queries"]) {
        if (!q.is_string())
            throw jt::Error{jt::ErrorKind::InvalidArgument, "queries must be an array of fact names"};
        out.push_back(q.get<std::string>());
    }
    return out;
}

} // namespace

Service::Service(std::optional<std::filesystem::path> state_dir) : state_dir_{std::move(state_dir)}
{
    if (state_dir_) {
        std::filesystem::create_directories(*state_dir_);
        restore();
    }
}

Service::~Service() = default;

Response Service::handle(const Request& request)
{
    if ((request.method == "POST" || request.method == "PUT") && !is_json(request.content_type))
        return error_reply(415, "content type must be application/json");

    const std::vector<std::string> parts = split_path(request.path);
    try {
        if (parts.size() == 1 && parts[0] == "models") {
            if (request.method != "GET")
                return error_reply(405, "method not allowed");
            return models(request);
        }
        if (!parts.empty() && parts[0] == "sessions") {
            if (parts.size() == 1) {
                if (request.method != "POST")
                    return error_reply(405, "method not allowed");
                return create_session(request);
            }
            std::string rest;
            for (std::size_t k = 2; k < parts.size(); ++k)
                rest += "/" + parts[k];
            return session_request(request, parts[1], rest);
        }
        return error_reply(404, "no route for " + request.path);
    } catch (const jt::ParseError& e) {
        return parse_error_reply(e);
    } catch (const jt::Error& e) {
        return error_reply(status_for(e), e.what());
    } catch (const json::exception& e) {
        return error_reply(400, std::string{"malformed body: "} + e.what());
    }
}

Response Service::create_session(const Request& request)
{
    const json body = json::parse(request.body);
    if (!body.is_object() || !body.contains("program") || !body["program"].is_string())
        return error_reply(400, "body must be an object with a string \"program\"");
    const auto be = semantics_of(body);
    if (!be)
        return error_reply(400, "semantics must be one of wf, stable, kk, sp");

    auto session = std::make_shared<Session>();
    session->program = body["program"].get<std::string>();
    session->initial_opens = opens_from_json(body.value("opens", json{}));
    const std::vector<std::string> queries = queries_of(body);

    const Loaded loaded = load(session->program, session->initial_opens);
    std::vector<jt::Fact> facts;
    for (const std::string& q : queries)
        facts.push_back(resolve_fact(*loaded.frame, q));
    session->state.emplace(loaded.frame, *be, loaded.opens, facts);

    const std::string id = "s" + std::to_string(next_id_++);
    {
        std::lock_guard lock{store_mutex_};
        sessions_[id] = session;
    }
    persist(id, *session);
    return reply(201, json{{"session_id", id}});
}

std::shared_ptr<Service::Session> Service::find(const std::string& id)
{
    std::lock_guard lock{store_mutex_};
    auto it = sessions_.find(id);
    return it == sessions_.end() ? nullptr : it->second;
}

Response Service::session_request(const Request& request, const std::string& id, const std::string& rest)
{
    const std::shared_ptr<Session> session = find(id);
    if (!session)
        return error_reply(404, "unknown session " + id);
    std::lock_guard lock{session->mutex};
    const jt::SessionState& state = *session->state;
    const jt::Frame& frame = state.frame();

    std::optional<jt::SessionAction> act;
    if (rest.empty()) {
        if (request.method != "GET")
            return error_reply(405, "method not allowed");
    } else if (rest == "/answers") {
        if (request.method != "POST")
            return error_reply(405, "method not allowed");
        const json body = json::parse(request.body);
        if (!body.is_object() || !body.contains("fact") || !body["fact"].is_string() ||
            !body.contains("value") || !body["value"].is_boolean())
            return error_reply(400, "body must be {\"fact\": string, \"value\": boolean}");
        act = jt::SessionAction{jt::action::Answer{resolve_fact(frame, body["fact"].get<std::string>()),
                                                   body["value"].get<bool>()}};
    } else if (rest.rfind("/answers/", 0) == 0) {
        if (request.method != "DELETE")
            return error_reply(405, "method not allowed");
        act = jt::SessionAction{jt::action::Retract{resolve_fact(frame, rest.substr(9))}};
    } else if (rest == "/queries") {
        if (request.method != "POST")
            return error_reply(405, "method not allowed");
        const json body = json::parse(request.body);
        if (!body.is_object() || !body.contains("fact") || !body["fact"].is_string())
            return error_reply(400, "body must be {\"fact\": string}");
        act = jt::SessionAction{jt::action::AddQuery{resolve_fact(frame, body["fact"].get<std::string>())}};
    } else {
        return error_reply(404, "no route for " + request.path);
    }

    if (act) {
        session->state.emplace(jt::session_step(state, *act));
        persist(id, *session);
    }
    json view = session_view(*session->state);
    view["session_id"] = id;
    return reply(200, view);
}

Response Service::models(const Request& request)
{
    auto param = [&](const std::string& key) -> std::optional<std::string> {
        auto it = request.query.find(key);
        return it == request.query.end() ? std::nullopt : std::optional{it->second};
    };
    const auto program = param("program");
    if (!program)
        return error_reply(400, "missing query parameter program");
    const auto be = jt::parse_branch_evaluation(param("semantics").value_or("wf"));
    if (!be)
        return error_reply(400, "semantics must be one of wf, stable, kk, sp");
    const jt::NamedOpens opens = param("opens") ? opens_from_json(json::parse(*param("opens"))) : jt::NamedOpens{};
    const Loaded loaded = load(*program, opens);
    return reply(200, models_view(loaded, *be));
}

void Service::persist(const std::string& id, const Session& session) const
{
    if (!state_dir_)
        return;
    const jt::SessionState& state = *session.state;
    json record;
    record["program"] = session.program;
    record["semantics"] = std::string{jt::to_string(state.evaluation())};
    record["initial_opens"] = session.initial_opens;
    record["answered"] = answered_view(state);
    record["queries"] = json::array();
    for (const jt::QueryState& q : state.queries())
        record["queries"].push_back(state.frame().to_string(q.fact));

    const std::filesystem::path target = *state_dir_ / (id + ".json");
    const std::filesystem::path temp = *state_dir_ / (id + ".json.tmp");
    {
        std::ofstream out{temp, std::ios::trunc};
        out << record.dump(2) << "\n";
    }
    std::filesystem::rename(temp, target);
}

void Service::restore()
{
    std::uint64_t highest = 0;
    for (const auto& entry : std::filesystem::directory_iterator{*state_dir_}) {
        const std::string stem = entry.path().stem().string();
        if (entry.path().extension() != ".json" || stem.size() < 2 || stem[0] != 's' ||
            stem.find_first_not_of("0123456789", 1) != std::string::npos)
            continue;
        const json record = json::parse(read_file(entry.path().string()));
        auto session = std::make_shared<Session>();
        session->program = record.at("program").get<std::string>();
        session->initial_opens = record.at("initial_opens").get<jt::NamedOpens>();
        const std::vector<std::string> queries = record.at("queries").get<std::vector<std::string>>();
        const auto answered = record.at("answered").get<jt::NamedOpens>();

        const Loaded loaded = load(session->program, session->initial_opens);
        std::vector<jt::Fact> facts;
        for (const std::string& q : queries)
            facts.push_back(resolve_fact(*loaded.frame, q));
        session->state.emplace(loaded.frame,
                               *jt::parse_branch_evaluation(record.at("semantics").get<std::string>()),
                               jt::resolve_opens(*loaded.frame, answered), facts);
        sessions_[stem] = session;
        highest = std::max<std::uint64_t>(highest, std::stoull(stem.substr(1)));
    }
    next_id_ = highest + 1;
}

} // namespace jfy
