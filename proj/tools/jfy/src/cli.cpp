#include "jfy/cli.hpp"

#include "CLI11.hpp"
#include "jfy/loading.hpp"
#include "jfy/service.hpp"
#include "jfy/views.hpp"
#include "jt/error.hpp"
#include "jt/fuzz.hpp"
#include "jt/semantics.hpp"

#include <ostream>

namespace jfy {

namespace {

using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

const std::vector<std::string> semantics_names{"wf", "stable", "kk", "sp"};

// Input problems the user can fix by changing arguments or files.
bool is_input_error(jt::ErrorKind kind)
{
    switch (kind) {
    case jt::ErrorKind::UnknownFact:
    case jt::ErrorKind::NotOpen:
    case jt::ErrorKind::InvalidArgument:
    case jt::ErrorKind::EmptyDomain:
    case jt::ErrorKind::OpenAsHead:
    case jt::ErrorKind::LogicalHead:
    case jt::ErrorKind::EmptyBody:
    case jt::ErrorKind::SyntaxError: return true;
    default: return false;
    }
}

jt::NamedOpens read_opens(const std::string& path)
{
    if (path.empty())
        return {};
    return opens_from_json(json::parse(read_file(path)));
}

struct Options {
    std::string file;
    std::string opens;
    std::string semantics;
    std::string fact;
    std::string format = "json";
    std::vector<std::string> domain;
    std::uint64_t seed = 0;
    std::size_t count = 0;
    std::size_t max_atoms = 6;
    std::size_t max_rules = 12;
    std::size_t max_body = 3;
    std::string host = "127.0.0.1";
    int port = 0;
    std::string state_dir;
};

int cmd_ground(const Options& o, std::ostream& out)
{
    const jt::Program program = jt::parse(read_file(o.file));
    const std::set<std::string> domain{o.domain.begin(), o.domain.end()};
    out << jt::to_string(jt::ground(program, domain));
    return exit_ok;
}

int cmd_models(const Options& o, std::ostream& out)
{
    const Loaded loaded = load(read_file(o.file), read_opens(o.opens));
    out << models_view(loaded, *jt::parse_branch_evaluation(o.semantics)).dump() << "\n";
    return exit_ok;
}

int cmd_explain(const Options& o, std::ostream& out)
{
    const Loaded loaded = load(read_file(o.file), read_opens(o.opens));
    const jt::BranchEvaluation be = *jt::parse_branch_evaluation(o.semantics);
    const jt::Frame& frame = *loaded.frame;
    const jt::Fact x = resolve_fact(frame, o.fact);
    const jt::Interpretation interp = jt::extended_lfp(frame, be, jt::initial_interpretation(loaded.opens));
    const jt::Explanation e = jt::explain(frame, be, interp, x);

    if (o.format == "dot") {
        if (!loaded.unassigned_opens.empty()) {
            out << "// unassigned_opens:";
            for (const std::string& name : loaded.unassigned_opens)
                out << " " << name;
            out << "\n";
        }
        out << jt::export_dot(e);
        return exit_ok;
    }
    json values = json::array();
    for (jt::Fact v : e.values)
        values.push_back(frame.to_string(v));
    out << json{{"explanation", explanation_view(e)},
                {"semantics", o.semantics},
                {"unassigned_opens", loaded.unassigned_opens},
                {"values", values}}
               .dump()
        << "\n";
    return exit_ok;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err)
{
    const jt::FuzzReport report = jt::fuzz_check({o.seed, o.count, o.max_atoms, o.max_rules, o.max_body});
    for (const jt::FuzzEntry& e : report.entries)
        out << e.to_json_line() << "\n";
    err << report.programs << " programs, " << report.entries.size() << " checks, "
        << report.mismatches() << " mismatches, " << report.defect_count() << " defects\n";
    return report.mismatches() == 0 && report.defect_count() == 0 ? exit_ok : exit_failure;
}

int cmd_serve(const Options& o, std::ostream& err)
{
    std::optional<std::filesystem::path> dir;
    if (!o.state_dir.empty())
        dir = o.state_dir;
    Service service{dir};
    HttpServer server{service};
    if (server.bind(o.host, o.port) < 0) {
        err << "cannot listen on " << o.host << ":" << o.port << "\n";
        return exit_failure;
    }
    err << "listening on " << o.host << ":" << o.port << "\n";
    return server.run() ? exit_ok : exit_failure;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Justification semantics for logic programs", "jfy"};
    app.require_subcommand(1);

    auto* ground = app.add_subcommand("ground", "Print the ground instantiation of a program");
    ground->add_option("file", o.file, "Program file")->required();
    ground->add_option("--domain", o.domain, "Constants to ground over (comma separated)")->delimiter(',');

    auto* models = app.add_subcommand("models", "Compute the models of a program");
    models->add_option("--semantics", o.semantics, "wf, stable, kk or sp")
        ->required()
        ->check(CLI::IsMember(semantics_names));
    models->add_option("file", o.file, "Program file")->required();
    models->add_option("--opens", o.opens, "JSON file with open atom values");

    auto* explain = app.add_subcommand("explain", "Print a justification supporting a fact");
    explain->add_option("--fact", o.fact, "Fact to explain, e.g. path(a,c) or ~p")->required();
    explain->add_option("--semantics", o.semantics, "wf, stable, kk or sp")
        ->required()
        ->check(CLI::IsMember(semantics_names));
    explain->add_option("file", o.file, "Program file")->required();
    explain->add_option("--opens", o.opens, "JSON file with open atom values");
    explain->add_option("--format", o.format, "dot or json")->check(CLI::IsMember({"dot", "json"}));

    auto* check = app.add_subcommand("check", "Compare the engine with classical semantics on random programs");
    check->add_option("--seed", o.seed)->required();
    check->add_option("--count", o.count)->required();
    check->add_option("--max-atoms", o.max_atoms)->check(CLI::PositiveNumber);
    check->add_option("--max-rules", o.max_rules)->check(CLI::PositiveNumber);
    check->add_option("--max-body", o.max_body);

    auto* serve_cmd = app.add_subcommand("serve", "Serve the session API over HTTP");
    serve_cmd->add_option("--port", o.port)->required()->check(CLI::Range(1, 65535));
    serve_cmd->add_option("--host", o.host);
    serve_cmd->add_option("--state-dir", o.state_dir, "Directory for session files");

    std::vector<const char*> argv{"jfy"};
    for (const std::string& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
    }

    try {
        if (ground->parsed())
            return cmd_ground(o, out);
        if (models->parsed())
            return cmd_models(o, out);
        if (explain->parsed())
            return cmd_explain(o, out);
        if (check->parsed())
            return cmd_check(o, out, err);
        return cmd_serve(o, err);
    } catch (const jt::ParseError& e) {
        err << describe(e, o.file);
        return exit_usage;
    } catch (const jt::Error& e) {
        err << "error: " << e.what() << "\n";
        return is_input_error(e.kind()) ? exit_usage : exit_failure;
    } catch (const json::exception& e) {
        err << "error: malformed opens file: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
}

} // namespace jfy
