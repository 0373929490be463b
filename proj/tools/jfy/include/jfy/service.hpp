#pragma once

#include "jt/branch_evaluation.hpp"
#include "jt/session.hpp"

#include <atomic>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

namespace jfy {

struct Request {
    std::string method;
    std::string path; // decoded, without query string
    std::map<std::string, std::string> query;
    std::string content_type;
    std::string body;
};

struct Response {
    int status = 200;
    std::string body; // JSON
};

/// The HTTP API without a transport. Thread-safe: requests on different
/// sessions run in parallel, steps on one session are serialized.
class Service {
public:
    /// With a state directory every session is written there after each
    /// change and sessions found there are restored.
    explicit Service(std::optional<std::filesystem::path> state_dir = std::nullopt);
    ~Service();

    Service(const Service&) = delete;
    Service& operator=(const Service&) = delete;

    Response handle(const Request& request);

private:
    struct Session;

    Response create_session(const Request& request);
    Response session_request(const Request& request, const std::string& id, const std::string& rest);
    Response models(const Request& request);

    std::shared_ptr<Session> find(const std::string& id);
    void persist(const std::string& id, const Session& session) const;
    void restore();

    std::optional<std::filesystem::path> state_dir_;
    std::mutex store_mutex_;
    std::map<std::string, std::shared_ptr<Session>> sessions_;
    std::atomic<std::uint64_t> next_id_{1};
};

/// HTTP transport for a Service.
class HttpServer {
public:
    explicit HttpServer(Service& service);
    ~HttpServer();

    HttpServer(const HttpServer&) = delete;
    HttpServer& operator=(const HttpServer&) = delete;

    /// Port 0 picks a free port. Returns the bound port, or -1.
    int bind(const std::string& host, int port);
    /// Serves until stop(); returns false if the server failed.
    bool run();
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace jfy
