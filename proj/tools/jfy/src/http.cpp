#include "httplib.h"
#include "jfy/service.hpp"

namespace jfy {

struct HttpServer::Impl {
    httplib::Server server;
};

HttpServer::HttpServer(Service& service) : impl_{std::make_unique<Impl>()}
{
    auto forward = [&service](const httplib::Request& req, httplib::Response& res) {
        Request request;
        request.method = req.method;
        request.path = req.path;
        for (const auto& [key, value] : req.params)
            request.query.emplace(key, value);
        request.content_type = req.get_header_value("Content-Type");
        request.body = req.body;
        const Response response = service.handle(request);
        res.status = response.status;
        res.set_content(response.body, "application/json");
    };
    impl_->server.Get(".*", forward);
    impl_->server.Post(".*", forward);
    impl_->server.Put(".*", forward);
    impl_->server.Delete(".*", forward);
}

HttpServer::~HttpServer() = default;

int HttpServer::bind(const std::string& host, int port)
{
    if (port == 0)
        return impl_->server.bind_to_any_port(host);
    return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::run() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() { impl_->server.stop(); }

} // namespace jfy
