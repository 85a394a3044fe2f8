/* Copyright 2026 The mhl Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "mhl/session/server.hpp"

#include "httplib.h"

namespace mhl::session {

struct HttpServer::Impl {
    SessionManager& manager;
    httplib::Server server;
};

namespace {

void reply(httplib::Response& res, const ApiResponse& r) {
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
}

}  // namespace

HttpServer::HttpServer(SessionManager& manager) : impl_(new Impl{manager, {}}) {
    auto& srv = impl_->server;
    SessionManager& mgr = impl_->manager;
    srv.set_default_headers({{"Access-Control-Allow-Origin", "*"}});
    srv.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) {
        res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
        res.set_header("Access-Control-Allow-Headers", "Content-Type");
        res.status = 204;
    });
    srv.Get("/health", [](const httplib::Request&, httplib::Response& res) {
        res.set_content(R"({"ok":true})", "application/json");
    });
    srv.Get("/api/rules", [&mgr](const httplib::Request& req, httplib::Response& res) {
        nlohmann::json body = nlohmann::json::object();
        if (req.has_param("imports")) body["imports"] = req.get_param_value("imports");
        if (req.has_param("token")) body["token"] = req.get_param_value("token");
        reply(res, mgr.handle("rules", body));
    });
    srv.Post(R"(/api/([a-z\-]+))", [&mgr](const httplib::Request& req, httplib::Response& res) {
        nlohmann::json body = nlohmann::json::parse(req.body.empty() ? "{}" : req.body, nullptr, false);
        if (body.is_discarded()) {
            reply(res, {400, error_body("request body is not valid JSON")});
            return;
        }
        reply(res, mgr.handle(req.matches[1], body));
    });
    srv.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr) {
        reply(res, {500, error_body("internal error")});
    });
}

HttpServer::~HttpServer() = default;

bool HttpServer::listen(const std::string& host, int port, const std::function<void(int)>& on_bound) {
    auto& srv = impl_->server;
    if (port == 0) {
        port = srv.bind_to_any_port(host);
        if (port < 0) return false;
    } else if (!srv.bind_to_port(host, port)) {
        return false;
    }
    if (on_bound) on_bound(port);
    return srv.listen_after_bind();
}

void HttpServer::stop() { impl_->server.stop(); }

}  // namespace mhl::session
