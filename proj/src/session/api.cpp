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

#include "mhl/session/api.hpp"

#include <cstdio>

#include "mhl/script/preterm.hpp"
#include "mhl/syntax/pretty.hpp"

namespace mhl::session {

namespace {

using nlohmann::json;

struct BadRequest : Error {
    int status;
    BadRequest(int s, const std::string& m) : Error(m), status(s) {}
};

std::string field(const json& req, const char* name) {
    auto it = req.find(name);
    if (it == req.end() || !it->is_string()) throw BadRequest(400, std::string("missing string field '") + name + "'");
    return it->get<std::string>();
}

json with_state(const Session& s, json body = json::object()) {
    body["ok"] = true;
    body["state"] = s.state();
    body["state_hash"] = s.state_hash();
    return body;
}

json rules_json(const RuleCatalog& cat) {
    json out = json::array();
    for (const derived::CatalogEntry& e : cat.listing())
        out.push_back({{"name", e.name},
                       {"statement", e.statement},
                       {"gates", e.gates},
                       {"available", e.available},
                       {"kind", e.kind}});
    return out;
}

}  // namespace

json error_body(const std::string& message, const SourceSpan* span) {
    json err{{"message", message}};
    if (span && span->valid()) {
        err["file"] = span->file;
        err["line"] = span->line;
        err["column"] = span->column;
        err["end_line"] = span->end_line;
        err["end_column"] = span->end_column;
    }
    return {{"ok", false}, {"error", err}};
}

SessionManager::SessionManager(std::optional<GateSet> gates, std::uint64_t seed) : gates_(gates), rng_(seed) {}

std::size_t SessionManager::size() const {
    std::lock_guard lock(mu_);
    return sessions_.size();
}

std::string SessionManager::new_token() {
    char buf[33];
    std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(rng_()),
                  static_cast<unsigned long long>(rng_()));
    return buf;
}

std::shared_ptr<SessionManager::Entry> SessionManager::find(const json& req) {
    std::string token = field(req, "token");
    std::lock_guard lock(mu_);
    auto it = sessions_.find(token);
    if (it == sessions_.end()) throw BadRequest(404, "unknown session token");
    return it->second;
}

ApiResponse SessionManager::handle(const std::string& op, const json& req) {
    try {
        if (!req.is_object()) throw BadRequest(400, "request body must be a JSON object");
        if (op == "start") {
            std::string imports = req.value("imports", "core");
            std::string name = req.value("name", "Scratch");
            auto s = Session::start(imports, field(req, "goal"), gates_, name);
            json body = with_state(s);
            std::lock_guard lock(mu_);
            std::string token = new_token();
            sessions_.emplace(token, std::make_shared<Entry>(std::move(s)));
            body["token"] = token;
            return {200, body};
        }
        if (op == "check") {
            CheckReport r = check_script(field(req, "text"), req.value("file", "<request>"), gates_);
            json body = r.to_json();
            body["ok"] = r.ok();
            return {200, body};
        }
        if (op == "rules" && !req.contains("token")) {
            auto gs = GateSet::parse(req.value("imports", "full"));
            if (!gs) throw BadRequest(400, "unknown imports");
            Theory thy = derived::standard_theory(gates_ ? *gates_ : *gs);
            return {200, {{"ok", true}, {"rules", rules_json(RuleCatalog(thy))}}};
        }
        if (op == "close") {
            std::string token = field(req, "token");
            std::lock_guard lock(mu_);
            if (!sessions_.erase(token)) throw BadRequest(404, "unknown session token");
            return {200, {{"ok", true}}};
        }

        std::shared_ptr<Entry> e = find(req);
        std::lock_guard lock(e->mu);
        Session& s = e->session;
        if (op == "step") {
            s.step(field(req, "text"), req.value("file", "<step>"));
            return {200, with_state(s)};
        }
        if (op == "state") return {200, with_state(s, {{"display", s.display()}})};
        if (op == "undo") {
            bool undone = s.undo();
            return {200, with_state(s, {{"undone", undone}})};
        }
        if (op == "qed") {
            std::size_t before = s.has_theory() ? s.theory().theorems.size() : 0;
            s.step("qed");
            json body = json::object();
            const TheoryState& ts = s.theory();
            if (ts.theorems.size() > before) {
                const ProvedTheorem& t = ts.theorems.back();
                body["theorem"] = {{"name", t.name},
                                   {"statement", syntax::pretty(t.thm.concl())},
                                   {"gates_used", t.thm.gates().names()}};
            }
            return {200, with_state(s, body)};
        }
        if (op == "rules") return {200, {{"ok", true}, {"rules", rules_json(*s.theory().catalog)}}};
        if (op == "export-script") return {200, {{"ok", true}, {"script", s.export_script()}}};
        if (op == "log") {
            json events = json::array();
            for (const SessionEvent& ev : s.log())
                events.push_back({{"step", ev.step}, {"ok", ev.ok}, {"state_hash", ev.state_hash},
                                  {"diagnostic", ev.diagnostic}});
            return {200, {{"ok", true}, {"events", events}}};
        }
        throw BadRequest(404, "unknown operation '" + op + "'");
    } catch (const BadRequest& e) {
        return {e.status, error_body(e.what())};
    } catch (const SpannedError& e) {
        return {400, error_body(e.message(), &e.span())};
    } catch (const Error& e) {
        return {400, error_body(e.what())};
    } catch (const json::exception& e) {
        return {400, error_body(std::string("malformed request: ") + e.what())};
    }
}

}  // namespace mhl::session
