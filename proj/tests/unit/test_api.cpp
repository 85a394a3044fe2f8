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

#include <future>
#include <thread>

#include "doctest.h"
#include "httplib.h"
#include "mhl/session/api.hpp"
#include "mhl/session/server.hpp"

using namespace mhl::session;
using nlohmann::json;

namespace {

const char* kBicond = "(p ⟷ q) ⟷ (q ⟷ p)";
const std::vector<std::string> kBicondSteps = {
    "proof",         "assume \"p ⟷ q\"",  "show \"q ⟷ p\"", "proof", "assume q", "with ‹p ⟷ q› show p ..",
    "next",          "assume p",          "with ‹p ⟷ q› show q ..", "qed", "next", "assume \"q ⟷ p\"",
    "show \"p ⟷ q\"", "proof",            "assume p", "with ‹q ⟷ p› show q ..", "next", "assume q",
    "with ‹q ⟷ p› show p ..", "qed"};

}  // namespace

TEST_CASE("session api") {
    SessionManager mgr(std::nullopt, 1);
    auto start = mgr.handle("start", {{"imports", "classical"}, {"goal", kBicond}});
    REQUIRE(start.status == 200);
    std::string token = start.body["token"];
    CHECK(token.size() == 32);
    CHECK(start.body["state"]["goals"].size() == 1);

    for (const auto& cmd : kBicondSteps) {
        auto r = mgr.handle("step", {{"token", token}, {"text", cmd}});
        INFO(cmd << " -> " << r.body.dump());
        REQUIRE(r.status == 200);
        CHECK(r.body["state_hash"].is_string());
    }
    auto bad = mgr.handle("step", {{"token", token}, {"text", "show \"p ∧\" .."}});
    CHECK(bad.status == 400);
    CHECK(bad.body["ok"] == false);
    CHECK(bad.body["error"]["line"] == 1);

    auto ill = mgr.handle("step", {{"token", token}, {"text", "have \"p (λx. x)\" .."}});
    CHECK(ill.status == 400);
    CHECK(ill.body["error"]["column"].get<int>() > 0);

    auto qed = mgr.handle("qed", {{"token", token}});
    REQUIRE(qed.status == 200);
    CHECK(qed.body["theorem"]["gates_used"] == json::array({"CORE", "EXT"}));

    auto exported = mgr.handle("export-script", {{"token", token}});
    REQUIRE(exported.status == 200);
    auto check = mgr.handle("check", {{"text", exported.body["script"]}});
    CHECK(check.status == 200);
    CHECK(check.body["ok"] == true);
    CHECK(check.body["schema"] == "mhl-check/1");

    auto log = mgr.handle("log", {{"token", token}});
    CHECK(log.body["events"].size() >= kBicondSteps.size() + 1);

    auto undo = mgr.handle("undo", {{"token", token}});
    CHECK(undo.body["undone"] == true);
    CHECK(undo.body["state"]["theorems"].empty());

    auto rules = mgr.handle("rules", {{"token", token}});
    CHECK(rules.body["rules"].size() > 20);

    CHECK(mgr.handle("close", {{"token", token}}).status == 200);
    CHECK(mgr.handle("state", {{"token", token}}).status == 404);
    CHECK(mgr.handle("frobnicate", {{"token", token}}).status == 404);
    CHECK(mgr.handle("step", json::array()).status == 400);
    CHECK(mgr.handle("start", {{"goal", "λx. x"}}).status == 400);
    CHECK(mgr.size() == 0);
}

TEST_CASE("gate override applies to every session") {
    SessionManager mgr(mhl::kernel::GateSet::core(), 2);
    auto start = mgr.handle("start", {{"imports", "classical"}, {"goal", kBicond}});
    REQUIRE(start.status == 200);
    CHECK(start.body["state"]["theory"]["gates"] == json::array({"CORE"}));
    auto step = mgr.handle("step", {{"token", start.body["token"]}, {"text", "proof"}});
    CHECK(step.status == 400);
}

TEST_CASE("http round trip") {
    SessionManager mgr(std::nullopt, 3);
    HttpServer server(mgr);
    std::promise<int> bound;
    std::thread t([&] { server.listen("127.0.0.1", 0, [&](int port) { bound.set_value(port); }); });
    int port = bound.get_future().get();
    REQUIRE(port > 0);

    httplib::Client cli("127.0.0.1", port);
    auto health = cli.Get("/health");
    REQUIRE(health);
    CHECK(health->status == 200);

    auto res = cli.Post("/api/start", json{{"imports", "classical"}, {"goal", kBicond}}.dump(), "application/json");
    REQUIRE(res);
    CHECK(res->status == 200);
    json body = json::parse(res->body);
    std::string token = body["token"];

    auto step = cli.Post("/api/step", json{{"token", token}, {"text", "proof"}}.dump(), "application/json");
    REQUIRE(step);
    CHECK(json::parse(step->body)["state"]["goals"].size() == 2);

    auto err = cli.Post("/api/step", json{{"token", token}, {"text", "have \"p ⟶\" .."}}.dump(), "application/json");
    REQUIRE(err);
    CHECK(err->status >= 400);
    CHECK(err->status < 500);
    CHECK(json::parse(err->body)["error"].contains("line"));

    auto garbage = cli.Post("/api/step", "{not json", "application/json");
    REQUIRE(garbage);
    CHECK(garbage->status == 400);

    auto missing = cli.Post("/api/state", json{{"token", "0"}}.dump(), "application/json");
    REQUIRE(missing);
    CHECK(missing->status == 404);

    auto rules = cli.Get("/api/rules?imports=core");
    REQUIRE(rules);
    CHECK(rules->status == 200);

    server.stop();
    t.join();
}
