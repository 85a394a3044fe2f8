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

#ifndef MHL_SESSION_API_HPP
#define MHL_SESSION_API_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>

#include "mhl/session/engine.hpp"
#include "json.hpp"

namespace mhl::session {

struct ApiResponse {
    int status = 200;
    nlohmann::json body;
};

// The JSON message set behind `mhl serve`. Operations:
//   start          {imports?, goal, name?}     -> {token, state}
//   step           {token, text}               -> {state}
//   state          {token}                     -> {state}
//   undo           {token}                     -> {undone, state}
//   qed            {token}                     -> {theorem?, state}
//   rules          {token? | imports?}         -> {rules}
//   export-script  {token}                     -> {script}
//   log            {token}                     -> {events}
//   close          {token}                     -> {}
//   check          {text, file?}               -> report
// Every reply carries "ok". Failures have {"ok": false, "error": {...}} with
// the source span when there is one. Sessions live in memory only.
class SessionManager {
public:
    explicit SessionManager(std::optional<GateSet> gates = std::nullopt, std::uint64_t seed = std::random_device{}());

    ApiResponse handle(const std::string& op, const nlohmann::json& request);
    std::size_t size() const;

private:
    struct Entry {
        std::mutex mu;
        Session session;
        explicit Entry(Session s) : session(std::move(s)) {}
    };

    std::shared_ptr<Entry> find(const nlohmann::json& request);
    std::string new_token();

    std::optional<GateSet> gates_;
    mutable std::mutex mu_;
    std::mt19937_64 rng_;
    std::map<std::string, std::shared_ptr<Entry>> sessions_;
};

nlohmann::json error_body(const std::string& message, const SourceSpan* span = nullptr);

}  // namespace mhl::session

#endif
