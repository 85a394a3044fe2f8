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

#ifndef MHL_SESSION_ENGINE_HPP
#define MHL_SESSION_ENGINE_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "mhl/derived/catalog.hpp"
#include "mhl/script/ast.hpp"

namespace mhl::session {

using derived::RuleCatalog;
using kernel::GateSet;
using kernel::Theory;
using kernel::Thm;
using syntax::Term;

struct ProvedTheorem {
    std::string name;  // empty for an unnamed item
    std::string keyword;
    Thm thm;
    SourceSpan span;
};

// The theory a session works in. Replaced, never mutated, when a theorem is
// registered, so snapshots can share it.
struct TheoryState {
    std::string name;
    std::string imports;
    GateSet gates;
    Theory thy;
    std::shared_ptr<const RuleCatalog> catalog;
    std::vector<ProvedTheorem> theorems;

    const ProvedTheorem* theorem(const std::string& name) const;
};

struct SessionEvent {
    std::string step;
    bool ok = true;
    std::string state_hash;  // after the step
    std::string diagnostic;
};

struct State;

// One proof session: a theory header followed by items, driven one command
// at a time. Every failing command leaves the state untouched.
class Session {
public:
    // `gates` replaces whatever the theory header asks for.
    explicit Session(std::optional<GateSet> gates = std::nullopt);
    ~Session();
    Session(const Session&);
    Session& operator=(const Session&);
    Session(Session&&) noexcept;
    Session& operator=(Session&&) noexcept;

    // A theory with a single anonymous goal.
    static Session start(const std::string& imports, std::string_view goal, std::optional<GateSet> gates = std::nullopt,
                         const std::string& theory_name = "Scratch");

    // Parse `text` into commands and apply them all, or none on error.
    // The event log records the step either way; the exception is rethrown.
    void step(std::string_view text, const std::string& file = "<input>");
    void apply(const script::Command& c);
    // Undo the most recent successful step; false if there is none.
    bool undo();

    // Number of successful steps (the undo depth) and rollback to it.
    std::size_t depth() const { return history_.size(); }
    void rollback(std::size_t depth);

    bool has_theory() const;
    const TheoryState& theory() const;
    bool in_proof() const;
    // Unsolved goals of the innermost block (0 outside a proof).
    int open_goals() const;

    nlohmann::json state() const;
    std::string state_hash() const;
    // Human-readable goal display; ⟷ shows as =.
    std::string display() const;

    const std::vector<SessionEvent>& log() const { return log_; }
    // Re-run a log from scratch (successful steps and undos only).
    static Session replay(const std::vector<SessionEvent>& log, std::optional<GateSet> gates = std::nullopt);

    // The applied commands as script text; complete sessions re-check.
    std::string export_script() const;
    const std::vector<script::Command>& commands() const;

private:
    std::optional<GateSet> gates_;
    std::shared_ptr<const State> state_;
    std::vector<std::shared_ptr<const State>> history_;
    std::vector<SessionEvent> log_;
};

// Name of the rule bare `proof` applies to a goal, or an explanation of why
// none does.
struct DefaultIntro {
    std::optional<std::string> rule;
    std::string reason;
};
DefaultIntro default_intro(const Term& goal);

struct ItemReport {
    std::string keyword;
    std::string name;
    std::string statement;
    bool ok = false;
    std::string error;
    SourceSpan span;  // of the error, or of the item
    GateSet gates;    // gates_used of the theorem
    double seconds = 0;
};

struct CheckReport {
    std::string file;
    std::string theory;
    std::string imports;
    GateSet gates;  // enabled for the run
    bool parsed = false;
    std::string error;  // parse or header failure
    SourceSpan error_span;
    std::vector<ItemReport> items;
    double seconds = 0;

    bool ok() const;
    nlohmann::json to_json() const;
    std::string to_text() const;
};

// Parse and replay a whole script. A failing item is reported and the
// remaining items still run.
CheckReport check_script(std::string_view text, const std::string& file, std::optional<GateSet> gates = std::nullopt);
CheckReport check_file(const std::string& path, std::optional<GateSet> gates = std::nullopt);

}  // namespace mhl::session

#endif
