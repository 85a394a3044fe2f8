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

#ifndef MHL_SCRIPT_AST_HPP
#define MHL_SCRIPT_AST_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "mhl/error.hpp"
#include "mhl/script/preterm.hpp"

namespace mhl::script {

// A fact named in `from`/`with`: a label, a literal ‹φ›, or `this`.
struct FactRef {
    enum class Kind { Name, Literal, This };
    Kind kind = Kind::Name;
    std::string name;
    PreTermPtr prop;
    SourceSpan span;
};

// `R` or `R[t1, _, t3]`. Positional arguments instantiate the rule's
// variables in order, skipping predicate variables; `_` leaves one open.
struct RuleRef {
    std::string name;
    std::vector<PreTermPtr> args;  // nullptr for `_`
    SourceSpan span;
};

struct Prop {
    std::optional<std::string> label;
    PreTermPtr term;
    SourceSpan span;
};

enum class Chain { None, Then, From, With };

// One command of the flat script language. Scripts are sequences of these;
// the REPL feeds them to a session one at a time, and the tree form below
// is built from them.
struct Command {
    enum class Kind { Theory, Item, Assume, Fix, Let, Have, Show, Obtain, Proof, Qed, Next, By, Dots };
    enum class Method { Default, Skip, Rule };

    Kind kind = Kind::Next;
    SourceSpan span;

    std::string name;     // Theory: theory name; Item: lemma|theorem|proposition|corollary; Let: ?abbrev
    std::string imports;  // Theory
    Chain chain = Chain::None;
    std::vector<FactRef> facts;        // from/with
    std::vector<Prop> props;           // Item, Have, Show, Obtain: one; Assume: one or more
    std::vector<PreTerm::Var> vars;    // Fix, Obtain
    PreTermPtr term;                   // Let
    Method method = Method::Default;   // Proof
    std::vector<RuleRef> rules;        // Proof (one with Method::Rule), By

    bool is_claim() const { return kind == Kind::Item || kind == Kind::Have || kind == Kind::Show || kind == Kind::Obtain; }
};

const char* command_keyword(Command::Kind k);

struct ProofBlock;

struct Justification {
    enum class Kind { By, Dots, Block };
    Kind kind = Kind::Dots;
    std::vector<RuleRef> rules;
    std::shared_ptr<ProofBlock> block;
    SourceSpan span;
};

struct Step {
    Command command;
    std::optional<Justification> just;  // present exactly for claims
};

struct ProofBlock {
    Command open;   // the `proof` command
    std::vector<Step> steps;
    SourceSpan span;  // `proof` through `qed`
};

struct Item {
    Command command;
    Justification just;
    SourceSpan span;
};

struct Script {
    std::string name;
    std::string imports;
    std::vector<Item> items;
    SourceSpan span;
};

// Equality ignores spans and the spelling of chaining keywords.
bool operator==(const FactRef& a, const FactRef& b);
bool operator==(const RuleRef& a, const RuleRef& b);
bool operator==(const Prop& a, const Prop& b);
bool operator==(const Command& a, const Command& b);
bool operator==(const Justification& a, const Justification& b);
bool operator==(const Step& a, const Step& b);
bool operator==(const ProofBlock& a, const ProofBlock& b);
bool operator==(const Item& a, const Item& b);
bool operator==(const Script& a, const Script& b);

// Tokenize and parse commands without checking block structure.
std::vector<Command> parse_commands(std::string_view text, const std::string& file = {});

// Commands to tree; throws ParseError on unbalanced blocks, a goal segment
// without `show`, or an abbreviation used before its `let`.
Script build_script(const std::vector<Command>& commands);
Script parse_script(std::string_view text, const std::string& file = {});

// Back to commands, in source order.
std::vector<Command> flatten(const Script& s);
std::vector<Command> flatten(const Item& item);

std::string pretty(const Command& c);
std::string pretty(const Script& s);
// Commands one per line, indented by block depth.
std::string pretty(const std::vector<Command>& commands);

nlohmann::json to_json(const Script& s, bool with_spans = true);

// Shape statistics used by tests and reports.
struct ScriptShape {
    int depth = 0;      // deepest proof-block nesting
    int terminals = 0;  // `by` / `..` justifications
};
ScriptShape shape(const Item& item);

}  // namespace mhl::script

#endif
