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

#include <set>
#include <utility>

#include "lexer.hpp"
#include "mhl/script/ast.hpp"
#include "mhl/syntax/pretty.hpp"

namespace mhl::script {

using detail::ScriptToken;
using Kind = Command::Kind;

namespace {

bool same_term(const PreTermPtr& a, const PreTermPtr& b) {
    if (!a || !b) return !a && !b;
    return *a == *b;
}

const std::set<std::string, std::less<>>& keywords() {
    static const std::set<std::string, std::less<>> k{
        "theory", "imports", "begin", "end",  "lemma", "theorem", "proposition", "corollary", "proof",
        "qed",    "next",    "assume", "fix", "let",   "have",    "show",        "obtain",    "where",
        "by",     "then",    "hence", "thus", "from",  "with",    "and",         "this"};
    return k;
}

bool is_item_keyword(std::string_view w) {
    return w == "lemma" || w == "theorem" || w == "proposition" || w == "corollary";
}

SourceSpan join(const SourceSpan& a, const SourceSpan& b) {
    SourceSpan s = a;
    s.end_line = b.end_line;
    s.end_column = b.end_column;
    return s;
}

class CommandParser {
public:
    CommandParser(std::string_view text, const std::string& file) : toks_(detail::lex_script(text, file)) {}

    std::vector<Command> run() {
        std::vector<Command> out;
        while (!at_end()) {
            if (word_is("begin") || word_is("end")) {
                ++pos_;
                continue;
            }
            out.push_back(command());
        }
        return out;
    }

private:
    const ScriptToken& peek(std::size_t ahead = 0) const {
        return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
    }
    bool at_end() const { return peek().kind == ScriptToken::Kind::End; }
    bool word_is(std::string_view w, std::size_t ahead = 0) const {
        return peek(ahead).kind == ScriptToken::Kind::Word && peek(ahead).text == w;
    }
    bool symbol_is(std::string_view s, std::size_t ahead = 0) const {
        return peek(ahead).kind == ScriptToken::Kind::Symbol && peek(ahead).text == s;
    }
    bool plain_word(std::size_t ahead = 0) const {
        return peek(ahead).kind == ScriptToken::Kind::Word && !keywords().count(peek(ahead).text);
    }
    [[noreturn]] void fail(const std::string& msg) const {
        const ScriptToken& t = peek();
        std::string found = t.kind == ScriptToken::Kind::End ? "end of input" : "'" + t.text + "'";
        throw ParseError(msg + " (found " + found + ")", t.span);
    }
    const ScriptToken& take() { return toks_[pos_++]; }
    void expect_symbol(std::string_view s) {
        if (!symbol_is(s)) fail("expected '" + std::string(s) + "'");
        ++pos_;
    }
    std::string expect_name(const char* what) {
        if (!plain_word()) fail(std::string("expected ") + what);
        return take().text;
    }
    SourceSpan last_span() const { return toks_[pos_ - 1].span; }

    // A formula or term: "..." / ‹...›, or a single identifier or ?abbrev.
    bool at_term() const {
        const ScriptToken& t = peek();
        return t.kind == ScriptToken::Kind::Text || t.kind == ScriptToken::Kind::Abbrev || plain_word();
    }
    PreTermPtr term() {
        if (!at_term()) fail("expected a formula");
        const ScriptToken& t = take();
        return parse_preterm(t.text, t.kind == ScriptToken::Kind::Text ? t.inner : t.span);
    }
    Type type() {
        const ScriptToken& t = peek();
        if (t.kind != ScriptToken::Kind::Text && !plain_word()) fail("expected a type");
        ++pos_;
        return parse_type(t.text, t.kind == ScriptToken::Kind::Text ? t.inner : t.span);
    }

    Prop prop() {
        Prop p;
        SourceSpan start = peek().span;
        if (plain_word() && symbol_is(":", 1)) {
            p.label = take().text;
            ++pos_;
        }
        p.term = term();
        p.span = join(start, last_span());
        return p;
    }

    std::vector<PreTerm::Var> vars() {
        std::vector<PreTerm::Var> out;
        while (true) {
            if (word_is("and") && !out.empty()) ++pos_;
            if (!plain_word()) break;
            PreTerm::Var v{take().text, std::nullopt};
            if (symbol_is("::")) {
                ++pos_;
                v.type = type();
            }
            out.push_back(std::move(v));
        }
        if (out.empty()) fail("expected a variable name");
        return out;
    }

    RuleRef rule_ref() {
        RuleRef r;
        SourceSpan start = peek().span;
        r.name = expect_name("a rule name");
        if (symbol_is("[")) {
            ++pos_;
            while (true) {
                if (word_is("_")) {
                    ++pos_;
                    r.args.push_back(nullptr);
                } else {
                    r.args.push_back(term());
                }
                if (symbol_is(",")) {
                    ++pos_;
                    continue;
                }
                expect_symbol("]");
                break;
            }
        }
        r.span = join(start, last_span());
        return r;
    }

    std::vector<RuleRef> rule_list() {
        std::vector<RuleRef> out;
        if (symbol_is("(") && word_is("rule", 1)) {
            pos_ += 2;
            while (plain_word()) out.push_back(rule_ref());
            expect_symbol(")");
        } else {
            while (plain_word()) out.push_back(rule_ref());
        }
        if (out.empty()) fail("expected a rule name");
        return out;
    }

    std::vector<FactRef> facts() {
        std::vector<FactRef> out;
        while (true) {
            if (word_is("and") && !out.empty()) ++pos_;
            const ScriptToken& t = peek();
            FactRef f;
            f.span = t.span;
            if (word_is("this")) {
                f.kind = FactRef::Kind::This;
                ++pos_;
            } else if (t.kind == ScriptToken::Kind::Text) {
                f.kind = FactRef::Kind::Literal;
                f.prop = term();
            } else if (plain_word()) {
                f.kind = FactRef::Kind::Name;
                f.name = take().text;
            } else {
                break;
            }
            out.push_back(std::move(f));
        }
        if (out.empty()) fail("expected a fact");
        return out;
    }

    void claim_body(Command& c) {
        const std::string w = take().text;
        if (w == "have") c.kind = Kind::Have;
        else if (w == "show") c.kind = Kind::Show;
        else if (w == "obtain") c.kind = Kind::Obtain;
        else throw ParseError("expected have, show or obtain after '" + w + "'", last_span());
        if (c.kind == Kind::Obtain) {
            c.vars = vars();
            if (!word_is("where")) fail("expected 'where'");
            ++pos_;
        }
        c.props.push_back(prop());
    }

    Command command() {
        Command c;
        const ScriptToken& first = peek();
        SourceSpan start = first.span;
        if (symbol_is("..")) {
            ++pos_;
            c.kind = Kind::Dots;
            c.span = start;
            return c;
        }
        if (first.kind != ScriptToken::Kind::Word || !keywords().count(first.text)) fail("expected a command");
        std::string w = take().text;
        if (w == "theory") {
            c.kind = Kind::Theory;
            c.name = expect_name("a theory name");
            if (!word_is("imports")) fail("expected 'imports'");
            ++pos_;
            c.imports = expect_name("core, classical or full");
        } else if (is_item_keyword(w)) {
            c.kind = Kind::Item;
            c.name = w;
            c.props.push_back(prop());
        } else if (w == "assume") {
            c.kind = Kind::Assume;
            c.props.push_back(prop());
            while (word_is("and")) {
                ++pos_;
                c.props.push_back(prop());
            }
        } else if (w == "fix") {
            c.kind = Kind::Fix;
            c.vars = vars();
        } else if (w == "let") {
            c.kind = Kind::Let;
            if (peek().kind != ScriptToken::Kind::Abbrev) fail("expected ?name");
            c.name = take().text;
            expect_symbol("=");
            c.term = term();
        } else if (w == "have" || w == "show" || w == "obtain") {
            --pos_;
            claim_body(c);
        } else if (w == "hence" || w == "thus") {
            c.chain = Chain::Then;
            c.kind = w == "hence" ? Kind::Have : Kind::Show;
            c.props.push_back(prop());
        } else if (w == "then") {
            c.chain = Chain::Then;
            claim_body(c);
        } else if (w == "from" || w == "with") {
            c.chain = w == "from" ? Chain::From : Chain::With;
            c.facts = facts();
            if (word_is("then")) fail("'then' cannot follow '" + w + "'");
            claim_body(c);
        } else if (w == "proof") {
            c.kind = Kind::Proof;
            if (symbol_is("-")) {
                ++pos_;
                c.method = Command::Method::Skip;
            } else if (symbol_is("(") && word_is("rule", 1)) {
                pos_ += 2;
                c.method = Command::Method::Rule;
                c.rules.push_back(rule_ref());
                expect_symbol(")");
            } else if (plain_word()) {
                c.method = Command::Method::Rule;
                c.rules.push_back(rule_ref());
            }
        } else if (w == "qed") {
            c.kind = Kind::Qed;
        } else if (w == "next") {
            c.kind = Kind::Next;
        } else if (w == "by") {
            c.kind = Kind::By;
            c.rules = rule_list();
        } else {
            throw ParseError("unexpected '" + w + "'", start);
        }
        c.span = join(start, last_span());
        return c;
    }

    std::vector<ScriptToken> toks_;
    std::size_t pos_ = 0;
};

std::string describe(const Command& c) {
    std::string s = c.kind == Kind::Item ? c.name : command_keyword(c.kind);
    if (!c.props.empty()) s += " \"" + pretty(*c.props[0].term) + "\"";
    return s + " at " + std::to_string(c.span.line) + ":" + std::to_string(c.span.column);
}

void collect_abbrevs(const PreTerm& t, std::vector<const PreTerm*>& out) {
    if (t.kind == PreTerm::Kind::Ident && t.name.starts_with("?")) out.push_back(&t);
    for (const auto& a : t.args) collect_abbrevs(*a, out);
}

class Builder {
public:
    explicit Builder(const std::vector<Command>& cmds) : cmds_(cmds) {}

    Script run() {
        Script s;
        if (cmds_.empty() || cmds_[0].kind != Kind::Theory) {
            SourceSpan sp = cmds_.empty() ? SourceSpan{} : cmds_[0].span;
            throw ParseError("a script starts with 'theory <name> imports <core|classical|full>'", sp);
        }
        s.name = cmds_[0].name;
        s.imports = cmds_[0].imports;
        s.span = cmds_[0].span;
        pos_ = 1;
        while (pos_ < cmds_.size()) {
            const Command& c = cmds_[pos_];
            if (c.kind != Kind::Item) {
                if (c.kind == Kind::Qed) throw ParseError("qed without an open proof block", c.span);
                if (c.kind == Kind::Theory) throw ParseError("only one theory per file", c.span);
                throw ParseError(std::string("'") + command_keyword(c.kind) + "' outside a proof; expected lemma, theorem, proposition or corollary", c.span);
            }
            ++pos_;
            std::set<std::string> scope;
            check_terms(c, scope);
            Item item;
            item.command = c;
            item.just = justification(c, scope);
            item.span = join(c.span, item.just.span);
            s.items.push_back(std::move(item));
        }
        if (!s.items.empty()) s.span = join(s.span, s.items.back().span);
        return s;
    }

private:
    void check_term(const PreTermPtr& t, const std::set<std::string>& scope) {
        if (!t) return;
        std::vector<const PreTerm*> uses;
        collect_abbrevs(*t, uses);
        for (const PreTerm* u : uses)
            if (u->name != "?thesis" && !scope.count(u->name))
                throw ParseError("abbreviation " + u->name + " is used before its 'let'", u->span);
    }
    void check_terms(const Command& c, const std::set<std::string>& scope) {
        for (const Prop& p : c.props) check_term(p.term, scope);
        for (const FactRef& f : c.facts) check_term(f.prop, scope);
        for (const RuleRef& r : c.rules)
            for (const auto& a : r.args) check_term(a, scope);
        check_term(c.term, scope);
    }

    Justification justification(const Command& claim, const std::set<std::string>& scope) {
        if (pos_ >= cmds_.size())
            throw ParseError(describe(claim) + " needs a justification (by, .. or proof)", claim.span);
        const Command& c = cmds_[pos_];
        Justification j;
        j.span = c.span;
        if (c.kind == Kind::By || c.kind == Kind::Dots) {
            check_terms(c, scope);
            ++pos_;
            j.kind = c.kind == Kind::By ? Justification::Kind::By : Justification::Kind::Dots;
            j.rules = c.rules;
            return j;
        }
        if (c.kind != Kind::Proof)
            throw ParseError(describe(claim) + " needs a justification (by, .. or proof)", c.span);
        check_terms(c, scope);
        ++pos_;
        j.kind = Justification::Kind::Block;
        j.block = std::make_shared<ProofBlock>(block(c, claim, scope));
        j.span = j.block->span;
        return j;
    }

    ProofBlock block(const Command& open, const Command& claim, const std::set<std::string>& outer) {
        ProofBlock b;
        b.open = open;
        std::set<std::string> scope = outer;
        bool shown = false;
        while (true) {
            if (pos_ >= cmds_.size())
                throw ParseError("proof block opened at " + std::to_string(open.span.line) + ":" +
                                     std::to_string(open.span.column) + " for " + describe(claim) +
                                     " is not closed by qed",
                                 open.span);
            const Command& c = cmds_[pos_];
            switch (c.kind) {
            case Kind::Qed:
            case Kind::Next:
                if (!shown) throw ParseError("goal segment ends without a show", c.span);
                if (c.kind == Kind::Qed) {
                    ++pos_;
                    b.span = join(open.span, c.span);
                    return b;
                }
                ++pos_;
                b.steps.push_back({c, std::nullopt});
                scope = outer;
                shown = false;
                break;
            case Kind::Theory:
            case Kind::Item:
                throw ParseError("proof block opened at " + std::to_string(open.span.line) + ":" +
                                     std::to_string(open.span.column) + " for " + describe(claim) +
                                     " is not closed by qed",
                                 c.span);
            case Kind::Proof:
                throw ParseError("proof must follow have, show, obtain or a lemma", c.span);
            case Kind::By:
            case Kind::Dots:
                throw ParseError("justification without a claim", c.span);
            case Kind::Have:
            case Kind::Show:
            case Kind::Obtain: {
                check_terms(c, scope);
                ++pos_;
                Step st{c, justification(c, scope)};
                if (c.kind == Kind::Show) shown = true;
                b.steps.push_back(std::move(st));
                break;
            }
            case Kind::Let:
                check_terms(c, scope);
                scope.insert(c.name);
                ++pos_;
                b.steps.push_back({c, std::nullopt});
                break;
            default:
                check_terms(c, scope);
                ++pos_;
                b.steps.push_back({c, std::nullopt});
                break;
            }
        }
    }

    const std::vector<Command>& cmds_;
    std::size_t pos_ = 0;
};

void flatten_just(const Justification& j, std::vector<Command>& out);

void flatten_block(const ProofBlock& b, std::vector<Command>& out) {
    out.push_back(b.open);
    for (const Step& s : b.steps) {
        out.push_back(s.command);
        if (s.just) flatten_just(*s.just, out);
    }
    Command q;
    q.kind = Kind::Qed;
    q.span = SourceSpan{b.span.file, b.span.end_line, b.span.end_column - 3, b.span.end_line, b.span.end_column};
    out.push_back(std::move(q));
}

void flatten_just(const Justification& j, std::vector<Command>& out) {
    if (j.kind == Justification::Kind::Block) {
        flatten_block(*j.block, out);
        return;
    }
    Command c;
    c.kind = j.kind == Justification::Kind::By ? Kind::By : Kind::Dots;
    c.rules = j.rules;
    c.span = j.span;
    out.push_back(std::move(c));
}

std::string quote(const PreTermPtr& t) { return "\"" + pretty(*t) + "\""; }

std::string word_or_quote(const PreTermPtr& t) {
    std::string s = pretty(*t);
    bool simple = !s.empty() && (detail::is_ident_start(s[0]) || s[0] == '?') && !keywords().count(s);
    for (char ch : s) simple = simple && (detail::is_ident_char(ch) || ch == '?');
    return simple ? s : "\"" + s + "\"";
}

std::string render_prop(const Prop& p) {
    return (p.label ? *p.label + ": " : std::string()) + word_or_quote(p.term);
}

std::string render_rule(const RuleRef& r) {
    std::string s = r.name;
    if (!r.args.empty()) {
        s += "[";
        for (std::size_t i = 0; i < r.args.size(); ++i) {
            if (i) s += ", ";
            s += r.args[i] ? quote(r.args[i]) : "_";
        }
        s += "]";
    }
    return s;
}

std::string render_vars(const std::vector<PreTerm::Var>& vs) {
    bool typed = false;
    for (const auto& v : vs) typed = typed || v.type.has_value();
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) s += typed ? " and " : " ";
        s += vs[i].name;
        if (vs[i].type) s += " :: \"" + syntax::pretty_type(*vs[i].type) + "\"";
    }
    return s;
}

std::string span_string(const SourceSpan& s) {
    return std::to_string(s.line) + ":" + std::to_string(s.column) + "-" + std::to_string(s.end_line) + ":" +
           std::to_string(s.end_column);
}

nlohmann::json term_json(const PreTerm& t) {
    using nlohmann::json;
    auto vars_json = [](const std::vector<PreTerm::Var>& vs) {
        json a = json::array();
        for (const auto& v : vs) {
            json o{{"name", v.name}};
            if (v.type) o["type"] = syntax::pretty_type(*v.type);
            a.push_back(o);
        }
        return a;
    };
    switch (t.kind) {
    case PreTerm::Kind::Ident: return json{{"ident", t.name}};
    case PreTerm::Kind::App: return json{{"app", {term_json(t.arg(0)), term_json(t.arg(1))}}};
    case PreTerm::Kind::Binder: return json{{"binder", t.name}, {"vars", vars_json(t.vars)}, {"body", term_json(t.arg(0))}};
    case PreTerm::Kind::Infix: return json{{"infix", t.name}, {"lhs", term_json(t.arg(0))}, {"rhs", term_json(t.arg(1))}};
    case PreTerm::Kind::Not: return json{{"not", term_json(t.arg(0))}};
    case PreTerm::Kind::Annot: return json{{"annot", term_json(t.arg(0))}, {"type", syntax::pretty_type(*t.type)}};
    case PreTerm::Kind::Collect: return json{{"collect", vars_json(t.vars)}, {"body", term_json(t.arg(0))}};
    }
    return nullptr;
}

const char* chain_name(Chain c) {
    switch (c) {
    case Chain::None: return "none";
    case Chain::Then: return "then";
    case Chain::From: return "from";
    case Chain::With: return "with";
    }
    return "";
}

class JsonWriter {
public:
    explicit JsonWriter(bool spans) : spans_(spans) {}

    nlohmann::json script(const Script& s) {
        nlohmann::json items = nlohmann::json::array();
        for (const Item& it : s.items) {
            nlohmann::json j = command(it.command);
            j["proof"] = just(it.just);
            span(j, it.span);
            items.push_back(std::move(j));
        }
        nlohmann::json out{{"theory", s.name}, {"imports", s.imports}, {"items", std::move(items)}};
        span(out, s.span);
        return out;
    }

private:
    void span(nlohmann::json& j, const SourceSpan& s) {
        if (spans_) j["span"] = span_string(s);
    }
    nlohmann::json term(const PreTermPtr& t) { return t ? term_json(*t) : nlohmann::json(nullptr); }

    nlohmann::json rule(const RuleRef& r) {
        nlohmann::json args = nlohmann::json::array();
        for (const auto& a : r.args) args.push_back(term(a));
        nlohmann::json j{{"name", r.name}, {"args", std::move(args)}};
        span(j, r.span);
        return j;
    }

    nlohmann::json command(const Command& c) {
        nlohmann::json j{{"cmd", c.kind == Kind::Item ? c.name : std::string(command_keyword(c.kind))}};
        if (c.kind == Kind::Let) {
            j["abbrev"] = c.name;
            j["term"] = term(c.term);
        }
        if (c.chain != Chain::None) {
            j["chain"] = chain_name(c.chain);
            nlohmann::json fs = nlohmann::json::array();
            for (const FactRef& f : c.facts) {
                nlohmann::json fj;
                if (f.kind == FactRef::Kind::This) fj["this"] = true;
                else if (f.kind == FactRef::Kind::Name) fj["name"] = f.name;
                else fj["literal"] = term(f.prop);
                span(fj, f.span);
                fs.push_back(std::move(fj));
            }
            if (!fs.empty()) j["facts"] = std::move(fs);
        }
        if (!c.props.empty()) {
            nlohmann::json ps = nlohmann::json::array();
            for (const Prop& p : c.props) {
                nlohmann::json pj{{"term", term(p.term)}};
                if (p.label) pj["label"] = *p.label;
                span(pj, p.span);
                ps.push_back(std::move(pj));
            }
            j["props"] = std::move(ps);
        }
        if (!c.vars.empty()) {
            nlohmann::json vs = nlohmann::json::array();
            for (const auto& v : c.vars) {
                nlohmann::json vj{{"name", v.name}};
                if (v.type) vj["type"] = syntax::pretty_type(*v.type);
                vs.push_back(std::move(vj));
            }
            j["vars"] = std::move(vs);
        }
        if (c.kind == Kind::Proof)
            j["method"] = c.method == Command::Method::Default ? "default" : c.method == Command::Method::Skip ? "-" : "rule";
        if (!c.rules.empty()) {
            nlohmann::json rs = nlohmann::json::array();
            for (const RuleRef& r : c.rules) rs.push_back(rule(r));
            j["rules"] = std::move(rs);
        }
        span(j, c.span);
        return j;
    }

    nlohmann::json just(const Justification& jst) {
        nlohmann::json j;
        if (jst.kind == Justification::Kind::Dots) {
            j["by"] = "..";
        } else if (jst.kind == Justification::Kind::By) {
            nlohmann::json rs = nlohmann::json::array();
            for (const RuleRef& r : jst.rules) rs.push_back(rule(r));
            j["by"] = std::move(rs);
        } else {
            const ProofBlock& b = *jst.block;
            j["block"] = command(b.open);
            nlohmann::json steps = nlohmann::json::array();
            for (const Step& s : b.steps) {
                nlohmann::json sj = command(s.command);
                if (s.just) sj["proof"] = just(*s.just);
                steps.push_back(std::move(sj));
            }
            j["steps"] = std::move(steps);
        }
        span(j, jst.span);
        return j;
    }

    bool spans_;
};

void shape_of(const Justification& j, int depth, ScriptShape& out) {
    if (j.kind != Justification::Kind::Block) {
        ++out.terminals;
        return;
    }
    out.depth = std::max(out.depth, depth + 1);
    for (const Step& s : j.block->steps)
        if (s.just) shape_of(*s.just, depth + 1, out);
}

}  // namespace

const char* command_keyword(Command::Kind k) {
    switch (k) {
    case Kind::Theory: return "theory";
    case Kind::Item: return "lemma";
    case Kind::Assume: return "assume";
    case Kind::Fix: return "fix";
    case Kind::Let: return "let";
    case Kind::Have: return "have";
    case Kind::Show: return "show";
    case Kind::Obtain: return "obtain";
    case Kind::Proof: return "proof";
    case Kind::Qed: return "qed";
    case Kind::Next: return "next";
    case Kind::By: return "by";
    case Kind::Dots: return "..";
    }
    return "?";
}

bool operator==(const FactRef& a, const FactRef& b) {
    return a.kind == b.kind && a.name == b.name && same_term(a.prop, b.prop);
}

bool operator==(const RuleRef& a, const RuleRef& b) {
    if (a.name != b.name || a.args.size() != b.args.size()) return false;
    for (std::size_t i = 0; i < a.args.size(); ++i)
        if (!same_term(a.args[i], b.args[i])) return false;
    return true;
}

bool operator==(const Prop& a, const Prop& b) { return a.label == b.label && same_term(a.term, b.term); }

bool operator==(const Command& a, const Command& b) {
    return a.kind == b.kind && a.name == b.name && a.imports == b.imports && a.chain == b.chain &&
           a.facts == b.facts && a.props == b.props && a.vars == b.vars && same_term(a.term, b.term) &&
           a.method == b.method && a.rules == b.rules;
}

bool operator==(const Justification& a, const Justification& b) {
    if (a.kind != b.kind || a.rules != b.rules) return false;
    if (a.kind != Justification::Kind::Block) return true;
    return *a.block == *b.block;
}

bool operator==(const Step& a, const Step& b) { return a.command == b.command && a.just == b.just; }

bool operator==(const ProofBlock& a, const ProofBlock& b) { return a.open == b.open && a.steps == b.steps; }

bool operator==(const Item& a, const Item& b) { return a.command == b.command && a.just == b.just; }

bool operator==(const Script& a, const Script& b) {
    return a.name == b.name && a.imports == b.imports && a.items == b.items;
}

std::vector<Command> parse_commands(std::string_view text, const std::string& file) {
    return CommandParser(text, file).run();
}

Script build_script(const std::vector<Command>& commands) { return Builder(commands).run(); }

Script parse_script(std::string_view text, const std::string& file) {
    return build_script(parse_commands(text, file));
}

std::vector<Command> flatten(const Item& item) {
    std::vector<Command> out{item.command};
    flatten_just(item.just, out);
    return out;
}

std::vector<Command> flatten(const Script& s) {
    Command header;
    header.kind = Kind::Theory;
    header.name = s.name;
    header.imports = s.imports;
    header.span = s.span;
    std::vector<Command> out{header};
    for (const Item& it : s.items) {
        auto cmds = flatten(it);
        out.insert(out.end(), cmds.begin(), cmds.end());
    }
    return out;
}

std::string pretty(const Command& c) {
    std::string s;
    switch (c.chain) {
    case Chain::None: break;
    case Chain::Then: s = "then "; break;
    case Chain::From:
    case Chain::With: {
        s = c.chain == Chain::From ? "from " : "with ";
        for (const FactRef& f : c.facts) {
            if (f.kind == FactRef::Kind::This) s += "this ";
            else if (f.kind == FactRef::Kind::Name) s += f.name + " ";
            else s += "‹" + pretty(*f.prop) + "› ";
        }
        break;
    }
    }
    switch (c.kind) {
    case Kind::Theory: return "theory " + c.name + " imports " + c.imports;
    case Kind::Item: return c.name + " " + render_prop(c.props[0]);
    case Kind::Assume: {
        s += "assume ";
        for (std::size_t i = 0; i < c.props.size(); ++i) s += (i ? " and " : "") + render_prop(c.props[i]);
        return s;
    }
    case Kind::Fix: return "fix " + render_vars(c.vars);
    case Kind::Let: return "let " + c.name + " = " + quote(c.term);
    case Kind::Have: return s + "have " + render_prop(c.props[0]);
    case Kind::Show: return s + "show " + render_prop(c.props[0]);
    case Kind::Obtain: return s + "obtain " + render_vars(c.vars) + " where " + render_prop(c.props[0]);
    case Kind::Proof:
        if (c.method == Command::Method::Skip) return "proof -";
        if (c.method == Command::Method::Rule) return "proof (rule " + render_rule(c.rules[0]) + ")";
        return "proof";
    case Kind::Qed: return "qed";
    case Kind::Next: return "next";
    case Kind::By: {
        s = "by";
        for (const RuleRef& r : c.rules) s += " " + render_rule(r);
        return s;
    }
    case Kind::Dots: return "..";
    }
    return s;
}

std::string pretty(const std::vector<Command>& commands) {
    std::string out;
    int depth = 0;
    bool header = false;
    for (std::size_t i = 0; i < commands.size(); ++i) {
        const Command& c = commands[i];
        if (c.kind == Kind::By || c.kind == Kind::Dots) {
            // Terminal justifications share the line of their claim.
            if (!out.empty() && out.back() == '\n' && i > 0 && commands[i - 1].is_claim()) out.pop_back(), out += " ";
            else out += std::string(2 * depth, ' ');
            out += pretty(c) + "\n";
            continue;
        }
        if (c.kind == Kind::Qed) --depth;
        if (c.kind == Kind::Item && i > 0) out += "\n";
        int indent = c.kind == Kind::Next ? depth - 1 : depth;
        out += std::string(2 * std::max(indent, 0), ' ') + pretty(c) + "\n";
        if (c.kind == Kind::Theory) {
            out += "begin\n";
            header = true;
        }
        if (c.kind == Kind::Proof) ++depth;
    }
    if (header) out += "\nend\n";
    return out;
}

std::string pretty(const Script& s) { return pretty(flatten(s)); }

nlohmann::json to_json(const Script& s, bool with_spans) { return JsonWriter(with_spans).script(s); }

ScriptShape shape(const Item& item) {
    ScriptShape out;
    shape_of(item.just, 0, out);
    return out;
}

}  // namespace mhl::script
