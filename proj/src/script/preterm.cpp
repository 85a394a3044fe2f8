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

#include "mhl/script/preterm.hpp"

#include "lexer.hpp"
#include "mhl/syntax/pretty.hpp"

namespace mhl::script {

using detail::TermToken;

bool operator==(const PreTerm& a, const PreTerm& b) {
    if (&a == &b) return true;
    if (a.kind != b.kind || a.name != b.name || a.vars != b.vars || a.type != b.type ||
        a.args.size() != b.args.size())
        return false;
    for (std::size_t i = 0; i < a.args.size(); ++i)
        if (!(*a.args[i] == *b.args[i])) return false;
    return true;
}

namespace pre {

namespace {
PreTermPtr make(PreTerm t) { return std::make_shared<const PreTerm>(std::move(t)); }
}  // namespace

PreTermPtr ident(std::string name, SourceSpan span) {
    PreTerm t;
    t.kind = PreTerm::Kind::Ident;
    t.name = std::move(name);
    t.span = std::move(span);
    return make(std::move(t));
}

PreTermPtr app(PreTermPtr f, PreTermPtr a, SourceSpan span) {
    PreTerm t;
    t.kind = PreTerm::Kind::App;
    t.args = {std::move(f), std::move(a)};
    t.span = std::move(span);
    return make(std::move(t));
}

PreTermPtr binder(std::string op, std::vector<PreTerm::Var> vars, PreTermPtr body, SourceSpan span) {
    PreTerm t;
    t.kind = PreTerm::Kind::Binder;
    t.name = std::move(op);
    t.vars = std::move(vars);
    t.args = {std::move(body)};
    t.span = std::move(span);
    return make(std::move(t));
}

PreTermPtr infix(std::string op, PreTermPtr l, PreTermPtr r, SourceSpan span) {
    PreTerm t;
    t.kind = PreTerm::Kind::Infix;
    t.name = std::move(op);
    t.args = {std::move(l), std::move(r)};
    t.span = std::move(span);
    return make(std::move(t));
}

PreTermPtr negation(PreTermPtr a, SourceSpan span) {
    PreTerm t;
    t.kind = PreTerm::Kind::Not;
    t.args = {std::move(a)};
    t.span = std::move(span);
    return make(std::move(t));
}

PreTermPtr annot(PreTermPtr body, Type ty, SourceSpan span) {
    PreTerm t;
    t.kind = PreTerm::Kind::Annot;
    t.args = {std::move(body)};
    t.type = std::move(ty);
    t.span = std::move(span);
    return make(std::move(t));
}

PreTermPtr collect(PreTerm::Var v, PreTermPtr body, SourceSpan span) {
    PreTerm t;
    t.kind = PreTerm::Kind::Collect;
    t.vars = {std::move(v)};
    t.args = {std::move(body)};
    t.span = std::move(span);
    return make(std::move(t));
}

}  // namespace pre

namespace {

constexpr int kBinder = 0;
constexpr int kNot = 50;
constexpr int kRel = 60;
constexpr int kApp = 100;

struct InfixInfo {
    int prec;
    bool right;
};

std::optional<InfixInfo> infix_info(const std::string& op) {
    if (op == "⟷") return InfixInfo{10, true};
    if (op == "⟶") return InfixInfo{20, true};
    if (op == "∨") return InfixInfo{30, true};
    if (op == "∧") return InfixInfo{40, true};
    if (op == "=" || op == "∈") return InfixInfo{kRel, false};
    return std::nullopt;
}

bool is_binder(const std::string& s) { return s == "∀" || s == "∃" || s == "λ" || s == "SOME"; }

SourceSpan join(const SourceSpan& a, const SourceSpan& b) {
    SourceSpan s = a;
    s.end_line = b.end_line;
    s.end_column = b.end_column;
    return s;
}

class Parser {
public:
    Parser(std::string_view text, const SourceSpan& origin) : toks_(detail::lex_term(text, origin)) {}

    PreTermPtr parse_all() {
        PreTermPtr t = expr(kBinder);
        if (peek().kind != TermToken::Kind::End) fail("unexpected '" + peek().text + "'");
        return t;
    }

    Type parse_type_all() {
        Type t = type();
        if (peek().kind != TermToken::Kind::End) fail("unexpected '" + peek().text + "' in type");
        return t;
    }

private:
    const TermToken& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
    const TermToken& next() {
        const TermToken& t = peek();
        if (pos_ < toks_.size() - 1) ++pos_;
        return t;
    }
    bool is_sym(const std::string& s, std::size_t k = 0) const {
        return peek(k).kind == TermToken::Kind::Symbol && peek(k).text == s;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        if (peek().kind == TermToken::Kind::End) throw ParseError(msg == "unexpected ''" ? "unexpected end of input" : msg, peek().span);
        throw ParseError(msg, peek().span);
    }
    void expect(const std::string& s) {
        if (!is_sym(s)) fail("expected '" + s + "'" + (peek().kind == TermToken::Kind::End ? " at end of input" : " before '" + peek().text + "'"));
        next();
    }

    PreTermPtr expr(int min_prec) {
        PreTermPtr lhs = prefix();
        while (peek().kind == TermToken::Kind::Symbol) {
            auto info = infix_info(peek().text);
            if (!info || info->prec < min_prec) break;
            std::string op = next().text;
            PreTermPtr rhs = expr(info->right ? info->prec : info->prec + 1);
            lhs = pre::infix(op, lhs, rhs, join(lhs->span, rhs->span));
            if (!info->right && peek().kind == TermToken::Kind::Symbol) {
                auto again = infix_info(peek().text);
                if (again && again->prec == info->prec) fail("'" + peek().text + "' does not associate; add parentheses");
            }
        }
        return lhs;
    }

    PreTermPtr prefix() {
        const TermToken& t = peek();
        if (t.kind == TermToken::Kind::Symbol && t.text == "¬") {
            SourceSpan start = next().span;
            PreTermPtr a = expr(kNot);
            return pre::negation(a, join(start, a->span));
        }
        if (t.kind == TermToken::Kind::Symbol && is_binder(t.text)) {
            SourceSpan start = t.span;
            std::string op = next().text;
            std::vector<PreTerm::Var> vars = binder_vars();
            PreTermPtr body = expr(kBinder);
            return pre::binder(op, std::move(vars), body, join(start, body->span));
        }
        return application();
    }

    std::vector<PreTerm::Var> binder_vars() {
        std::vector<PreTerm::Var> vars;
        if (peek().kind == TermToken::Kind::Ident && is_sym("::", 1)) {
            std::string name = next().text;
            next();
            Type ty = type();
            expect(".");
            return {{name, ty}};
        }
        while (!is_sym(".")) {
            if (peek().kind == TermToken::Kind::Ident && peek().text[0] != '?') {
                vars.push_back({next().text, std::nullopt});
            } else if (is_sym("(")) {
                next();
                if (peek().kind != TermToken::Kind::Ident) fail("expected a bound variable name");
                std::string name = next().text;
                expect("::");
                Type ty = type();
                expect(")");
                vars.push_back({name, ty});
            } else {
                fail("expected a bound variable name");
            }
        }
        if (vars.empty()) fail("binder without variables");
        next();
        return vars;
    }

    bool atom_start() const {
        const TermToken& t = peek();
        if (t.kind == TermToken::Kind::Ident) return true;
        return t.kind == TermToken::Kind::Symbol && (t.text == "(" || t.text == "{" || t.text == "⊥" || t.text == "⊤");
    }

    PreTermPtr application() {
        if (!atom_start()) fail(peek().kind == TermToken::Kind::End ? "unexpected end of input" : "unexpected '" + peek().text + "'");
        PreTermPtr f = atom();
        while (atom_start()) {
            PreTermPtr a = atom();
            f = pre::app(f, a, join(f->span, a->span));
        }
        return f;
    }

    PreTermPtr atom() {
        const TermToken& t = peek();
        if (t.kind == TermToken::Kind::Ident || t.text == "⊥" || t.text == "⊤") {
            const TermToken& tok = next();
            return pre::ident(tok.text, tok.span);
        }
        if (t.text == "(") {
            SourceSpan start = next().span;
            PreTermPtr inner = expr(kBinder);
            if (is_sym("::")) {
                next();
                Type ty = type();
                SourceSpan end = peek().span;
                expect(")");
                return pre::annot(inner, ty, join(start, end));
            }
            expect(")");
            return inner;
        }
        // { x. body }
        SourceSpan start = next().span;
        if (peek().kind != TermToken::Kind::Ident) fail("expected a variable after '{'");
        PreTerm::Var v{next().text, std::nullopt};
        if (is_sym("::")) {
            next();
            v.type = type();
        }
        expect(".");
        PreTermPtr body = expr(kBinder);
        SourceSpan end = peek().span;
        expect("}");
        return pre::collect(v, body, join(start, end));
    }

    // type := postfix ('⇒' type)?
    Type type() {
        Type t = type_postfix();
        if (is_sym("⇒")) {
            next();
            return Type::fun(t, type());
        }
        return t;
    }

    Type type_postfix() {
        std::vector<Type> args;
        if (peek().kind == TermToken::Kind::TypeVar) {
            args.push_back(Type::var(next().text));
        } else if (peek().kind == TermToken::Kind::Ident) {
            args.push_back(Type::con(next().text));
        } else if (is_sym("(")) {
            next();
            args.push_back(type());
            while (is_sym(",")) {
                next();
                args.push_back(type());
            }
            expect(")");
            if (args.size() > 1 && peek().kind != TermToken::Kind::Ident) fail("expected a type constructor after a type argument list");
        } else {
            fail("expected a type");
        }
        while (peek().kind == TermToken::Kind::Ident) {
            std::string con = next().text;
            args = {Type::con(con, std::move(args))};
        }
        return args[0];
    }

    std::vector<TermToken> toks_;
    std::size_t pos_ = 0;
};

std::string paren(const std::string& s, bool p) { return p ? "(" + s + ")" : s; }

std::string var_list(const std::vector<PreTerm::Var>& vars) {
    if (vars.size() == 1 && vars[0].type) return vars[0].name + " :: " + syntax::pretty_type(*vars[0].type);
    std::string out;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (i) out += " ";
        out += vars[i].type ? "(" + vars[i].name + " :: " + syntax::pretty_type(*vars[i].type) + ")" : vars[i].name;
    }
    return out;
}

std::string render(const PreTerm& t, int ctx) {
    switch (t.kind) {
        case PreTerm::Kind::Ident:
            return t.name;
        case PreTerm::Kind::App:
            return paren(render(t.arg(0), kApp) + " " + render(t.arg(1), kApp + 1), ctx > kApp);
        case PreTerm::Kind::Infix: {
            auto info = infix_info(t.name);
            int p = info->prec;
            std::string l = render(t.arg(0), p + 1);
            std::string r = render(t.arg(1), info->right ? p : p + 1);
            return paren(l + " " + t.name + " " + r, ctx > p);
        }
        case PreTerm::Kind::Not:
            return paren("¬ " + render(t.arg(0), kNot), ctx > kNot);
        case PreTerm::Kind::Binder: {
            std::string sep = t.name == "SOME" ? " " : "";
            return paren(t.name + sep + var_list(t.vars) + ". " + render(t.arg(0), kBinder), ctx > kBinder);
        }
        case PreTerm::Kind::Annot:
            return "(" + render(t.arg(0), kBinder) + " :: " + syntax::pretty_type(*t.type) + ")";
        case PreTerm::Kind::Collect:
            return "{" + var_list(t.vars) + ". " + render(t.arg(0), kBinder) + "}";
    }
    return "?";
}

}  // namespace

PreTermPtr parse_preterm(std::string_view text, const SourceSpan& origin) { return Parser(text, origin).parse_all(); }

Type parse_type(std::string_view text, const SourceSpan& origin) { return Parser(text, origin).parse_type_all(); }

std::string pretty(const PreTerm& t) { return render(t, kBinder); }


}  // namespace mhl::script
