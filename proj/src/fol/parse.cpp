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

#include "mhl/fol/parse.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace mhl::fol {

namespace {

enum class Tok { Ident, Index, Sym, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

// Canonical spellings for symbol tokens.
struct Spelling {
    const char* text;
    const char* canon;
};

constexpr Spelling kSymbols[] = {
    {"⟷", "<->"}, {"<->", "<->"}, {"⟶", "->"}, {"-->", "->"}, {"->", "->"}, {"→", "->"},
    {"∀", "ALL"}, {"∃", "EX"},    {"¬", "~"},  {"~", "~"},     {"∧", "&"},  {"&", "&"},
    {"∨", "|"},   {"|", "|"},     {"⊥", "False"}, {"⊤", "True"}, {"(", "("}, {")", ")"},
    {".", "."},
};

bool ident_start(unsigned char c) { return std::isalpha(c) || c == '_'; }
bool ident_char(unsigned char c) { return std::isalnum(c) || c == '_' || c == '\''; }

std::vector<Token> lex(std::string_view s, const SourceSpan& origin) {
    std::vector<Token> out;
    int line = origin.valid() ? origin.line : 1;
    int col = origin.valid() ? origin.column : 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            unsigned char c = static_cast<unsigned char>(s[i]);
            if (c == '\n') {
                ++line;
                col = 1;
            } else if ((c & 0xC0) != 0x80) {
                ++col;
            }
        }
    };
    while (i < s.size()) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (std::isspace(c)) {
            advance(1);
            continue;
        }
        int l = line, cc = col;
        if (ident_start(c)) {
            std::size_t j = i;
            while (j < s.size() && ident_char(static_cast<unsigned char>(s[j]))) ++j;
            std::string word(s.substr(i, j - i));
            advance(j - i);
            if (word == "ALL" || word == "EX" || word == "False" || word == "True")
                out.push_back({Tok::Sym, word, l, cc});
            else
                out.push_back({Tok::Ident, word, l, cc});
            continue;
        }
        if (c == '#') {
            std::size_t j = i + 1;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j == i + 1) throw ParseError("expected digits after '#'", {origin.file, l, cc, l, cc});
            std::string digits(s.substr(i + 1, j - i - 1));
            advance(j - i);
            out.push_back({Tok::Index, digits, l, cc});
            continue;
        }
        bool matched = false;
        for (const Spelling& sp : kSymbols) {
            std::string_view t(sp.text);
            if (s.substr(i, t.size()) == t) {
                advance(t.size());
                out.push_back({Tok::Sym, sp.canon, l, cc});
                matched = true;
                break;
            }
        }
        if (!matched) throw ParseError("unexpected character", {origin.file, l, cc, l, cc});
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

class Parser {
public:
    Parser(std::string_view text, SourceSpan origin) : origin_(std::move(origin)), toks_(lex(text, origin_)) {}

    FolFormula formula_eof() {
        FolFormula f = formula();
        expect_end();
        return f;
    }

    FolTerm term_eof() {
        FolTerm t = term();
        expect_end();
        return t;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    bool at_sym(const char* s) const { return peek().kind == Tok::Sym && peek().text == s; }

    [[noreturn]] void fail(const std::string& msg) const {
        const Token& t = peek();
        throw ParseError(msg, {origin_.file, t.line, t.column, t.line, t.column});
    }

    void expect_sym(const char* s) {
        if (!at_sym(s)) fail(std::string("expected '") + s + "'");
        ++pos_;
    }

    void expect_end() {
        if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    }

    FolFormula formula() {
        if (at_sym("ALL") || at_sym("EX")) return binder();
        return iff();
    }

    FolFormula binder() {
        bool all = at_sym("ALL");
        ++pos_;
        std::vector<std::string> names;
        while (peek().kind == Tok::Ident) names.push_back(toks_[pos_++].text);
        if (names.empty()) fail("expected a bound variable");
        expect_sym(".");
        for (const auto& n : names) scope_.push_back(n);
        FolFormula body = formula();
        scope_.resize(scope_.size() - names.size());
        for (std::size_t k = 0; k < names.size(); ++k) body = all ? FolFormula::uni(body) : exists(body);
        return body;
    }

    FolFormula iff() {
        FolFormula lhs = imp();
        if (at_sym("<->")) {
            ++pos_;
            FolFormula rhs = at_sym("ALL") || at_sym("EX") ? binder() : iff();
            return conj(FolFormula::imp(lhs, rhs), FolFormula::imp(rhs, lhs));
        }
        return lhs;
    }

    FolFormula imp() {
        FolFormula lhs = disj_();
        if (at_sym("->")) {
            ++pos_;
            FolFormula rhs = at_sym("ALL") || at_sym("EX") ? binder() : imp();
            return FolFormula::imp(lhs, rhs);
        }
        return lhs;
    }

    FolFormula disj_() {
        FolFormula lhs = conj_();
        while (at_sym("|")) {
            ++pos_;
            lhs = disj(lhs, conj_());
        }
        return lhs;
    }

    FolFormula conj_() {
        FolFormula lhs = unary();
        while (at_sym("&")) {
            ++pos_;
            lhs = conj(lhs, unary());
        }
        return lhs;
    }

    FolFormula unary() {
        if (at_sym("~")) {
            ++pos_;
            return neg(unary());
        }
        if (at_sym("ALL") || at_sym("EX")) return binder();
        return atom();
    }

    FolFormula atom() {
        if (at_sym("False")) {
            ++pos_;
            return FolFormula::falsity();
        }
        if (at_sym("True")) {
            ++pos_;
            return truth();
        }
        if (at_sym("(")) {
            ++pos_;
            FolFormula f = formula();
            expect_sym(")");
            return f;
        }
        if (peek().kind != Tok::Ident) fail("expected a formula");
        std::string name = toks_[pos_++].text;
        if (bound_index(name)) fail("bound variable " + name + " used as a predicate");
        std::vector<FolTerm> args;
        while (starts_arg()) args.push_back(arg());
        return FolFormula::pre(std::move(name), std::move(args));
    }

    bool starts_arg() const {
        return peek().kind == Tok::Ident || peek().kind == Tok::Index || at_sym("(");
    }

    std::optional<std::uint32_t> bound_index(const std::string& name) const {
        for (std::size_t k = scope_.size(); k-- > 0;)
            if (scope_[k] == name) return static_cast<std::uint32_t>(scope_.size() - 1 - k);
        return std::nullopt;
    }

    FolTerm arg() {
        if (at_sym("(")) {
            ++pos_;
            FolTerm t = term();
            expect_sym(")");
            return t;
        }
        if (peek().kind == Tok::Index) {
            auto k = static_cast<std::uint32_t>(std::stoul(toks_[pos_++].text));
            return FolTerm::var(k + static_cast<std::uint32_t>(scope_.size()));
        }
        std::string name = toks_[pos_++].text;
        if (auto b = bound_index(name)) return FolTerm::var(*b);
        return FolTerm::fun(std::move(name));
    }

    FolTerm term() {
        if (peek().kind != Tok::Ident) return arg();
        std::string name = toks_[pos_].text;
        if (bound_index(name)) return arg();
        ++pos_;
        std::vector<FolTerm> args;
        while (starts_arg()) args.push_back(arg());
        return FolTerm::fun(std::move(name), std::move(args));
    }

    SourceSpan origin_;
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::vector<std::string> scope_;
};

}  // namespace

FolFormula parse_formula(std::string_view text, SourceSpan origin) {
    return Parser(text, std::move(origin)).formula_eof();
}

FolTerm parse_term(std::string_view text, SourceSpan origin) {
    return Parser(text, std::move(origin)).term_eof();
}

}  // namespace mhl::fol
