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

#include "lexer.hpp"

#include <array>
#include <utility>

namespace mhl::script::detail {

Cursor::Cursor(std::string_view text, const SourceSpan& origin)
    : text_(text), line_(origin.valid() ? origin.line : 1), column_(origin.valid() ? origin.column : 1),
      file_(origin.file) {}

void Cursor::advance(std::size_t bytes) {
    std::size_t end = std::min(text_.size(), pos_ + bytes);
    for (; pos_ < end; ++pos_) {
        unsigned char c = static_cast<unsigned char>(text_[pos_]);
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else if ((c & 0xc0) != 0x80) {
            ++column_;
        }
    }
}

SourceSpan Cursor::here() const { return SourceSpan{file_, line_, column_, line_, column_}; }

SourceSpan Cursor::span_from(int line, int column) const { return SourceSpan{file_, line, column, line_, column_}; }

bool is_ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9') || c == '\''; }

namespace {

// Spelling -> canonical symbol, longest spellings first.
const std::array<std::pair<std::string_view, std::string_view>, 31> kSymbols{{
    {"-->", "⟶"}, {"<->", "⟷"}, {"->", "⟶"},  {"::", "::"}, {"=>", "⇒"},  {"/\\", "∧"}, {"\\/", "∨"},
    {"⟶", "⟶"},   {"→", "⟶"},   {"⟷", "⟷"},  {"↔", "⟷"},   {"∀", "∀"},   {"∃", "∃"},   {"λ", "λ"},
    {"¬", "¬"},   {"∧", "∧"},   {"∨", "∨"},  {"⊥", "⊥"},   {"⊤", "⊤"},   {"∈", "∈"},   {"⇒", "⇒"},
    {"(", "("},   {")", ")"},   {"{", "{"},  {"}", "}"},   {".", "."},   {",", ","},   {"=", "="},
    {"&", "∧"},   {"|", "∨"},   {"~", "¬"},
}};

const std::array<std::pair<std::string_view, std::string_view>, 3> kAsciiSymbols{{
    {"%", "λ"}, {"!", "∀"}, {":", "∈"},
}};

}  // namespace

std::vector<TermToken> lex_term(std::string_view text, const SourceSpan& origin) {
    Cursor cur(text, origin);
    std::vector<TermToken> out;
    while (true) {
        while (!cur.done() && (cur.peek() == ' ' || cur.peek() == '\t' || cur.peek() == '\n' || cur.peek() == '\r'))
            cur.advance(1);
        int line = cur.line(), col = cur.column();
        if (cur.done()) {
            out.push_back({TermToken::Kind::End, "", cur.here()});
            return out;
        }
        char c = cur.peek();
        if (is_ident_start(c) || (c == '?' && is_ident_start(cur.peek(1)))) {
            std::size_t n = 1;
            while (is_ident_char(cur.peek(n))) ++n;
            std::string word(cur.rest().substr(0, n));
            cur.advance(n);
            TermToken::Kind kind = TermToken::Kind::Ident;
            if (word == "ALL") word = "∀", kind = TermToken::Kind::Symbol;
            else if (word == "EX") word = "∃", kind = TermToken::Kind::Symbol;
            else if (word == "SOME") kind = TermToken::Kind::Symbol;
            out.push_back({kind, word, cur.span_from(line, col)});
            continue;
        }
        if (c == '\'' && is_ident_start(cur.peek(1))) {
            std::size_t n = 1;
            while (is_ident_char(cur.peek(n))) ++n;
            std::string name(cur.rest().substr(1, n - 1));
            cur.advance(n);
            out.push_back({TermToken::Kind::TypeVar, name, cur.span_from(line, col)});
            continue;
        }
        bool matched = false;
        for (const auto& [spelling, canon] : kSymbols) {
            if (cur.starts_with(spelling)) {
                cur.advance(spelling.size());
                out.push_back({TermToken::Kind::Symbol, std::string(canon), cur.span_from(line, col)});
                matched = true;
                break;
            }
        }
        if (!matched) {
            for (const auto& [spelling, canon] : kAsciiSymbols) {
                if (cur.starts_with(spelling)) {
                    cur.advance(spelling.size());
                    out.push_back({TermToken::Kind::Symbol, std::string(canon), cur.span_from(line, col)});
                    matched = true;
                    break;
                }
            }
        }
        if (!matched) {
            std::size_t n = 1;
            while (n < 4 && (static_cast<unsigned char>(cur.peek(n)) & 0xc0) == 0x80) ++n;
            throw ParseError("unexpected character '" + std::string(cur.rest().substr(0, n)) + "'", cur.here());
        }
    }
}

std::vector<ScriptToken> lex_script(std::string_view text, const std::string& file) {
    static constexpr std::string_view kOpen = "‹", kClose = "›";
    Cursor cur(text, SourceSpan{file, 1, 1, 1, 1});
    std::vector<ScriptToken> out;
    while (true) {
        char c = cur.peek();
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            cur.advance(1);
            continue;
        }
        int line = cur.line(), col = cur.column();
        if (cur.done()) {
            out.push_back({ScriptToken::Kind::End, "", cur.here(), {}});
            return out;
        }
        if (cur.starts_with("(*")) {
            int depth = 0;
            while (true) {
                if (cur.done()) throw ParseError("unterminated comment", SourceSpan{file, line, col, line, col + 2});
                if (cur.starts_with("(*")) {
                    ++depth;
                    cur.advance(2);
                } else if (cur.starts_with("*)")) {
                    cur.advance(2);
                    if (--depth == 0) break;
                } else {
                    cur.advance(1);
                }
            }
            continue;
        }
        if (c == '"' || cur.starts_with(kOpen)) {
            bool cart = c != '"';
            std::string_view close = cart ? kClose : "\"";
            cur.advance(cart ? kOpen.size() : 1);
            SourceSpan inner_start = cur.here();
            std::size_t start = cur.offset();
            while (!cur.starts_with(close)) {
                if (cur.done()) throw ParseError(cart ? "unterminated ‹...›" : "unterminated string",
                                                 SourceSpan{file, line, col, line, col + 1});
                cur.advance(1);
            }
            std::size_t end = cur.offset();
            SourceSpan inner = cur.span_from(inner_start.line, inner_start.column);
            cur.advance(close.size());
            ScriptToken tok{ScriptToken::Kind::Text, std::string(text.substr(start, end - start)),
                            cur.span_from(line, col), inner};
            tok.cartouche = cart;
            out.push_back(std::move(tok));
            continue;
        }
        if (is_ident_start(c) || (c == '?' && is_ident_start(cur.peek(1)))) {
            std::size_t n = 1;
            while (is_ident_char(cur.peek(n))) ++n;
            std::string word(cur.rest().substr(0, n));
            cur.advance(n);
            out.push_back({c == '?' ? ScriptToken::Kind::Abbrev : ScriptToken::Kind::Word, word,
                           cur.span_from(line, col), {}});
            continue;
        }
        if (cur.starts_with("⊤") || cur.starts_with("⊥")) {
            std::string word(cur.rest().substr(0, 3));
            cur.advance(3);
            out.push_back({ScriptToken::Kind::Word, word, cur.span_from(line, col), {}});
            continue;
        }
        static constexpr std::string_view kScriptSymbols[] = {"..", "::", ":", "[", "]", ",", "(", ")", "-", ".", "="};
        bool matched = false;
        for (std::string_view sym : kScriptSymbols) {
            if (cur.starts_with(sym)) {
                cur.advance(sym.size());
                out.push_back({ScriptToken::Kind::Symbol, std::string(sym), cur.span_from(line, col), {}});
                matched = true;
                break;
            }
        }
        if (!matched) {
            std::size_t n = 1;
            while (n < 4 && (static_cast<unsigned char>(cur.peek(n)) & 0xc0) == 0x80) ++n;
            throw ParseError("unexpected character '" + std::string(cur.rest().substr(0, n)) + "'", cur.here());
        }
    }
}

}  // namespace mhl::script::detail
