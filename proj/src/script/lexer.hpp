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

#ifndef MHL_SCRIPT_LEXER_HPP
#define MHL_SCRIPT_LEXER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "mhl/error.hpp"

namespace mhl::script::detail {

// Position tracking over UTF-8 text; columns count code points.
class Cursor {
public:
    Cursor(std::string_view text, const SourceSpan& origin);

    bool done() const { return pos_ >= text_.size(); }
    char peek(std::size_t ahead = 0) const { return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0'; }
    bool starts_with(std::string_view s) const { return text_.substr(pos_).starts_with(s); }
    std::string_view rest() const { return text_.substr(pos_); }
    std::size_t offset() const { return pos_; }
    void advance(std::size_t bytes);
    int line() const { return line_; }
    int column() const { return column_; }
    SourceSpan here() const;
    SourceSpan span_from(int line, int column) const;
    const std::string& file() const { return file_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int line_;
    int column_;
    std::string file_;
};

struct TermToken {
    enum class Kind { Ident, TypeVar, Symbol, End };
    Kind kind;
    std::string text;  // symbols are normalized to their canonical spelling
    SourceSpan span;
};

std::vector<TermToken> lex_term(std::string_view text, const SourceSpan& origin);

// Tokens of the proof-script layer. Formulas stay opaque here: a Text token
// carries the raw contents of "..." or ‹...› and the span of those contents,
// so the term parser can report positions inside the script.
struct ScriptToken {
    enum class Kind { Word, Abbrev, Text, Symbol, End };
    Kind kind;
    std::string text;
    SourceSpan span;
    SourceSpan inner;  // Text only
    bool cartouche = false;
};

std::vector<ScriptToken> lex_script(std::string_view text, const std::string& file);

bool is_ident_start(char c);
bool is_ident_char(char c);

}  // namespace mhl::script::detail

#endif
