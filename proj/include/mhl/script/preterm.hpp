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

#ifndef MHL_SCRIPT_PRETERM_HPP
#define MHL_SCRIPT_PRETERM_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mhl/error.hpp"
#include "mhl/syntax/type.hpp"

namespace mhl::script {

using syntax::Type;

// Untyped surface syntax of a HOL term, as written. Operators are stored in
// their Unicode spelling whatever the input used; parentheses are not
// represented. Spans are carried along but ignored by ==.
struct PreTerm {
    enum class Kind : unsigned char { Ident, App, Binder, Infix, Not, Annot, Collect };

    struct Var {
        std::string name;
        std::optional<Type> type;
        friend bool operator==(const Var& a, const Var& b) { return a.name == b.name && a.type == b.type; }
    };

    Kind kind = Kind::Ident;
    std::string name;  // Ident: identifier, ?abbrev, ⊥ or ⊤; Binder/Infix: operator
    std::vector<Var> vars;                   // Binder (one or more), Collect (one)
    std::vector<std::shared_ptr<const PreTerm>> args;  // App: fun, arg; Infix: lhs, rhs; others: body
    std::optional<Type> type;                // Annot
    SourceSpan span;

    const PreTerm& arg(std::size_t i) const { return *args[i]; }
};

using PreTermPtr = std::shared_ptr<const PreTerm>;

bool operator==(const PreTerm& a, const PreTerm& b);
inline bool operator!=(const PreTerm& a, const PreTerm& b) { return !(a == b); }

namespace pre {
PreTermPtr ident(std::string name, SourceSpan span = {});
PreTermPtr app(PreTermPtr f, PreTermPtr a, SourceSpan span = {});
PreTermPtr binder(std::string op, std::vector<PreTerm::Var> vars, PreTermPtr body, SourceSpan span = {});
PreTermPtr infix(std::string op, PreTermPtr l, PreTermPtr r, SourceSpan span = {});
PreTermPtr negation(PreTermPtr a, SourceSpan span = {});
PreTermPtr annot(PreTermPtr t, Type ty, SourceSpan span = {});
PreTermPtr collect(PreTerm::Var v, PreTermPtr body, SourceSpan span = {});
}  // namespace pre

// Binders: ∀ (ALL, !), ∃ (EX), λ (%), SOME; infix ⟷ (<->) ⟶ (-->, ->)
// ∨ (|, \/) ∧ (&, /\) = ∈ (:); prefix ¬ (~); constants ⊥ (False is a plain
// identifier) and ⊤. Lowest to highest: binders, ⟷, ⟶, ∨, ∧, ¬, = ∈,
// application. All arrows and ∨ ∧ associate to the right; = and ∈ do not
// associate. `origin` positions diagnostics for text cut out of a script.
PreTermPtr parse_preterm(std::string_view text, const SourceSpan& origin = {});
Type parse_type(std::string_view text, const SourceSpan& origin = {});

// Minimal-parenthesis rendering; parse_preterm(pretty(t)) == t.
std::string pretty(const PreTerm& t);

}  // namespace mhl::script

#endif
