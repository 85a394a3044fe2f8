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

#ifndef MHL_SCRIPT_ELABORATE_HPP
#define MHL_SCRIPT_ELABORATE_HPP

#include <map>
#include <optional>
#include <string>
#include <variant>

#include "mhl/fol/formula.hpp"
#include "mhl/kernel/theory.hpp"
#include "mhl/script/preterm.hpp"
#include "mhl/syntax/term.hpp"

namespace mhl::script {

using syntax::Term;

// What names mean while elaborating. Binder-bound names win over `fixed`
// variables, which win over constants of the theory; anything else becomes
// a new free variable whose type is inferred.
struct ElabContext {
    const kernel::Theory* theory = nullptr;
    std::map<std::string, Type> fixed;
    std::map<std::string, Term> abbrevs;  // ?name, already elaborated
    bool allow_new_frees = true;
};

// Type inference by unification. Type variables written by the user ('a)
// and those in `fixed` types are rigid. Unconstrained types default to fresh
// type variables. Errors are ParseErrors positioned at the offending
// subterm.
Term elaborate(const PreTerm& t, const ElabContext& ctx, const std::optional<Type>& expected = std::nullopt);

// parse_preterm + elaborate at type bool.
Term parse_formula(std::string_view text, const ElabContext& ctx, const SourceSpan& origin = {});
Term parse_term(std::string_view text, const ElabContext& ctx, const SourceSpan& origin = {});

enum class Profile { HOL, FOL };

// Shared entry point for both concrete syntaxes.
std::variant<Term, fol::FolFormula> parse_formula(std::string_view text, Profile profile, const ElabContext& ctx,
                                                  const SourceSpan& origin = {});

}  // namespace mhl::script

#endif
