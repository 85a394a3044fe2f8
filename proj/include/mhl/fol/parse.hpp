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

#ifndef MHL_FOL_PARSE_HPP
#define MHL_FOL_PARSE_HPP

#include <string>
#include <string_view>

#include "mhl/error.hpp"
#include "mhl/fol/formula.hpp"

namespace mhl::fol {

// FOL profile of the formula syntax. Accepts ⊥ ⊤ ¬ ∧ ∨ ⟶ ⟷ ∀ ∃ and the ASCII
// spellings False True ~ & | --> <-> ALL EX. Derived connectives are expanded
// into ⊥/⟶/∀. Unbound identifiers in term position are constants; `#n`
// denotes a loose index. Throws ParseError.
FolFormula parse_formula(std::string_view text, SourceSpan origin = {});
FolTerm parse_term(std::string_view text, SourceSpan origin = {});

}  // namespace mhl::fol

#endif
