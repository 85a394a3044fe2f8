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

#ifndef MHL_SYNTAX_PRETTY_HPP
#define MHL_SYNTAX_PRETTY_HPP

#include <string>

#include "mhl/syntax/term.hpp"

namespace mhl::syntax {

struct PrettyOptions {
    // Print boolean equations with `=` instead of `⟷` (goal display).
    bool iff_as_eq = false;
    // Annotate free variables, binders and bare constants with their types so
    // the parser reconstructs the exact term.
    bool annotate_types = false;
    // Show `All P` / `Ex P` / `Eps P` / `Collect P` with an explicit binder.
    bool eta_expand = false;
};

// Concrete syntax shared with the script parser. Loose bound indices print as
// `#i`.
std::string pretty(const Term& t, const PrettyOptions& opts = {});
std::string pretty_type(const Type& t);

}  // namespace mhl::syntax

#endif
