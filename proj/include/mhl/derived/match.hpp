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

#ifndef MHL_DERIVED_MATCH_HPP
#define MHL_DERIVED_MATCH_HPP

#include <optional>
#include <set>
#include <vector>

#include "mhl/syntax/term.hpp"

namespace mhl::derived {

using syntax::Term;
using syntax::TermSubst;
using syntax::TypeSubst;

struct Instantiation {
    TypeSubst types;
    TermSubst terms;  // keys are the pattern variables as they occur in the pattern

    std::optional<Term> lookup(const Term& var) const;
};

// One-way higher-order pattern matching. Pattern variables are the members of
// `schematic` (Free terms) and the type variables named in `schematic_types`. A pattern variable applied to
// distinct bound variables is solved by abstraction; other flexible
// applications are retried once their head is known. If the head never
// becomes known but its arguments do, every occurrence of the arguments in
// the target is abstracted (one solution among several).
// Targets must be beta-eta normal and must not mention pattern variables.
class Matcher {
public:
    Matcher(std::set<Term> schematic, std::set<std::string> schematic_types)
        : schematic_(std::move(schematic)), schematic_types_(std::move(schematic_types)) {}

    // Add a constraint; returns false on an immediate clash.
    bool add(const Term& pattern, const Term& target);
    // Solve postponed constraints; false if a clash occurs or some
    // constraint stays flexible.
    bool solve();

    const Instantiation& result() const { return inst_; }
    Instantiation& result() { return inst_; }
    // Pattern instantiated with the current solution, normalized.
    Term apply(const Term& pattern) const;

private:
    struct Pending {
        Term pattern;
        Term target;
        std::vector<syntax::Type> binders;  // innermost last
    };

    bool match(const Term& p, const Term& t, std::vector<syntax::Type>& binders);
    bool abstract_occurrences(const Pending& w);
    bool is_schematic(const Term& t) const { return t.is_free() && schematic_.count(t) != 0; }
    bool match_type(const syntax::Type& p, const syntax::Type& t);

    std::set<Term> schematic_;
    std::set<std::string> schematic_types_;
    Instantiation inst_;
    std::vector<Pending> pending_;
};

// Convenience: match a list of (pattern, target) pairs at once.
std::optional<Instantiation> match_all(const std::set<Term>& schematic, const std::set<std::string>& schematic_types,
                                       const std::vector<std::pair<Term, Term>>& problems,
                                       const Instantiation& seed = {});

}  // namespace mhl::derived

#endif
