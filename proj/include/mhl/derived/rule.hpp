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

#ifndef MHL_DERIVED_RULE_HPP
#define MHL_DERIVED_RULE_HPP

#include <set>
#include <string>
#include <vector>

#include "mhl/derived/match.hpp"
#include "mhl/derived/theories.hpp"

namespace mhl::derived {

// How a premise is discharged when the rule is used backwards: the subproof
// fixes `params` variables and assumes `assms` formulas, e.g. Ex_E's second
// premise `∀x. ?P x ⟶ ?q` has one of each.
struct PremiseShape {
    int params = 0;
    int assms = 0;
};

enum class RuleKind { Intro, Elim, Other };

// A rule in hypothesis form: `thm` has exactly the premises as hypotheses.
// Free variables of the conclusion and premises are schematic, and so are
// type variables whose name starts with '?'.
struct Rule {
    std::string name;
    Thm thm;
    std::vector<Term> premises;
    std::vector<PremiseShape> shapes;
    GateSet required;
    RuleKind kind = RuleKind::Other;
    std::string doc;

    const Term& concl() const { return thm.concl(); }
    // Schematic variables in order of first occurrence (premises, then
    // conclusion); the order used by positional instantiation R[t1, t2].
    std::vector<Term> vars() const;
    std::set<Term> schematic() const;
    // "⟦A; B⟧ ⟹ C"
    std::string statement() const;
};

// Build a Rule from a theorem whose hypotheses are all listed in `premises`.
// Type variables are renamed to their schematic '?' form.
Rule make_rule(const Theory& thy, std::string name, const Thm& thm, std::vector<Term> premises,
               std::vector<PremiseShape> shapes, GateSet required, RuleKind kind, std::string doc = {});

// A closed theorem used as a rule: all its free variables become schematic.
Rule theorem_rule(const Theory& thy, const std::string& name, const Thm& thm);

// Instantiated premises and conclusion (normalized).
struct RuleInstance {
    std::vector<Term> premises;
    Term concl;
};
RuleInstance instance_of(const Rule& r, const Instantiation& inst);

// Match the conclusion against `concl_target` (if given) and premise i
// against each (i, target). The rule's variables are renamed apart
// internally, so targets and seed values may reuse its variable names.
std::optional<Instantiation> match_rule(const Rule& r, const std::vector<std::pair<std::size_t, Term>>& premise_targets,
                                        const std::optional<Term>& concl_target, const Instantiation& seed = {});

// Kernel-checked use of a rule: facts[i] must prove the i-th instantiated
// premise. Result hypotheses are the union of the facts' hypotheses.
Thm apply_rule(const Theory& thy, const Rule& r, const Instantiation& inst, const std::vector<Thm>& facts);

// Instance of the rule with its premises as hypotheses.
Thm instantiate_rule(const Theory& thy, const Rule& r, const Instantiation& inst);

// Instantiation from explicit terms for variables named by `names` (without
// '?'); types are inferred by matching the variable types.
Instantiation explicit_instantiation(const Theory& thy, const Rule& r,
                                     const std::vector<std::pair<std::string, Term>>& named);

}  // namespace mhl::derived

#endif
