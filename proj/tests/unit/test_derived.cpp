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

#include "doctest.h"
#include "hol_eval.hpp"
#include "mhl/derived/catalog.hpp"
#include "mhl/derived/match.hpp"
#include "mhl/derived/rule.hpp"
#include "mhl/derived/theories.hpp"
#include "mhl/error.hpp"
#include "mhl/syntax/logic.hpp"

using namespace mhl;
using namespace mhl::syntax;
using derived::RuleCatalog;
using kernel::Gate;
using kernel::GateSet;

namespace {

const std::vector<std::string> kIntuitionistic = {
    "Falsity_E", "Neg_I",   "Neg_E",  "Truth_I", "Conj_I", "Conj_E1", "Conj_E2", "Conj_E",
    "Disj_I1",   "Disj_I2", "Disj_E", "Ex_I",    "Ex_E",   "Refl",    "Subst",   "Subst_sym",
    "Sym",       "Trans",   "Imp_I",  "Imp_E",   "Uni_I",  "Uni_E",   "Iff_E1",  "Iff_E2"};
const std::vector<std::string> kClassical = {"Imp_C", "LEM", "classical", "ccontr"};

Term p() { return Term::free("p", Type::boolean()); }
Term q() { return Term::free("q", Type::boolean()); }

}  // namespace

TEST_CASE("intuitionistic rules need only the core gate") {
    RuleCatalog cat(derived::standard_theory());
    for (const auto& name : kIntuitionistic) {
        INFO(name);
        const auto* r = cat.find(name);
        REQUIRE(r != nullptr);
        CHECK(r->thm.gates() == GateSet::core());
        CHECK(r->required == GateSet::core());
        // Hypotheses are exactly the premises.
        std::set<Term> hyps(r->thm.hyps().begin(), r->thm.hyps().end());
        std::set<Term> prems(r->premises.begin(), r->premises.end());
        CHECK(hyps == prems);
    }
}

TEST_CASE("classical rules are unavailable without EXT and CHOICE") {
    RuleCatalog core(derived::standard_theory());
    RuleCatalog ext(derived::standard_theory(GateSet::core() | Gate::Ext));
    for (const auto& name : kClassical) {
        INFO(name);
        CHECK(core.find(name) == nullptr);
        CHECK(ext.find(name) == nullptr);
        CHECK_THROWS(core.derive(name));
    }
}

TEST_CASE("classical rules record EXT and CHOICE") {
    RuleCatalog cat(derived::standard_theory(GateSet::classical()));
    for (const auto& name : kClassical) {
        INFO(name);
        auto th = cat.derive_classical(name);
        CHECK(th.gates().contains(Gate::Ext));
        CHECK(th.gates().contains(Gate::Choice));
        CHECK(th.gates().subset_of(GateSet::classical()));
    }
    CHECK_THROWS(cat.derive_classical("Conj_I"));
    // Iff_I uses extensionality but not choice.
    auto iff = cat.derive("Iff_I");
    CHECK(iff.gates() == (GateSet::core() | Gate::Ext));
}

TEST_CASE("catalog listing marks unavailable rules") {
    RuleCatalog cat(derived::standard_theory());
    bool saw_lem = false;
    for (const auto& e : cat.listing()) {
        if (e.name == "LEM") {
            saw_lem = true;
            CHECK(!e.available);
            CHECK(e.statement.empty());
        }
        if (e.name == "Conj_I") CHECK(e.available);
    }
    CHECK(saw_lem);
    CHECK(cat.listing().size() == RuleCatalog::known().size());
}

TEST_CASE("every rule holds in the two-element standard model") {
    RuleCatalog cat(derived::standard_theory(GateSet::full()));
    testing::HolModel model(2);
    int checked = 0;
    for (const auto& r : cat.rules()) {
        INFO(r.name);
        try {
            auto n = model.valid(r.thm.hyps(), r.thm.concl());
            CHECK(n.has_value());
            ++checked;
        } catch (const testing::Unsupported&) {
        }
    }
    // Everything except choice, infinity and comprehension.
    CHECK(checked >= static_cast<int>(cat.rules().size()) - 4);
}

TEST_CASE("bi-implication elimination closes the first branch") {
    auto thy = derived::standard_theory();
    RuleCatalog cat(thy);
    const auto& rule = cat.get("Iff_E1");
    Term iff = mk_eq(p(), q());
    auto inst = derived::match_rule(rule, {{0, iff}}, q());
    REQUIRE(inst);
    derived::Prover pr(thy);
    auto th = derived::apply_rule(thy, rule, *inst, {pr.assume(iff), pr.assume(p())});
    CHECK(th.concl() == q());
    std::set<Term> hyps(th.hyps().begin(), th.hyps().end());
    CHECK(hyps == std::set<Term>{iff, p()});
    // Wrong fact for the second premise.
    CHECK_THROWS(derived::apply_rule(thy, rule, *inst, {pr.assume(iff), pr.assume(q())}));
}

TEST_CASE("matching") {
    RuleCatalog cat(derived::standard_theory());
    const auto& conj = cat.get("Conj_I");
    Term goal = mk_conj(p(), mk_imp(q(), p()));
    auto inst = derived::match_rule(conj, {}, goal);
    REQUIRE(inst);
    auto ri = derived::instance_of(conj, *inst);
    CHECK(ri.concl == goal);
    REQUIRE(ri.premises.size() == 2);
    CHECK(ri.premises[0] == p());
    CHECK(ri.premises[1] == mk_imp(q(), p()));

    CHECK(!derived::match_rule(conj, {}, mk_disj(p(), q())));

    // Higher-order pattern: ∀x. ?P x against ∀y. R y y.
    Type a = Type::var("a");
    Term R = Term::free("R", Type::fun(a, Type::fun(a, Type::boolean())));
    Term y = Term::free("y", a);
    Term all = mk_all(y, Term::app(Term::app(R, y), y));
    const auto& uni_e = cat.get("Uni_E");
    Term c = Term::free("c", a);
    auto ui = derived::match_rule(uni_e, {{0, all}}, Term::app(Term::app(R, c), c));
    REQUIRE(ui);
    CHECK(derived::instance_of(uni_e, *ui).premises[0] == all);
}

TEST_CASE("explicit instantiation by name") {
    auto thy = derived::standard_theory();
    RuleCatalog cat(thy);
    const auto& disj = cat.get("Disj_I1");
    auto inst = derived::explicit_instantiation(thy, disj, {{"p", p()}, {"q", q()}});
    auto th = derived::instantiate_rule(thy, disj, inst);
    CHECK(th.concl() == mk_disj(p(), q()));
    CHECK(th.hyps() == std::vector<Term>{p()});
}

TEST_CASE("theorems become rules") {
    auto thy = derived::standard_theory();
    derived::Prover pr(thy);
    auto th = pr.disch(p(), pr.assume(p()));
    auto rule = derived::theorem_rule(thy, "id", th);
    CHECK(rule.premises.empty());
    auto inst = derived::match_rule(rule, {}, mk_imp(q(), q()));
    REQUIRE(inst);
    CHECK(derived::instantiate_rule(thy, rule, *inst).concl() == mk_imp(q(), q()));
}
