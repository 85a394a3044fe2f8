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
#include "mhl/derived/catalog.hpp"
#include "mhl/derived/theories.hpp"
#include "mhl/error.hpp"
#include "mhl/fol/semantics.hpp"
#include "mhl/kernel/thm.hpp"
#include "mhl/syntax/logic.hpp"

using namespace mhl;
using namespace mhl::syntax;
using kernel::GateSet;
using kernel::Kernel;
using kernel::Theory;

namespace {

Type boolean() { return Type::boolean(); }
Term p() { return Term::free("p", boolean()); }
Term q() { return Term::free("q", boolean()); }
Term qpred() { return Term::free("q", Type::fun(alpha(), boolean())); }
Term c() { return Term::free("c", alpha()); }

}  // namespace

TEST_CASE("assume") {
    Theory thy = derived::standard_theory();
    auto th = Kernel::assume(thy, p());
    CHECK(th.concl() == p());
    REQUIRE(th.hyps().size() == 1);
    CHECK(th.hyps()[0] == p());

    Term iff = mk_eq(p(), q());
    auto th2 = Kernel::assume(thy, iff);
    CHECK(th2.concl() == iff);
    CHECK(th2.has_hyp(iff));
    CHECK(th2.gates() == GateSet::core());

    CHECK_THROWS_WITH_AS(Kernel::assume(thy, Term::abs("x", alpha(), Term::bound(0))), doctest::Contains("not boolean"),
                         KernelError);
}

TEST_CASE("implication rules") {
    Theory thy = derived::standard_theory();
    auto pp = Kernel::imp_intro(thy, p(), Kernel::assume(thy, p()));
    CHECK(pp.hyps().empty());
    CHECK(pp.concl() == mk_imp(p(), p()));

    auto again = Kernel::imp_elim(pp, Kernel::assume(thy, p()));
    CHECK(again.concl() == p());
    CHECK(again.hyps() == std::vector<Term>{p()});

    CHECK_THROWS_AS(Kernel::imp_elim(pp, Kernel::assume(thy, q())), KernelError);
    CHECK_THROWS_AS(Kernel::imp_elim(Kernel::assume(thy, p()), Kernel::assume(thy, p())), KernelError);
}

TEST_CASE("generalization") {
    Theory thy = derived::standard_theory();
    auto pp = Kernel::imp_intro(thy, p(), Kernel::assume(thy, p()));
    Term x = Term::free("x", alpha());
    auto vac = Kernel::all_intro(x, pp);
    CHECK(vac.concl() == mk_all(x, mk_imp(p(), p())));

    Term qc = Term::app(qpred(), c());
    CHECK_THROWS_AS(Kernel::all_intro(c(), Kernel::assume(thy, qc)), KernelError);

    auto qq = Kernel::imp_intro(thy, qc, Kernel::assume(thy, qc));
    auto gen = Kernel::all_intro(c(), qq);
    Term qx = Term::app(qpred(), x);
    CHECK(gen.concl() == mk_all(x, mk_imp(qx, qx)));

    // Both statements hold in every small first-order model.
    using namespace mhl::fol;
    FolFormula qcf = FolFormula::pre("q", {FolTerm::fun("c")});
    FolFormula before = FolFormula::imp(qcf, qcf);
    FolFormula qv = FolFormula::pre("q", {FolTerm::var(0)});
    FolFormula after = FolFormula::uni(FolFormula::imp(qv, qv));
    for (std::uint32_t n = 1; n <= 3; ++n) {
        CHECK(count_countermodels(before, n, Exec::Serial) == 0);
        CHECK(count_countermodels(after, n, Exec::Serial) == 0);
    }

    auto back = Kernel::all_elim(thy, gen, c());
    CHECK(back.concl() == mk_imp(qc, qc));
    CHECK_THROWS(Kernel::all_elim(thy, gen, p()));
}

TEST_CASE("gated axioms") {
    Theory core = derived::standard_theory();
    Theory classical = derived::standard_theory(GateSet::classical());
    Term qc = Term::app(qpred(), c());
    auto th = Kernel::assume(classical, qc);

    auto ch = Kernel::choice(classical, th, qpred(), c());
    CHECK(ch.concl() == Term::app(qpred(), mk_eps(qpred())));
    CHECK(ch.hyps() == std::vector<Term>{qc});
    CHECK(ch.gates().contains(kernel::Gate::Choice));

    CHECK_THROWS_AS(Kernel::choice(core, Kernel::assume(core, qc), qpred(), c()), GateError);
    CHECK_THROWS_AS(Kernel::infinity_base(core), GateError);
    CHECK_THROWS_AS(Kernel::infinity_step(classical), GateError);
    CHECK_THROWS_AS(Kernel::comprehension(classical, qpred(), c()), GateError);
    auto pq = Kernel::assume(core, mk_imp(p(), q()));
    auto qp = Kernel::assume(core, mk_imp(q(), p()));
    CHECK_THROWS_AS(Kernel::iff_intro(core, pq, qp, p(), q()), GateError);

    Theory full = derived::standard_theory(GateSet::full());
    auto inf = Kernel::infinity_base(full);
    CHECK(inf.hyps().empty());
    CHECK(inf.gates().contains(kernel::Gate::Infinity));
    auto comp = Kernel::comprehension(full, qpred(), c());
    CHECK(comp.concl() == mk_eq(mk_mem(c(), mk_collect(qpred())), qc));
}

TEST_CASE("definitions") {
    Theory thy = Theory::bootstrap();
    Term pv = p();
    auto [t1, f] = Kernel::define(thy, "False", mk_all(pv, pv));
    Term falsum = Term::constant("False", boolean());
    CHECK(f.concl() == mk_eq(falsum, mk_all(pv, pv)));
    CHECK(f.hyps().empty());

    Term neg = lambda(pv, mk_imp(pv, falsum));
    auto [t2, n] = Kernel::define(t1, "Not", neg);
    CHECK(n.concl() == mk_eq(Term::constant("Not", Type::fun(boolean(), boolean())), neg));

    CHECK_THROWS_AS(Kernel::define(t2, "False", mk_all(pv, pv)), KernelError);
    // Free variables in a definiens are rejected.
    CHECK_THROWS(Kernel::define(t2, "Bad", pv));
    CHECK(Kernel::definition_thm(t2, "Not").concl() == n.concl());
}

TEST_CASE("instantiation") {
    Theory thy = derived::standard_theory();
    auto pp = Kernel::imp_intro(thy, p(), Kernel::assume(thy, p()));
    Term r = Term::free("r", boolean());
    Term qr = mk_conj(q(), r);
    auto inst = Kernel::inst_thm(thy, pp, {}, {{p(), qr}});
    CHECK(inst.concl() == mk_imp(qr, qr));

    // p is free in a hypothesis.
    CHECK_THROWS_AS(Kernel::inst_thm(thy, Kernel::assume(thy, p()), {}, {{p(), q()}}), KernelError);
}

TEST_CASE("equality is reflexive with the core gate only") {
    Theory thy = derived::standard_theory();
    derived::RuleCatalog cat(thy);
    auto refl = cat.derive("Refl");
    CHECK(refl.hyps().empty());
    CHECK(refl.gates() == GateSet::core());
    auto e = dest_eq(refl.concl());
    REQUIRE(e);
    CHECK(e->first == e->second);
}

TEST_CASE("unfolding definitions") {
    Theory thy = derived::standard_theory();
    // ¬p and p ⟶ ⊥ are the same proposition once ¬ is unfolded.
    auto th = Kernel::assume(thy, mk_not(p()));
    auto conv = Kernel::unfold_conv(thy, th, mk_imp(p(), mk_false()));
    CHECK(conv.concl() == mk_imp(p(), mk_false()));
    CHECK_THROWS_AS(Kernel::unfold_conv(thy, th, p()), KernelError);
}

TEST_CASE("every kernel rule is in the manifest") {
    std::set<std::string> names;
    for (const auto& e : kernel::kernel_manifest()) names.insert(e.name);
    for (const char* n : {"assume", "imp_intro", "imp_elim", "all_intro", "all_elim", "inst_thm", "define",
                          "unfold_conv", "iff_intro", "extension", "choice", "infinity_base", "infinity_step",
                          "comprehension"})
        CHECK(names.count(n) == 1);
}
