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
#include "mhl/derived/theories.hpp"
#include "mhl/error.hpp"
#include "mhl/script/elaborate.hpp"
#include "mhl/syntax/logic.hpp"
#include "mhl/syntax/pretty.hpp"
#include "mhl/syntax/signature.hpp"
#include "oracles.hpp"

using namespace mhl;
using namespace mhl::syntax;

namespace {

Type ind() { return Type::ind(); }
Type boolean() { return Type::boolean(); }

Term cantor_statement() {
    // ¬ (∃f :: 'a ⇒ 'a ⇒ bool. ∀s. ∃x. s = f x)
    Type set = Type::fun(alpha(), boolean());
    Term f = Term::free("f", Type::fun(alpha(), set));
    Term s = Term::free("s", set);
    Term x = Term::free("x", alpha());
    return mk_not(mk_ex(f, mk_all(s, mk_ex(x, mk_eq(s, Term::app(f, x))))));
}

}  // namespace

TEST_CASE("identity function on ind") {
    Term id = Term::abs("x", ind(), Term::bound(0));
    CHECK(type_of(id) == Type::fun(ind(), ind()));
}

TEST_CASE("cantor statement types at a set-valued f") {
    auto thy = derived::standard_theory();
    Term t = cantor_statement();
    CHECK(thy.type_of(t).is_bool());
    auto body = dest_not(t);
    REQUIRE(body);
    auto pred = dest_ex(*body);
    REQUIRE(pred);
    CHECK(pred->type() == Type::fun(alpha(), Type::fun(alpha(), boolean())));
}

TEST_CASE("type clash is reported") {
    Term id = Term::abs("x", boolean(), Term::bound(0));
    Term c = Term::free("c", ind());
    CHECK_THROWS_AS(type_of(Term::app(id, c)), TypeError);
}

TEST_CASE("subst_bound") {
    Term c = Term::free("c", alpha());
    CHECK(subst_bound(Term::bound(0), c) == c);

    Term f = Term::free("f", Type::fun(alpha(), Type::fun(alpha(), boolean())));
    Term body = mk_not(Term::app(Term::app(f, Term::bound(0)), Term::bound(0)));
    CHECK(subst_bound(body, c) == mk_not(Term::app(Term::app(f, c), c)));

    // λy. x with x := #0 (a binder outside the redex): the index must be
    // shifted past λy.
    Term inner = Term::abs("y", alpha(), Term::bound(1));
    Term got = subst_bound(inner, Term::bound(0));
    CHECK(got == Term::abs("y", alpha(), Term::bound(1)));
    Term got2 = subst_bound(inner, Term::bound(3));
    CHECK(got2 == Term::abs("y", alpha(), Term::bound(4)));
}

TEST_CASE("subst_bound agrees with named substitution") {
    testing::TermGen gen(11);
    for (int i = 0; i < 300; ++i) {
        std::string diff = testing::subst_bound_case(gen);
        INFO(diff);
        CHECK(diff.empty());
    }
}

TEST_CASE("normalize") {
    Term c = Term::free("c", alpha());
    CHECK(normalize(Term::app(Term::abs("x", alpha(), Term::bound(0)), c)) == c);

    Term f = Term::free("f", Type::fun(alpha(), Type::fun(alpha(), boolean())));
    Term lam = Term::abs("x", alpha(), mk_not(Term::app(Term::app(f, Term::bound(0)), Term::bound(0))));
    CHECK(normalize(Term::app(lam, c)) == mk_not(Term::app(Term::app(f, c), c)));

    Term g = Term::free("g", Type::fun(alpha(), boolean()));
    CHECK(normalize(Term::abs("x", alpha(), Term::app(g, Term::bound(0)))) == g);
    CHECK(is_normal(g));
}

TEST_CASE("normalize agrees with named beta-eta") {
    testing::TermGen gen(12);
    for (int i = 0; i < 300; ++i) {
        std::string diff = testing::normalize_case(gen);
        INFO(diff);
        CHECK(diff.empty());
    }
}

TEST_CASE("instantiate") {
    Term p = Term::free("p", boolean()), q = Term::free("q", boolean());
    Term a = Term::free("A", boolean()), b = Term::free("B", boolean());
    Term ak = mk_imp(p, mk_imp(q, p));
    CHECK(instantiate(ak, {}, {{p, a}, {q, b}}) == mk_imp(a, mk_imp(b, a)));
    CHECK(instantiate(ak, {}, {}) == ak);
    // Simultaneous, not sequential.
    CHECK(instantiate(ak, {}, {{p, q}, {q, p}}) == mk_imp(q, mk_imp(p, q)));
}

TEST_CASE("type instantiation keeps the cantor statement well typed") {
    auto thy = derived::standard_theory();
    Term t = instantiate(cantor_statement(), {{"a", boolean()}}, {});
    CHECK(thy.type_of(t).is_bool());
    std::set<std::string> tvs;
    collect_type_vars(t, tvs);
    CHECK(tvs.empty());
}

TEST_CASE("instantiate agrees with named substitution") {
    testing::TermGen gen(13);
    for (int i = 0; i < 300; ++i) {
        std::string diff = testing::instantiate_case(gen);
        INFO(diff);
        CHECK(diff.empty());
    }
}

TEST_CASE("abstract and lambda") {
    Term x = Term::free("x", alpha());
    Term P = Term::free("P", Type::fun(alpha(), boolean()));
    Term l = lambda(x, Term::app(P, x));
    CHECK(l == Term::abs("x", alpha(), Term::app(P, Term::bound(0))));
    CHECK(subst_bound(l.body(), x) == Term::app(P, x));
    CHECK(!occurs_free(x, l));
}

TEST_CASE("pretty printing") {
    Term p = Term::free("p", boolean()), q = Term::free("q", boolean());
    CHECK(pretty(mk_imp(p, mk_imp(q, p))) == "p ⟶ q ⟶ p");
    CHECK(pretty(mk_imp(mk_imp(p, q), p)) == "(p ⟶ q) ⟶ p");
    CHECK(pretty(mk_eq(p, q)) == "p ⟷ q");
    PrettyOptions eq;
    eq.iff_as_eq = true;
    CHECK(pretty(mk_eq(p, q), eq) == "p = q");
    CHECK(pretty(cantor_statement()) == "¬ (∃f. ∀s. ∃x. s = f x)");
}

TEST_CASE("typed terms survive print and parse") {
    auto thy = derived::standard_theory(kernel::GateSet::full());
    testing::TermGen gen(14);
    for (int i = 0; i < 300; ++i) {
        std::string diff = testing::term_round_trip_case(gen, thy);
        INFO(diff);
        CHECK(diff.empty());
    }
}

TEST_CASE("variant names") {
    CHECK(variant_name("x", {}) == "x");
    std::string v = variant_name("x", {"x", "x'"});
    CHECK(v != "x");
    CHECK(v != "x'");
}
