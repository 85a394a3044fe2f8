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

#include <functional>
#include <random>

#include "doctest.h"
#include "mhl/fol/proof.hpp"
#include "mhl/imp/prover.hpp"

using namespace mhl;
using namespace mhl::imp;

namespace {

// Truth tables computed here, not by the library.
bool tautology(const ImpFormula& f) {
    auto as = atoms(f);
    for (unsigned bits = 0; bits < (1u << as.size()); ++bits) {
        std::map<std::string, bool> v;
        for (std::size_t i = 0; i < as.size(); ++i) v[as[i]] = (bits >> i) & 1;
        std::function<bool(const ImpFormula&)> ev = [&](const ImpFormula& g) {
            return g.is_atom() ? v.at(g.name()) : (!ev(g.lhs()) || ev(g.rhs()));
        };
        if (!ev(f)) return false;
    }
    return true;
}

std::uint64_t catalan(std::size_t n) {
    std::uint64_t c = 1;
    for (std::size_t k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
    return c;
}

}  // namespace

TEST_CASE("tautology checks") {
    CHECK(taut(parse("p -> p")));
    CHECK(taut(parse("((p -> q) -> p) -> p")));
    CHECK(!taut(parse("p -> q")));
    CHECK(parse("p -> q -> p") == parse("p ⟶ (q ⟶ p)"));
    CHECK(parse(to_string(parse("(p -> q) -> p"))) == parse("(p ⟶ q) ⟶ p"));
}

TEST_CASE("the K axiom is a one-leaf proof") {
    ImpFormula ak = parse("p -> q -> p");
    auto r = prove(ak);
    REQUIRE(r);
    CHECK(r.proof->rule == fol::AxRule::AK);
    CHECK(fol::ax_check(r.proof, to_fol(ak), {}, fol::kImplicationalRules));
}

TEST_CASE("transitivity axiom instances are one-node proofs") {
    ImpFormula at = parse("(q -> r) -> (r -> p) -> q -> p");
    auto r = prove(at);
    REQUIRE(r);
    CHECK(r.proof->rule == fol::AxRule::AT);
    CHECK(fol::ax_check(r.proof, to_fol(at), {}, fol::kImplicationalRules));
}

TEST_CASE("Peirce's law") {
    ImpFormula peirce = parse("((p -> q) -> p) -> p");
    auto r = prove(peirce);
    REQUIRE(r);
    CHECK((r.proof->rule == fol::AxRule::MP || r.proof->rule == fol::AxRule::PR));
    CHECK(fol::ax_check(r.proof, to_fol(peirce), {}, fol::kImplicationalRules));
    CHECK(fol::ax_uses(r.proof, fol::AxRule::PR));
}

TEST_CASE("refutation gives a countervaluation") {
    auto r = prove(parse("p -> q"));
    CHECK(!r);
    REQUIRE(r.countervaluation);
    CHECK(to_string(*r.countervaluation) == "p=1 q=0");
    CHECK(!eval(parse("p -> q"), *r.countervaluation));
}

TEST_CASE("formula space size") {
    for (std::size_t atoms_n = 1; atoms_n <= 3; ++atoms_n)
        for (std::size_t n = 0; n <= 7; ++n) {
            std::uint64_t want = 0, pow = atoms_n;
            for (std::size_t k = 0; k <= n; ++k, pow *= atoms_n) want += catalan(k) * pow;
            CHECK(FormulaSpace(n, atoms_n).count() == want);
        }
    CHECK(FormulaSpace(7, 3).count() == 3137844);
}

TEST_CASE("small sweep agrees with truth tables") {
    FormulaSpace space(4, 3);
    std::uint64_t tauts = 0;
    for (std::uint64_t i = 0; i < space.count(); ++i) tauts += tautology(space.at(i));
    auto serial = sweep(space, Exec::Serial);
    auto parallel = sweep(space, Exec::Parallel);
    CHECK(serial.formulas == space.count());
    CHECK(serial.tautologies == tauts);
    CHECK(serial.proved == tauts);
    CHECK(serial.refuted == space.count() - tauts);
    CHECK(serial.disagreements == 0);
    CHECK(serial.check_failures == 0);
    CHECK(parallel.tautologies == serial.tautologies);
    CHECK(parallel.proved == serial.proved);
    CHECK(parallel.check_failures == 0);
}

TEST_CASE("discharged hypothesis proofs") {
    FormulaSpace space(3, 3);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint64_t> pick(0, space.count() - 1);
    int discharged = 0;
    for (int i = 0; i < 200; ++i) {
        std::vector<ImpFormula> hyps{space.at(pick(rng)), space.at(pick(rng))};
        ImpFormula goal = space.at(pick(rng));
        ImpFormula closed = ImpFormula::imp(hyps[0], ImpFormula::imp(hyps[1], goal));
        std::vector<fol::FolFormula> fh{to_fol(hyps[0]), to_fol(hyps[1])};
        auto proof = prove_from(fh, to_fol(goal));
        CHECK((proof != nullptr) == tautology(closed));
        if (!proof) continue;
        CHECK(fol::ax_check(proof, to_fol(goal), fh));
        auto d1 = imp::deduction_theorem(proof, fh[1]);
        auto d0 = imp::deduction_theorem(d1, fh[0]);
        CHECK(fol::ax_check(d0, to_fol(closed), {}, fol::kImplicationalRules));
        CHECK(tautology(closed));
        ++discharged;
    }
    CHECK(discharged > 20);
}

TEST_CASE("translation to the first-order language") {
    ImpFormula f = parse("(p -> q) -> r -> p");
    auto back = from_fol(to_fol(f));
    REQUIRE(back);
    CHECK(*back == f);
    CHECK(!from_fol(fol::FolFormula::falsity()));
}
