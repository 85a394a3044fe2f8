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

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "doctest.h"
#include "mhl/error.hpp"
#include "mhl/fol/hilbert.hpp"
#include "mhl/fol/parse.hpp"
#include "mhl/fol/proof.hpp"
#include "mhl/fol/random.hpp"
#include "mhl/fol/semantics.hpp"
#include "mhl/fol/translate.hpp"

using namespace mhl::fol;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const std::filesystem::path kFolCorpus = std::filesystem::path(MHL_SOURCE_DIR) / "corpus" / "fol";

FolFormula P() { return FolFormula::pre("p"); }
FolFormula Q() { return FolFormula::pre("q"); }

const char* kGrandfather = "(∀x. ¬ r x ⟶ r (f x)) ⟶ (∃x. r x ∧ r (f (f x)))";

}  // namespace

TEST_CASE("falsity and the K axiom under all small models") {
    for (std::uint32_t n = 1; n <= 3; ++n) CHECK(count_countermodels(FolFormula::falsity(), n, Exec::Serial) == 1);
    FolFormula ak = FolFormula::imp(P(), FolFormula::imp(Q(), P()));
    for (int v = 0; v < 4; ++v) {
        Model m;
        m.predicates["p"] = {0, {static_cast<bool>(v & 1)}};
        m.predicates["q"] = {0, {static_cast<bool>(v & 2)}};
        CHECK(eval(m, ak));
    }
}

TEST_CASE("grandfather formula in every model of size at most two") {
    // Direct evaluation, independent of the formula machinery.
    int models = 0;
    for (int n = 1; n <= 2; ++n) {
        int rtabs = 1 << n, ftabs = n == 1 ? 1 : 4;
        for (int rt = 0; rt < rtabs; ++rt)
            for (int ft = 0; ft < ftabs; ++ft) {
                auto r = [&](int x) { return ((rt >> x) & 1) != 0; };
                auto f = [&](int x) { return n == 1 ? 0 : (ft >> x) & 1; };
                bool hyp = true, concl = false;
                for (int x = 0; x < n; ++x) hyp = hyp && (r(x) || r(f(x)));
                for (int x = 0; x < n; ++x) concl = concl || (r(x) && r(f(f(x))));
                CHECK((!hyp || concl));
                ++models;
            }
    }
    CHECK(models == 2 + 16);
    FolFormula gf = parse_formula(kGrandfather);
    CHECK(count_countermodels(gf, 1, Exec::Serial) == 0);
    CHECK(count_countermodels(gf, 2, Exec::Serial) == 0);
}

TEST_CASE("countermodels") {
    auto m = countermodel(FolFormula::imp(P(), Q()), 3);
    REQUIRE(m);
    CHECK(m->size == 1);
    CHECK(m->predicates.at("p").values[0]);
    CHECK(!m->predicates.at("q").values[0]);

    CHECK(!countermodel(parse_formula(kGrandfather), 3, Exec::Serial));
    CHECK(!countermodel(parse_formula(kGrandfather), 3, Exec::Parallel));

    auto all = countermodel(parse_formula("∀x. r x"), 2);
    REQUIRE(all);
    CHECK(all->size == 1);
    CHECK(!all->predicates.at("r").values[0]);
}

TEST_CASE("serial and parallel enumeration agree") {
    for (const char* text : {"∀x. r x", "(∀x. r x ⟶ s (f x)) ⟶ r c ⟶ s (f c)", "r c ⟶ r (f c)", kGrandfather}) {
        FolFormula p = parse_formula(text);
        for (std::uint32_t n = 1; n <= 3; ++n) {
            INFO(text << " size " << n);
            CHECK(count_countermodels(p, n, Exec::Serial) == count_countermodels(p, n, Exec::Parallel));
        }
    }
    auto a = countermodel(parse_formula("r c ⟶ r (f c)"), 3, Exec::Serial);
    auto b = countermodel(parse_formula("r c ⟶ r (f c)"), 3, Exec::Parallel);
    REQUIRE(a);
    REQUIRE(b);
    CHECK(a->to_string() == b->to_string());
}

TEST_CASE("natural deduction checker") {
    CHECK(nd_check(nd::assm(), {{P()}, P()}));
    CHECK(!nd_check(nd::assm(), {{Q()}, P()}));

    // UniI whose eigenconstant occurs in an assumption.
    FolFormula rc = FolFormula::pre("r", {FolTerm::fun("c")});
    FolFormula all = FolFormula::uni(FolFormula::pre("r", {FolTerm::var(0)}));
    auto bad = nd_check(nd::unii("c", nd::assm()), {{rc}, all});
    CHECK(!bad);
    CHECK(bad.diagnostic.find("fresh") != std::string::npos);
    auto good = nd_check(nd::unii("d", nd::assm()), {{all}, all});
    CHECK(!good);  // r d is not among the assumptions
    CHECK(nd_check(nd::unii("d", nd::unie(all, FolTerm::fun("d"), nd::assm())), {{all}, all}));

    // Wrong number of premises.
    auto broken = std::make_shared<const NdNode>(NdNode{NdRule::ImpI, std::nullopt, std::nullopt, "", {}});
    CHECK(!nd_check(broken, {{}, FolFormula::imp(P(), P())}));
}

TEST_CASE("grandfather derivation with classical reductio") {
    auto doc = read_nd(slurp(kFolCorpus / "grandfather.nd"), "grandfather.nd");
    CHECK(doc.claim.goal == parse_formula(kGrandfather));
    CHECK(nd_check(doc.proof, doc.claim));
    CHECK(nd_uses_impc(doc.proof));
}

TEST_CASE("axiomatic checker") {
    CHECK(ax_check(ax::ak(P(), Q()), FolFormula::imp(P(), FolFormula::imp(Q(), P()))));
    CHECK(!ax_check(ax::ak(P(), Q()), FolFormula::imp(Q(), FolFormula::imp(P(), P()))));

    // MP(AK p q, hyp p) proves q ⟶ p.
    auto mp = ax::mp(ax::ak(P(), Q()), ax::hyp(P()));
    std::vector<FolFormula> hyps{P()};
    CHECK(ax_check(mp, FolFormula::imp(Q(), P()), hyps));
    CHECK(!ax_check(mp, FolFormula::imp(Q(), P())));

    // Peirce: PR from a hypothesis (p ⟶ q) ⟶ p.
    FolFormula pq_p = FolFormula::imp(FolFormula::imp(P(), Q()), P());
    std::vector<FolFormula> peirce_hyp{pq_p};
    CHECK(ax_check(ax::pr(ax::hyp(pq_p)), P(), peirce_hyp));
    CHECK(!ax_check(ax::pr(ax::hyp(pq_p)), P(), peirce_hyp, kAllAxRules & ~rule_bit(AxRule::PR)));
}

TEST_CASE("ax_to_nd on the K axiom") {
    FolFormula ak = FolFormula::imp(P(), FolFormula::imp(Q(), P()));
    auto nd = ax_to_nd(ax::ak(P(), Q()), ak);
    CHECK(nd_check(nd, {{}, ak}));
    REQUIRE(nd->rule == NdRule::ImpI);
    REQUIRE(nd->children[0]->rule == NdRule::ImpI);
    CHECK(nd->children[0]->children[0]->rule == NdRule::Assm);
}

TEST_CASE("random derivations translate and stay sound") {
    ProofGenerator gen(2024, 4);
    for (int i = 0; i < 100; ++i) {
        auto g = gen.next();
        INFO(pretty(g.claim));
        REQUIRE(nd_check(g.proof, g.claim));
        FolFormula closed = close_sequent(g.claim);
        auto ax = nd_to_ax(g.proof, g.claim);
        CHECK(ax_check(ax, closed));
        auto back = ax_to_nd(ax, closed);
        CHECK(nd_check(back, {{}, closed}));
        for (std::uint32_t n = 1; n <= 2; ++n) CHECK(count_countermodels(closed, n, Exec::Serial) == 0);
    }
}

TEST_CASE("corpus files check and round-trip through text") {
    int seen = 0;
    for (const auto& entry : std::filesystem::directory_iterator(kFolCorpus)) {
        std::string text = slurp(entry.path());
        INFO(entry.path().filename().string());
        if (entry.path().extension() == ".nd") {
            auto doc = read_nd(text);
            CHECK(nd_check(doc.proof, doc.claim));
            CHECK(read_nd(write_nd(doc.proof, doc.claim)).claim.goal == doc.claim.goal);
            CHECK(document_calculus(text) == "nd");
        } else if (entry.path().extension() == ".ax") {
            auto doc = read_ax(text);
            CHECK(ax_check(doc.proof, doc.goal, doc.hyps));
            CHECK(document_calculus(text) == "ax");
        }
        ++seen;
    }
    CHECK(seen >= 20);
}

TEST_CASE("formula text round-trips") {
    for (const char* text : {"p ⟶ q ⟶ p", "(p ⟶ q) ⟶ p", "∀x. ∀y. S x y ⟶ S y x", "⊥ ⟶ r (f (g c d))"}) {
        FolFormula f = parse_formula(text);
        CHECK(parse_formula(pretty(f)) == f);
    }
    CHECK_THROWS_AS(parse_formula("p ⟶"), mhl::ParseError);
}

TEST_CASE("hilbert lemmas are provable") {
    const std::map<std::string, std::string> expected = {
        {"I", "p ⟶ p"},
        {"B", "(q ⟶ r) ⟶ (p ⟶ q) ⟶ p ⟶ r"},
        {"C", "(p ⟶ q ⟶ r) ⟶ q ⟶ p ⟶ r"},
        {"W", "(p ⟶ p ⟶ q) ⟶ p ⟶ q"},
        {"S", "(p ⟶ q ⟶ r) ⟶ (p ⟶ q) ⟶ p ⟶ r"},
        {"Peirce", "((p ⟶ q) ⟶ p) ⟶ p"},
    };
    std::vector<FolFormula> args{P(), Q(), FolFormula::pre("r")};
    int proved = 0;
    for (const auto& name : lemma_names()) {
        INFO(name);
        for (std::size_t k = 1; k <= args.size(); ++k) {
            std::vector<FolFormula> a(args.begin(), args.begin() + static_cast<long>(k));
            AxProof proof;
            try {
                proof = lemma(name, a);
            } catch (const mhl::Error&) {
                continue;
            }
            FolFormula stmt = lemma_statement(name, a);
            CHECK(ax_check(proof, stmt, {}, kImplicationalRules));
            if (auto it = expected.find(name); it != expected.end()) CHECK(stmt == parse_formula(it->second));
            ++proved;
            break;
        }
    }
    CHECK(proved == static_cast<int>(lemma_names().size()));
}
