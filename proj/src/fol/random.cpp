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

#include "mhl/fol/random.hpp"

namespace mhl::fol {

FolTerm ProofGenerator::random_term(int depth) {
    int pool = 2 + static_cast<int>(eigen_.size());
    if (depth > 0 && pick(4) == 0) return FolTerm::fun("f", {random_term(depth - 1)});
    int i = pick(pool);
    if (i == 0) return FolTerm::fun("a", {});
    if (i == 1) return FolTerm::fun("b", {});
    return FolTerm::fun(eigen_[static_cast<std::size_t>(i - 2)], {});
}

FolFormula ProofGenerator::random_formula(int depth) {
    int choice = pick(depth > 0 ? 8 : 5);
    switch (choice) {
        case 0: return FolFormula::pre("P", {});
        case 1: return FolFormula::pre("Q", {});
        case 2: return FolFormula::pre("R", {random_term(1)});
        case 3: return FolFormula::pre("S", {random_term(1), random_term(1)});
        case 4: return pick(3) == 0 ? FolFormula::falsity() : FolFormula::pre("R", {random_term(0)});
        default: return FolFormula::imp(random_formula(depth - 1), random_formula(depth - 1));
    }
}

ProofGenerator::Result ProofGenerator::gen(int depth, const std::vector<FolFormula>& ctx) {
    auto extend = [&](const FolFormula& f) {
        std::vector<FolFormula> z{f};
        z.insert(z.end(), ctx.begin(), ctx.end());
        return z;
    };
    if (depth <= 0) {
        if (!ctx.empty() && pick(2) == 0) return {ctx[static_cast<std::size_t>(pick(static_cast<int>(ctx.size())))], nd::assm()};
        FolFormula a = random_formula(1);
        return {FolFormula::imp(a, a), nd::impi(nd::assm())};
    }
    switch (pick(7)) {
        case 0: {  // →I
            FolFormula a = random_formula(1);
            Result r = gen(depth - 1, extend(a));
            return {FolFormula::imp(a, r.goal), nd::impi(r.proof)};
        }
        case 1: {  // →E on a redex
            Result minor = gen(depth - 1, ctx);
            Result body = gen(depth - 1, extend(minor.goal));
            return {body.goal, nd::impe(minor.goal, nd::impi(body.proof), minor.proof)};
        }
        case 2: {  // ⊥E under a negation: (p ⟶ ⊥) ⟶ g
            Result p = gen(depth - 1, ctx);
            FolFormula g = random_formula(1);
            FolFormula np = FolFormula::imp(p.goal, FolFormula::falsity());
            NdProof body = nd::flse(nd::impe(p.goal, nd::assm(), p.proof));
            return {FolFormula::imp(np, g), nd::impi(body)};
        }
        case 3: {  // ∀I over a fresh eigenconstant
            std::string c = "e" + std::to_string(++eigen_counter_);
            eigen_.push_back(c);
            Result r = gen(depth - 1, ctx);
            eigen_.pop_back();
            return {FolFormula::uni(abstract_const(0, c, r.goal)), nd::unii(c, r.proof)};
        }
        case 4: {  // ∀E, when the subproof happens to end in a universal
            Result r = gen(depth - 1, ctx);
            if (r.goal.kind() != FolFormula::Kind::Uni) return r;
            FolTerm t = random_term(1);
            return {inst(t, r.goal.body()), nd::unie(r.goal, t, r.proof)};
        }
        case 5: {  // Peirce: ((p ⟶ q) ⟶ p) ⟶ p
            FolFormula p = random_formula(1);
            FolFormula q = random_formula(1);
            FolFormula pq = FolFormula::imp(p, q);
            NdProof body = nd::impc(q, nd::impe(pq, nd::assm(), nd::assm()));
            return {FolFormula::imp(FolFormula::imp(pq, p), p), nd::impi(body)};
        }
        default: {  // double negation: from (g ⟶ ⊥) ⟶ ⊥ conclude g
            Result r = gen(depth - 1, ctx);
            const FolFormula& f = r.goal;
            if (f.kind() == FolFormula::Kind::Imp && f.rhs().kind() == FolFormula::Kind::Falsity &&
                f.lhs().kind() == FolFormula::Kind::Imp && f.lhs().rhs().kind() == FolFormula::Kind::Falsity) {
                FolFormula g = f.lhs().lhs();
                NdProof body = nd::impc(FolFormula::falsity(), nd::flse(nd::impe(f.lhs(), r.proof, nd::assm())));
                return {g, body};
            }
            // Otherwise a vacuous ImpC still exercises the rule.
            FolFormula q = random_formula(0);
            return {f, nd::impc(q, r.proof)};
        }
    }
}

GeneratedProof ProofGenerator::next() {
    std::vector<FolFormula> ctx;
    int k = pick(3);
    for (int i = 0; i < k; ++i) ctx.push_back(random_formula(1));
    Result r = gen(depth_, ctx);
    return {{ctx, r.goal}, r.proof};
}

}  // namespace mhl::fol
