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

#include "mhl/fol/translate.hpp"

#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "mhl/error.hpp"
#include "mhl/fol/hilbert.hpp"

namespace mhl::fol {

namespace {

void collect_hyps(const AxProof& p, std::unordered_set<const AxNode*>& seen, std::set<FolFormula>& out) {
    if (!seen.insert(p.get()).second) return;
    if (p->rule == AxRule::Hyp) out.insert(p->formulas[0]);
    for (const AxProof& c : p->children) collect_hyps(c, seen, out);
}

std::set<FolFormula> hyps_of(const AxProof& p) {
    std::unordered_set<const AxNode*> seen;
    std::set<FolFormula> out;
    collect_hyps(p, seen, out);
    return out;
}

// z1 ⟶ ... ⟶ zk ⟶ r
FolFormula chain(const std::vector<FolFormula>& z, FolFormula r) {
    for (auto it = z.rbegin(); it != z.rend(); ++it) r = FolFormula::imp(*it, r);
    return r;
}

AxProof discharge_all(AxProof p, const std::vector<FolFormula>& z) {
    for (auto it = z.rbegin(); it != z.rend(); ++it) p = deduction_theorem(p, *it);
    return p;
}

class NdToAx {
public:
    AxProof run(const NdProof& n, const std::vector<FolFormula>& z, const FolFormula& goal) {
        switch (n->rule) {
            case NdRule::Assm:
                return ax::hyp(goal);
            case NdRule::FlsE:
                return ax::mp(ax::ax(goal), run(n->children[0], z, FolFormula::falsity()));
            case NdRule::ImpI: {
                std::vector<FolFormula> z2{goal.lhs()};
                z2.insert(z2.end(), z.begin(), z.end());
                return deduction_theorem(run(n->children[0], z2, goal.rhs()), goal.lhs());
            }
            case NdRule::ImpE: {
                const FolFormula& a = *n->formula;
                return ax::mp(run(n->children[0], z, FolFormula::imp(a, goal)), run(n->children[1], z, a));
            }
            case NdRule::UniE:
                return ax::mp(ax::ay(*n->formula, *n->term), run(n->children[0], z, *n->formula));
            case NdRule::UniI:
                return uni_intro(n, z, goal);
            case NdRule::ImpC: {
                FolFormula neg_goal = FolFormula::imp(goal, *n->formula);
                std::vector<FolFormula> z2{neg_goal};
                z2.insert(z2.end(), z.begin(), z.end());
                return ax::pr(deduction_theorem(run(n->children[0], z2, goal), neg_goal));
            }
        }
        throw Error("nd_to_ax: unknown rule");
    }

private:
    // GR needs a single antecedent, so the used hypotheses are packed into
    // N = (z1 ⟶ ... ⟶ zk ⟶ ⊥) ⟶ ⊥ and unpacked classically.
    AxProof uni_intro(const NdProof& n, const std::vector<FolFormula>& z, const FolFormula& goal) {
        const std::string& c = n->constant;
        AxProof sub = run(n->children[0], z, inst(FolTerm::fun(c, {}), goal.body()));
        std::set<FolFormula> used_set = hyps_of(sub);
        std::vector<FolFormula> used;
        for (const FolFormula& f : z)
            if (used_set.erase(f)) used.push_back(f);
        const FolFormula bot = FolFormula::falsity();

        if (used.empty()) {
            FolFormula n0 = FolFormula::imp(bot, bot);
            AxProof closed = ax::mp(ax::ak(sub->concl, n0), sub);
            return ax::mp(ax::gr(c, closed), ax::ax(bot));
        }

        FolFormula m = chain(used, bot);
        FolFormula packed = FolFormula::imp(m, bot);
        std::map<FolFormula, AxProof> unpack;
        for (const FolFormula& zi : used) {
            FolFormula not_zi = FolFormula::imp(zi, bot);
            AxProof contra = ax::mp(ax::hyp(not_zi), ax::hyp(zi));
            AxProof m_proof = discharge_all(contra, used);
            AxProof falsum = ax::mp(ax::hyp(packed), m_proof);
            AxProof zi_proof = ax::mp(ax::ax(zi), falsum);
            unpack.emplace(zi, ax::pr(deduction_theorem(zi_proof, not_zi)));
        }
        AxProof from_packed = deduction_theorem(replace_hyps(sub, unpack), packed);
        AxProof applied = ax::hyp(m);
        for (const FolFormula& zi : used) applied = ax::mp(applied, ax::hyp(zi));
        AxProof pack = deduction_theorem(applied, m);
        return ax::mp(ax::gr(c, from_packed), pack);
    }
};

void collect_names(const AxProof& p, std::unordered_set<const AxNode*>& seen, std::set<std::string>& out) {
    if (!seen.insert(p.get()).second) return;
    collect_functions(p->concl, out);
    for (const FolFormula& f : p->formulas) collect_functions(f, out);
    if (p->term) collect_functions(FolFormula::pre("", {*p->term}), out);
    if (!p->constant.empty()) out.insert(p->constant);
    for (const AxProof& c : p->children) collect_names(c, seen, out);
}

class AxToNd {
public:
    NdProof run(const AxProof& p, const std::vector<FolFormula>& ctx) {
        auto key = std::make_pair(p.get(), intern(ctx));
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        NdProof out = translate(p, ctx);
        keep_.push_back(p);
        memo_.emplace(key, out);
        return out;
    }

private:
    NdProof translate(const AxProof& p, const std::vector<FolFormula>& ctx) {
        using namespace nd;
        const FolFormula& f = p->concl;
        switch (p->rule) {
            case AxRule::Hyp:
                return assm();
            case AxRule::AK:
                return impi(impi(assm()));
            case AxRule::AT: {
                // (q ⟶ r) ⟶ (r ⟶ p) ⟶ q ⟶ p
                const FolFormula& q = p->formulas[1];
                const FolFormula& r = p->formulas[2];
                return impi(impi(impi(impe(r, assm(), impe(q, assm(), assm())))));
            }
            case AxRule::AX:
                return impi(flse(assm()));
            case AxRule::AY:
                return impi(unie(p->formulas[0], *p->term, assm()));
            case AxRule::MP: {
                const AxProof& minor = p->children[1];
                return impe(minor->concl, run(p->children[0], ctx), run(minor, ctx));
            }
            case AxRule::GR: {
                const FolFormula& q = f.lhs();
                std::vector<FolFormula> ctx2{q};
                ctx2.insert(ctx2.end(), ctx.begin(), ctx.end());
                std::string c = p->constant;
                AxProof child = p->children[0];
                if (occurs_in(c, std::span<const FolFormula>(ctx2)) || occurs_in(c, f)) {
                    std::set<std::string> avoid;
                    for (const FolFormula& g : ctx2) collect_functions(g, avoid);
                    collect_functions(f, avoid);
                    std::unordered_set<const AxNode*> seen;
                    collect_names(child, seen, avoid);
                    std::string fresh = c;
                    for (int i = 1; avoid.count(fresh); ++i) fresh = c + std::to_string(i);
                    child = rename_const(child, c, fresh);
                    c = fresh;
                }
                return impi(unii(c, impe(q, run(child, ctx2), assm())));
            }
            case AxRule::PR: {
                // child: (p ⟶ q) ⟶ p
                const FolFormula& pq = p->children[0]->concl.lhs();
                std::vector<FolFormula> ctx2{pq};
                ctx2.insert(ctx2.end(), ctx.begin(), ctx.end());
                return impc(pq.rhs(), impe(pq, run(p->children[0], ctx2), assm()));
            }
        }
        throw Error("ax_to_nd: unknown rule");
    }

    std::size_t intern(const std::vector<FolFormula>& ctx) {
        auto [it, inserted] = contexts_.emplace(ctx, contexts_.size());
        return it->second;
    }

    std::map<std::vector<FolFormula>, std::size_t> contexts_;
    std::map<std::pair<const AxNode*, std::size_t>, NdProof> memo_;
    std::vector<AxProof> keep_;  // renamed subproofs must outlive their memo keys
};

}  // namespace

AxProof rename_const(const AxProof& proof, const std::string& from, const std::string& to) {
    std::unordered_map<const AxNode*, AxProof> memo;
    auto go = [&](auto& self, const AxProof& p) -> AxProof {
        auto it = memo.find(p.get());
        if (it != memo.end()) return it->second;
        auto r = [&](const FolFormula& f) { return rename_const(f, from, to); };
        AxProof out;
        switch (p->rule) {
            case AxRule::AK: out = ax::ak(r(p->formulas[0]), r(p->formulas[1])); break;
            case AxRule::AT: out = ax::at(r(p->formulas[0]), r(p->formulas[1]), r(p->formulas[2])); break;
            case AxRule::AX: out = ax::ax(r(p->formulas[0])); break;
            case AxRule::AY: out = ax::ay(r(p->formulas[0]), rename_const(*p->term, from, to)); break;
            case AxRule::MP: out = ax::mp(self(self, p->children[0]), self(self, p->children[1])); break;
            case AxRule::GR:
                out = ax::gr(p->constant == from ? to : p->constant, self(self, p->children[0]));
                break;
            case AxRule::PR: out = ax::pr(self(self, p->children[0])); break;
            case AxRule::Hyp: out = ax::hyp(r(p->formulas[0])); break;
        }
        memo.emplace(p.get(), out);
        return out;
    };
    return go(go, proof);
}

AxProof nd_to_ax_open(const NdProof& proof, const FolSequent& claim) {
    if (CheckResult r = nd_check(proof, claim); !r) throw Error("nd_to_ax: input rejected: " + r.diagnostic);
    LemmaCacheScope scope;
    return NdToAx{}.run(proof, claim.assumptions, claim.goal);
}

AxProof nd_to_ax(const NdProof& proof, const FolSequent& claim) {
    AxProof open = nd_to_ax_open(proof, claim);
    LemmaCacheScope scope;
    return discharge_all(open, claim.assumptions);
}

NdProof ax_to_nd(const AxProof& proof, const FolFormula& phi, std::span<const FolFormula> hyps) {
    if (CheckResult r = ax_check(proof, phi, hyps); !r) throw Error("ax_to_nd: input rejected: " + r.diagnostic);
    return AxToNd{}.run(proof, std::vector<FolFormula>(hyps.begin(), hyps.end()));
}

}  // namespace mhl::fol
