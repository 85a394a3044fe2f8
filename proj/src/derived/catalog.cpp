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

#include "mhl/derived/catalog.hpp"

#include <functional>
#include <optional>

#include "mhl/error.hpp"
#include "mhl/syntax/logic.hpp"
#include "mhl/syntax/pretty.hpp"

namespace mhl::derived {

using kernel::Gate;
using kernel::Kernel;
using syntax::lambda;
namespace S = syntax;

namespace {

const GateSet kCore = GateSet::core();
const GateSet kExt = GateSet::core() | Gate::Ext;
const GateSet kChoice = GateSet::core() | Gate::Choice;
const GateSet kClassical = GateSet::classical();

using Named = std::vector<std::pair<std::string, Term>>;

struct Builder {
    const Theory& thy;
    Prover pr;
    std::vector<Rule>& rules;
    std::map<std::string, std::size_t>& index;

    const Rule& rule(const std::string& n) const { return rules.at(index.at(n)); }

    void add(const std::string& name, const Thm& th, std::vector<Term> prem, std::vector<PremiseShape> shapes,
             GateSet req, RuleKind kind, std::string doc) {
        index[name] = rules.size();
        rules.push_back(make_rule(thy, name, th, std::move(prem), std::move(shapes), req, kind, std::move(doc)));
    }

    // Apply a catalog rule to facts (in premise order). Variables not fixed
    // by the facts come from `named` or the expected conclusion.
    Thm use(const std::string& name, const std::vector<Thm>& facts, const Named& named = {},
            const std::optional<Term>& target = std::nullopt) const {
        const Rule& r = rule(name);
        Instantiation seed = explicit_instantiation(thy, r, named);
        std::vector<std::pair<std::size_t, Term>> pt;
        for (std::size_t i = 0; i < facts.size(); ++i) pt.emplace_back(i, facts[i].concl());
        auto inst = match_rule(r, pt, target, seed);
        if (!inst) throw KernelError("catalog: cannot apply " + name);
        return apply_rule(thy, r, *inst, facts);
    }
};

Term app(const Term& f, const Term& x) { return Term::app(f, x); }

}  // namespace

const std::vector<RuleInfo>& RuleCatalog::known() {
    static const std::vector<RuleInfo> info = {
        {"Falsity_E", kCore, RuleKind::Elim, false},  {"Neg_I", kCore, RuleKind::Intro, false},
        {"Neg_E", kCore, RuleKind::Elim, false},      {"Truth_I", kCore, RuleKind::Intro, false},
        {"Conj_I", kCore, RuleKind::Intro, false},    {"Conj_E1", kCore, RuleKind::Elim, false},
        {"Conj_E2", kCore, RuleKind::Elim, false},    {"Conj_E", kCore, RuleKind::Elim, false},
        {"Disj_I1", kCore, RuleKind::Intro, false},   {"Disj_I2", kCore, RuleKind::Intro, false},
        {"Disj_E", kCore, RuleKind::Elim, false},     {"Ex_I", kCore, RuleKind::Intro, false},
        {"Ex_E", kCore, RuleKind::Elim, false},       {"Refl", kCore, RuleKind::Intro, false},
        {"Subst", kCore, RuleKind::Elim, false},      {"Sym", kCore, RuleKind::Elim, false},
        {"Subst_sym", kCore, RuleKind::Elim, false},  {"Trans", kCore, RuleKind::Elim, false},
        {"Fun_cong", kCore, RuleKind::Elim, false},   {"Arg_cong", kCore, RuleKind::Elim, false},
        {"Cong", kCore, RuleKind::Elim, false},       {"Iff_E1", kCore, RuleKind::Elim, false},
        {"Iff_E2", kCore, RuleKind::Elim, false},     {"Imp_I", kCore, RuleKind::Intro, false},
        {"Imp_E", kCore, RuleKind::Elim, false},      {"Uni_I", kCore, RuleKind::Intro, false},
        {"Uni_E", kCore, RuleKind::Elim, false},      {"Iff_I", kExt, RuleKind::Intro, false},
        {"Extension", kExt, RuleKind::Intro, false},  {"Choice", kChoice, RuleKind::Other, false},
        {"Imp_C", kClassical, RuleKind::Other, true}, {"LEM", kClassical, RuleKind::Other, true},
        {"classical", kClassical, RuleKind::Other, true}, {"ccontr", kClassical, RuleKind::Other, true},
        {"Infinity_Base", kCore | Gate::Infinity, RuleKind::Other, false},
        {"Infinity_Step", kCore | Gate::Infinity, RuleKind::Other, false},
        {"Comprehension", kCore | Gate::Comprehension, RuleKind::Other, false},
    };
    return info;
}

RuleCatalog::RuleCatalog(const Theory& thy) : thy_(thy) {
    Builder bd{thy_, Prover(thy_), rules_, index_};
    const Prover& pr = bd.pr;
    const Type B = Type::boolean();
    const Type A = Type::var("?a");
    const Type Bt = Type::var("?b");
    const Term p = Term::free("?p", B), q = Term::free("?q", B), r = Term::free("?r", B);
    const Term P = Term::free("?P", S::pred_type(A)), x = Term::free("?x", A);
    const Term a = Term::free("?a", A), b = Term::free("?b", A), c = Term::free("?c", A);
    const Term f = Term::free("?f", Type::fun(A, Bt)), g = Term::free("?g", Type::fun(A, Bt));
    const Term F = S::mk_false(), T = S::mk_true();
    // Local eigenvariables of the derivations below.
    const Term rr = Term::free("r", B), qq = Term::free("q", B), pp = Term::free("p", B);
    const Term PP = Term::free("P", S::pred_type(A)), y = Term::free("y", A);
    auto imp = [](const Term& l, const Term& rgt) { return S::mk_imp(l, rgt); };
    auto eq = [](const Term& l, const Term& rgt) { return S::mk_eq(l, rgt); };
    const PremiseShape fact{0, 0}, one_assm{0, 1};

    // Intuitionistic layer.
    {
        Thm th = pr.spec(pr.conv(pr.assume(F), S::mk_all(pp, pp)), p);
        bd.add("Falsity_E", th, {F}, {fact}, kCore, RuleKind::Elim, "ex falso");
    }
    bd.add("Neg_I", pr.conv(pr.assume(imp(p, F)), S::mk_not(p)), {imp(p, F)}, {one_assm}, kCore, RuleKind::Intro,
           "negation unfolds to p ⟶ ⊥");
    {
        Thm bot = pr.mp(pr.conv(pr.assume(S::mk_not(p)), imp(p, F)), pr.assume(p));
        bd.add("Neg_E", bd.use("Falsity_E", {bot}, {{"p", q}}), {S::mk_not(p), p}, {fact, fact}, kCore,
               RuleKind::Elim, "");
    }
    bd.add("Truth_I", pr.conv(pr.disch(F, pr.assume(F)), T), {}, {}, kCore, RuleKind::Intro, "");
    {
        Term h = imp(p, imp(q, rr));
        Thm th = pr.mp(pr.mp(pr.assume(h), pr.assume(p)), pr.assume(q));
        th = pr.conv(pr.gen(rr, pr.disch(h, th)), S::mk_conj(p, q));
        bd.add("Conj_I", th, {p, q}, {fact, fact}, kCore, RuleKind::Intro, "");
    }
    {
        Term cj = S::mk_conj(p, q);
        Thm unf = pr.conv(pr.assume(cj), S::mk_all(rr, imp(imp(p, imp(q, rr)), rr)));
        Thm k1 = pr.disch(p, pr.disch(q, pr.assume(p)));
        Thm k2 = pr.disch(p, pr.disch(q, pr.assume(q)));
        bd.add("Conj_E1", pr.mp(pr.spec(unf, p), k1), {cj}, {fact}, kCore, RuleKind::Elim, "");
        bd.add("Conj_E2", pr.mp(pr.spec(unf, q), k2), {cj}, {fact}, kCore, RuleKind::Elim, "");
        Term h = imp(p, imp(q, r));
        bd.add("Conj_E", pr.mp(pr.spec(unf, r), pr.assume(h)), {cj, h}, {fact, {0, 2}}, kCore, RuleKind::Elim, "");
    }
    {
        Term h1 = imp(p, rr), h2 = imp(q, rr);
        Term dj = S::mk_disj(p, q);
        Thm i1 = pr.conv(pr.gen(rr, pr.disch(h1, pr.disch(h2, pr.mp(pr.assume(h1), pr.assume(p))))), dj);
        Thm i2 = pr.conv(pr.gen(rr, pr.disch(h1, pr.disch(h2, pr.mp(pr.assume(h2), pr.assume(q))))), dj);
        bd.add("Disj_I1", i1, {p}, {fact}, kCore, RuleKind::Intro, "");
        bd.add("Disj_I2", i2, {q}, {fact}, kCore, RuleKind::Intro, "");
        Thm unf = pr.conv(pr.assume(dj), S::mk_all(rr, imp(imp(p, rr), imp(imp(q, rr), rr))));
        Term e1 = imp(p, r), e2 = imp(q, r);
        Thm e = pr.mp(pr.mp(pr.spec(unf, r), pr.assume(e1)), pr.assume(e2));
        bd.add("Disj_E", e, {dj, e1, e2}, {fact, one_assm, one_assm}, kCore, RuleKind::Elim, "");
    }
    {
        Term h = S::mk_all(y, imp(app(P, y), qq));
        Thm th = pr.mp(pr.spec(pr.assume(h), x), pr.assume(app(P, x)));
        th = pr.conv(pr.gen(qq, pr.disch(h, th)), S::mk_ex_pred(P));
        bd.add("Ex_I", th, {app(P, x)}, {fact}, kCore, RuleKind::Intro, "");
        Term ex = S::mk_ex_pred(P);
        Thm unf = pr.conv(pr.assume(ex), S::mk_all(qq, imp(S::mk_all(y, imp(app(P, y), qq)), qq)));
        Term prem = S::mk_all(y, imp(app(P, y), q));
        bd.add("Ex_E", pr.mp(pr.spec(unf, q), pr.assume(prem)), {ex, prem}, {fact, {1, 1}}, kCore, RuleKind::Elim,
               "");
    }
    {
        Thm th = pr.gen(PP, pr.disch(app(PP, a), pr.assume(app(PP, a))));
        bd.add("Refl", pr.conv(th, eq(a, a)), {}, {}, kCore, RuleKind::Intro, "");
        Thm unf = pr.conv(pr.assume(eq(a, b)), S::mk_all(PP, imp(app(PP, a), app(PP, b))));
        bd.add("Subst", pr.mp(pr.spec(unf, P), pr.assume(app(P, a))), {eq(a, b), app(P, a)}, {fact, fact}, kCore,
               RuleKind::Elim, "");
    }
    auto refl = [&](const Term& t) { return bd.use("Refl", {}, {}, eq(t, t)); };
    {
        Term z = Term::free("z", A);
        Thm sym = bd.use("Subst", {pr.assume(eq(a, b)), refl(a)}, {{"P", lambda(z, eq(z, a))}});
        bd.add("Sym", sym, {eq(a, b)}, {fact}, kCore, RuleKind::Elim, "");
        Thm ss = bd.use("Subst", {sym, pr.assume(app(P, b))}, {{"P", P}});
        bd.add("Subst_sym", ss, {eq(a, b), app(P, b)}, {fact, fact}, kCore, RuleKind::Elim, "");
        Thm tr = bd.use("Subst", {pr.assume(eq(b, c)), pr.assume(eq(a, b))}, {{"P", lambda(z, eq(a, z))}});
        bd.add("Trans", tr, {eq(a, b), eq(b, c)}, {fact, fact}, kCore, RuleKind::Elim, "");
    }
    {
        Term h = Term::free("h", Type::fun(A, Bt));
        Term z = Term::free("z", A);
        Thm fc = bd.use("Subst", {pr.assume(eq(f, g)), refl(app(f, x))}, {{"P", lambda(h, eq(app(f, x), app(h, x)))}});
        bd.add("Fun_cong", fc, {eq(f, g)}, {fact}, kCore, RuleKind::Elim, "");
        Thm ac = bd.use("Subst", {pr.assume(eq(a, b)), refl(app(f, a))}, {{"P", lambda(z, eq(app(f, a), app(f, z)))}});
        bd.add("Arg_cong", ac, {eq(a, b)}, {fact}, kCore, RuleKind::Elim, "");
        Thm s1 = bd.use("Fun_cong", {pr.assume(eq(f, g))}, {{"x", a}});
        Thm s2 = bd.use("Arg_cong", {pr.assume(eq(a, b))}, {{"f", g}});
        bd.add("Cong", bd.use("Trans", {s1, s2}), {eq(f, g), eq(a, b)}, {fact, fact}, kCore, RuleKind::Elim, "");
    }
    {
        Term z = Term::free("z", B);
        Thm e1 = bd.use("Subst", {pr.assume(eq(p, q)), pr.assume(p)}, {{"P", lambda(z, z)}});
        bd.add("Iff_E1", e1, {eq(p, q), p}, {fact, fact}, kCore, RuleKind::Elim, "");
        Thm e2 = bd.use("Subst_sym", {pr.assume(eq(p, q)), pr.assume(q)}, {{"P", lambda(z, z)}});
        bd.add("Iff_E2", e2, {eq(p, q), q}, {fact, fact}, kCore, RuleKind::Elim, "");
    }
    bd.add("Imp_I", pr.assume(imp(p, q)), {imp(p, q)}, {one_assm}, kCore, RuleKind::Intro, "");
    bd.add("Imp_E", pr.mp(pr.assume(imp(p, q)), pr.assume(p)), {imp(p, q), p}, {fact, fact}, kCore, RuleKind::Elim,
           "");
    {
        Term all = S::mk_all(y, app(P, y));
        bd.add("Uni_I", pr.assume(all), {all}, {{1, 0}}, kCore, RuleKind::Intro, "");
        bd.add("Uni_E", pr.spec(pr.assume(all), x), {all}, {fact}, kCore, RuleKind::Elim, "");
    }

    // Gated axioms in rule form.
    if (thy_.enabled(Gate::Ext)) {
        Term h1 = imp(p, q), h2 = imp(q, p);
        Thm pq = pr.mp(pr.assume(h1), pr.assume(p));
        Thm qp = pr.mp(pr.assume(h2), pr.assume(q));
        bd.add("Iff_I", Kernel::iff_intro(thy_, pq, qp, p, q), {h1, h2}, {one_assm, one_assm}, kExt, RuleKind::Intro,
               "");
        Term xa = Term::free("x", A);
        Term prem = S::mk_all(xa, eq(app(f, xa), app(g, xa)));
        Thm ext = Kernel::extension(thy_, pr.spec(pr.assume(prem), xa), xa);
        bd.add("Extension", ext, {prem}, {{1, 0}}, kExt, RuleKind::Intro, "");
    }
    if (thy_.enabled(Gate::Choice)) {
        bd.add("Choice", Kernel::choice(thy_, pr.assume(app(P, x)), P, x), {app(P, x)}, {fact}, kChoice,
               RuleKind::Other, "");
    }
    if (thy_.enabled(Gate::Infinity)) {
        Term zero = Term::constant(S::cname::kZero, Type::ind());
        Term succ = Term::constant(S::cname::kSucc, Type::fun(Type::ind(), Type::ind()));
        Term n = Term::free("x", Type::ind());
        Thm base = pr.conv(Kernel::infinity_base(thy_), S::mk_all(n, S::mk_not(eq(app(succ, n), zero))));
        bd.add("Infinity_Base", base, {}, {}, kCore | Gate::Infinity, RuleKind::Other, "");
        bd.add("Infinity_Step", Kernel::infinity_step(thy_), {}, {}, kCore | Gate::Infinity, RuleKind::Other, "");
    }
    if (thy_.enabled(Gate::Comprehension)) {
        bd.add("Comprehension", Kernel::comprehension(thy_, P, a), {}, {}, kCore | Gate::Comprehension,
               RuleKind::Other, "");
    }

    // Classical layer: excluded middle from choice and extensionality
    // (Diaconescu), then Imp_C, and the remaining rules from Imp_C.
    if (thy_.enabled(Gate::Ext) && thy_.enabled(Gate::Choice)) {
        Term xb = Term::free("x", B);
        Term U = lambda(xb, S::mk_disj(xb, p));
        Term V = lambda(xb, S::mk_disj(S::mk_not(xb), p));
        Term u = S::mk_eps(U), v = S::mk_eps(V);
        Term lem = S::mk_disj(p, S::mk_not(p));
        Thm truth = bd.rule("Truth_I").thm;
        Thm nf = bd.use("Neg_I", {pr.disch(F, pr.assume(F))});
        Thm cu = Kernel::choice(thy_, bd.use("Disj_I1", {truth}, {{"q", p}}), U, T);
        Thm cv = Kernel::choice(thy_, bd.use("Disj_I1", {nf}, {{"q", p}}), V, F);
        // {p} ⊢ u = v
        Thm to_v = pr.disch(S::mk_disj(xb, p), bd.use("Disj_I2", {pr.assume(p)}, {{"p", S::mk_not(xb)}}));
        Thm to_u = pr.disch(S::mk_disj(S::mk_not(xb), p), bd.use("Disj_I2", {pr.assume(p)}, {{"p", xb}}));
        Thm uv_x = bd.use("Iff_I", {to_v, to_u});
        Thm uv = Kernel::extension(thy_, uv_x, xb);
        Term eps = Term::constant(S::cname::kEps, Type::fun(S::pred_type(B), B));
        Thm same = bd.use("Arg_cong", {uv}, {{"f", eps}});
        // u, ¬v ⊢ ¬p
        Thm vv = bd.use("Iff_E1", {same, pr.assume(u)});
        Thm bot = bd.use("Neg_E", {pr.assume(S::mk_not(v)), vv}, {{"q", F}});
        Thm np = bd.use("Neg_I", {pr.disch(p, bot)});
        Thm from_p = pr.disch(p, bd.use("Disj_I1", {pr.assume(p)}, {{"q", S::mk_not(p)}}));
        Thm from_nv = pr.disch(S::mk_not(v), bd.use("Disj_I2", {np}, {{"p", p}}));
        Thm inner = bd.use("Disj_E", {cv, from_nv, from_p});
        Thm lem0 = bd.use("Disj_E", {cu, pr.disch(u, inner), from_p});

        // Imp_C
        Term prem = imp(imp(p, q), p);
        Thm case_np = pr.mp(pr.assume(prem), pr.disch(p, bd.use("Neg_E", {pr.assume(S::mk_not(p)), pr.assume(p)},
                                                                 {{"q", q}})));
        Thm impc = bd.use("Disj_E", {lem0, pr.disch(p, pr.assume(p)), pr.disch(S::mk_not(p), case_np)});
        bd.add("Imp_C", impc, {prem}, {one_assm}, kClassical, RuleKind::Other, "Peirce's law as a rule");

        // LEM through Imp_C at q := ⊥
        Term h = imp(lem, F);
        Thm np2 = bd.use("Neg_I", {pr.disch(p, pr.mp(pr.assume(h), bd.use("Disj_I1", {pr.assume(p)},
                                                                             {{"q", S::mk_not(p)}})))});
        Thm step = pr.disch(h, bd.use("Disj_I2", {np2}, {{"p", p}}));
        bd.add("LEM", bd.use("Imp_C", {step}), {}, {}, kClassical, RuleKind::Other, "");

        Term hp = imp(p, F);
        Thm npp = bd.use("Neg_I", {pr.assume(hp)});
        Term cprem = imp(S::mk_not(p), p);
        Thm cl = bd.use("Imp_C", {pr.disch(hp, pr.mp(pr.assume(cprem), npp))});
        bd.add("classical", cl, {cprem}, {one_assm}, kClassical, RuleKind::Other, "");
        Term ccprem = imp(S::mk_not(p), F);
        Thm absurd = bd.use("Falsity_E", {pr.mp(pr.assume(ccprem), npp)}, {{"p", p}});
        Thm cc = bd.use("Imp_C", {pr.disch(hp, absurd)});
        bd.add("ccontr", cc, {ccprem}, {one_assm}, kClassical, RuleKind::Other, "");
    }

    // Order rules as in known().
    std::vector<Rule> ordered;
    std::map<std::string, std::size_t> idx;
    for (const auto& info : known()) {
        auto it = index_.find(info.name);
        if (it == index_.end()) continue;
        idx[info.name] = ordered.size();
        ordered.push_back(rules_[it->second]);
    }
    rules_ = std::move(ordered);
    index_ = std::move(idx);
}

const Rule* RuleCatalog::find(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? nullptr : &rules_[it->second];
}

const Rule& RuleCatalog::get(const std::string& name) const {
    if (const Rule* r = find(name)) return *r;
    for (const auto& info : known()) {
        if (info.name != name) continue;
        for (kernel::Gate g : kernel::kAllGates)
            if (info.required.contains(g) && !thy_.enabled(g))
                throw GateError(std::string(kernel::gate_name(g)), "rule " + name);
    }
    throw Error("unknown rule " + name);
}

Thm RuleCatalog::derive_classical(const std::string& name) const {
    bool ok = false;
    for (const auto& info : known()) ok = ok || (info.name == name && info.classical);
    if (!ok) throw Error(name + " is not a classical rule");
    return derive(name);
}

std::vector<CatalogEntry> RuleCatalog::listing() const {
    std::vector<CatalogEntry> out;
    for (const auto& info : known()) {
        const Rule* r = find(info.name);
        const char* kind = info.kind == RuleKind::Intro ? "intro" : info.kind == RuleKind::Elim ? "elim" : "other";
        out.push_back({info.name, r ? r->statement() : std::string(), info.required.names(), r != nullptr, kind});
    }
    return out;
}

}  // namespace mhl::derived
