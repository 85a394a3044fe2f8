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

#include <algorithm>
#include <iterator>

#include "mhl/error.hpp"
#include "mhl/kernel/thm.hpp"
#include "mhl/syntax/logic.hpp"
#include "mhl/syntax/pretty.hpp"

namespace mhl::kernel {

namespace cn = syntax::cname;
using syntax::normalize;
using syntax::pretty;

namespace {

Term checked_bool(const Theory& thy, const Term& t, const char* rule) {
    if (t.loose_bound() != 0) throw KernelError(std::string(rule) + ": term has dangling bound variables");
    Type ty = thy.type_of(t);
    if (!ty.is_bool()) throw KernelError(std::string(rule) + ": not boolean: " + pretty(t) + " :: " + ty.to_string());
    return normalize(t);
}

std::vector<Term> hyp_union(const std::vector<Term>& a, const std::vector<Term>& b) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<Term> hyp_remove(const std::vector<Term>& hs, const Term& t) {
    std::vector<Term> out;
    out.reserve(hs.size());
    for (const Term& h : hs)
        if (h != t) out.push_back(h);
    return out;
}

std::vector<Term> hyp_canon(std::vector<Term> hs) {
    std::sort(hs.begin(), hs.end());
    hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
    return hs;
}

void require_gate(const Theory& thy, Gate g, const char* rule) {
    if (!thy.enabled(g)) throw GateError(std::string(gate_name(g)), rule);
}

bool free_in_hyps(const Term& x, const std::vector<Term>& hs) {
    return std::any_of(hs.begin(), hs.end(), [&](const Term& h) { return syntax::occurs_free(x, h); });
}

}  // namespace

bool Thm::has_hyp(const Term& t) const { return std::binary_search(hyps_.begin(), hyps_.end(), t); }

std::string Thm::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < hyps_.size(); ++i) out += (i ? ", " : "") + pretty(hyps_[i]);
    return out + (hyps_.empty() ? "⊢ " : " ⊢ ") + pretty(concl_);
}

Thm Kernel::assume(const Theory& thy, const Term& phi) {
    Term p = checked_bool(thy, phi, "assume");
    return Thm({p}, p, GateSet::core());
}

Thm Kernel::imp_intro(const Theory& thy, const Term& phi, const Thm& th) {
    Term p = checked_bool(thy, phi, "imp_intro");
    return Thm(hyp_remove(th.hyps_, p), syntax::mk_imp(p, th.concl_), th.gates_);
}

Thm Kernel::imp_elim(const Thm& imp, const Thm& ante) {
    auto parts = syntax::dest_imp(imp.concl_);
    if (!parts) throw KernelError("imp_elim: not an implication: " + pretty(imp.concl_));
    if (parts->first != ante.concl_)
        throw KernelError("imp_elim: antecedent " + pretty(parts->first) + " does not match " + pretty(ante.concl_));
    return Thm(hyp_union(imp.hyps_, ante.hyps_), parts->second, imp.gates_ | ante.gates_);
}

Thm Kernel::all_intro(const Term& x, const Thm& th) {
    if (!x.is_free()) throw KernelError("all_intro: not a free variable");
    if (free_in_hyps(x, th.hyps_)) throw KernelError("all_intro: " + x.name() + " occurs free in a hypothesis");
    return Thm(th.hyps_, normalize(syntax::mk_all(x, th.concl_)), th.gates_);
}

Thm Kernel::all_elim(const Theory& thy, const Thm& th, const Term& t) {
    auto pred = syntax::dest_all(th.concl_);
    if (!pred) throw KernelError("all_elim: not a universal: " + pretty(th.concl_));
    if (t.loose_bound() != 0) throw KernelError("all_elim: term has dangling bound variables");
    Type want = syntax::type_of(*pred).domain();
    Type got = thy.type_of(t);
    if (!(want == got))
        throw KernelError("all_elim: instance " + pretty(t) + " has type " + got.to_string() + ", expected " +
                          want.to_string());
    return Thm(th.hyps_, normalize(Term::app(*pred, t)), th.gates_);
}

Thm Kernel::inst_thm(const Theory& thy, const Thm& th, const syntax::TypeSubst& tys, const syntax::TermSubst& terms) {
    for (const auto& [k, v] : terms) {
        if (!k.is_free()) throw KernelError("inst_thm: can only instantiate free variables");
        if (free_in_hyps(k, th.hyps_))
            throw KernelError("inst_thm: " + k.name() + " occurs free in a hypothesis");
        thy.type_of(v);
    }
    for (const auto& [_, ty] : tys) thy.signature().check_type(ty);
    std::vector<Term> hs;
    hs.reserve(th.hyps_.size());
    for (const Term& h : th.hyps_) hs.push_back(normalize(syntax::instantiate(h, tys, {})));
    Term c = normalize(syntax::instantiate(th.concl_, tys, terms));
    return Thm(hyp_canon(std::move(hs)), c, th.gates_);
}

std::pair<Theory, Thm> Kernel::define(const Theory& thy, const std::string& name, const Term& definiens) {
    if (thy.signature().has_constant(name)) throw KernelError("define: constant " + name + " already exists");
    if (definiens.has_free_vars() || definiens.loose_bound() != 0)
        throw KernelError("define: definiens of " + name + " is not closed");
    Type ty = thy.type_of(definiens);
    std::set<std::string> in_def, in_ty;
    syntax::collect_type_vars(definiens, in_def);
    syntax::collect_type_vars(ty, in_ty);
    for (const auto& v : in_def)
        if (!in_ty.count(v)) throw KernelError("define: type variable '" + v + " of the definiens is hidden");
    Theory out = thy;
    Term rhs = normalize(definiens);
    out.sig_.add_constant(name, ty);
    out.defs_.emplace(name, rhs);
    out.def_order_.push_back(name);
    Thm th = definition_thm(out, name);
    return {std::move(out), std::move(th)};
}

Thm Kernel::definition_thm(const Theory& thy, const std::string& name) {
    auto rhs = thy.definition(name);
    if (!rhs) throw KernelError("definition_thm: " + name + " is not a defined constant");
    Term c = Term::constant(name, *thy.signature().constant_type(name));
    return Thm({}, syntax::mk_eq(c, *rhs), GateSet::core());
}

Theory Kernel::declare(const Theory& thy, const std::string& name, const Type& type) {
    if (thy.signature().has_constant(name)) throw KernelError("declare: constant " + name + " already exists");
    Theory out = thy;
    out.sig_.add_constant(name, type);
    return out;
}

Thm Kernel::unfold_conv(const Theory& thy, const Thm& th, const Term& target) {
    Term t = checked_bool(thy, target, "unfold_conv");
    if (normalize(thy.unfold_all(t)) != normalize(thy.unfold_all(th.concl_)))
        throw KernelError("unfold_conv: " + pretty(t) + " is not definitionally equal to " + pretty(th.concl_));
    return Thm(th.hyps_, t, th.gates_);
}

Thm Kernel::iff_intro(const Theory& thy, const Thm& pq, const Thm& qp, const Term& p, const Term& q) {
    require_gate(thy, Gate::Ext, "Iff_I");
    Term pn = checked_bool(thy, p, "iff_intro");
    Term qn = checked_bool(thy, q, "iff_intro");
    if (pq.concl_ != qn) throw KernelError("iff_intro: first premise does not prove " + pretty(qn));
    if (qp.concl_ != pn) throw KernelError("iff_intro: second premise does not prove " + pretty(pn));
    return Thm(hyp_union(hyp_remove(pq.hyps_, pn), hyp_remove(qp.hyps_, qn)), syntax::mk_eq(pn, qn),
               pq.gates_ | qp.gates_ | Gate::Ext);
}

Thm Kernel::extension(const Theory& thy, const Thm& th, const Term& x) {
    require_gate(thy, Gate::Ext, "Extension");
    if (!x.is_free()) throw KernelError("extension: not a free variable");
    auto eq = syntax::dest_eq(th.concl_);
    if (!eq) throw KernelError("extension: not an equation: " + pretty(th.concl_));
    if (free_in_hyps(x, th.hyps_)) throw KernelError("extension: " + x.name() + " occurs free in a hypothesis");
    Term l = normalize(syntax::lambda(x, eq->first));
    Term r = normalize(syntax::lambda(x, eq->second));
    return Thm(th.hyps_, syntax::mk_eq(l, r), th.gates_ | Gate::Ext);
}

Thm Kernel::choice(const Theory& thy, const Thm& th, const Term& p, const Term& t) {
    require_gate(thy, Gate::Choice, "Choice");
    if (p.loose_bound() != 0 || t.loose_bound() != 0) throw KernelError("choice: dangling bound variables");
    Type pt = thy.type_of(p);
    if (!pt.is_fun() || !pt.codomain().is_bool()) throw KernelError("choice: not a predicate: " + pretty(p));
    if (!(thy.type_of(t) == pt.domain())) throw KernelError("choice: witness has the wrong type");
    if (normalize(Term::app(p, t)) != th.concl_)
        throw KernelError("choice: premise is not " + pretty(normalize(Term::app(p, t))));
    return Thm(th.hyps_, normalize(Term::app(p, syntax::mk_eps(p))), th.gates_ | Gate::Choice);
}

Thm Kernel::infinity_base(const Theory& thy) {
    require_gate(thy, Gate::Infinity, "Infinity_Base");
    Term zero = Term::constant(cn::kZero, Type::ind());
    Term succ = Term::constant(cn::kSucc, Type::fun(Type::ind(), Type::ind()));
    Term x = Term::free("x", Type::ind());
    Term p = Term::free("p", Type::boolean());
    Term falsum = syntax::mk_all(p, p);
    Term body = syntax::mk_imp(syntax::mk_eq(Term::app(succ, x), zero), falsum);
    return Thm({}, normalize(syntax::mk_all(x, body)), GateSet::core() | Gate::Infinity);
}

Thm Kernel::infinity_step(const Theory& thy) {
    require_gate(thy, Gate::Infinity, "Infinity_Step");
    Term succ = Term::constant(cn::kSucc, Type::fun(Type::ind(), Type::ind()));
    Term x = Term::free("x", Type::ind());
    Term y = Term::free("y", Type::ind());
    Term body = syntax::mk_imp(syntax::mk_eq(Term::app(succ, x), Term::app(succ, y)), syntax::mk_eq(x, y));
    return Thm({}, normalize(syntax::mk_all(x, syntax::mk_all(y, body))), GateSet::core() | Gate::Infinity);
}

Thm Kernel::comprehension(const Theory& thy, const Term& p, const Term& a) {
    require_gate(thy, Gate::Comprehension, "Comprehension");
    if (p.loose_bound() != 0 || a.loose_bound() != 0) throw KernelError("comprehension: dangling bound variables");
    Type pt = thy.type_of(p);
    if (!pt.is_fun() || !pt.codomain().is_bool()) throw KernelError("comprehension: not a predicate: " + pretty(p));
    if (!(thy.type_of(a) == pt.domain())) throw KernelError("comprehension: element has the wrong type");
    Term lhs = syntax::mk_mem(a, syntax::mk_collect(p));
    return Thm({}, normalize(syntax::mk_eq(lhs, Term::app(p, a))), GateSet::core() | Gate::Comprehension);
}

const std::vector<ManifestEntry>& kernel_manifest() {
    static const std::vector<ManifestEntry> entries = {
        {"assume", "CORE", "{φ} ⊢ φ"},
        {"imp_intro", "CORE", "Γ ⊢ ψ  ⟹  Γ - {φ} ⊢ φ ⟶ ψ"},
        {"imp_elim", "CORE", "Γ ⊢ φ ⟶ ψ,  Δ ⊢ φ  ⟹  Γ ∪ Δ ⊢ ψ"},
        {"all_intro", "CORE", "Γ ⊢ φ,  x ∉ FV(Γ)  ⟹  Γ ⊢ ∀x. φ"},
        {"all_elim", "CORE", "Γ ⊢ ∀x. φ  ⟹  Γ ⊢ φ[t/x]"},
        {"inst_thm", "CORE", "Γ ⊢ φ,  x̄ ∉ FV(Γ)  ⟹  Γθ ⊢ φθ[t̄/x̄]"},
        {"define", "CORE", "c fresh, t closed  ⟹  ⊢ c = t"},
        {"definition_thm", "CORE", "c defined as t  ⟹  ⊢ c = t"},
        {"unfold_conv", "CORE", "Γ ⊢ φ,  φ ≡δβη ψ  ⟹  Γ ⊢ ψ"},
        {"iff_intro", "EXT", "Γ ⊢ q,  Δ ⊢ p  ⟹  Γ - {p} ∪ Δ - {q} ⊢ p = q"},
        {"extension", "EXT", "Γ ⊢ s = t,  x ∉ FV(Γ)  ⟹  Γ ⊢ (λx. s) = (λx. t)"},
        {"choice", "CHOICE", "Γ ⊢ p t  ⟹  Γ ⊢ p (ε p)"},
        {"infinity_base", "INFINITY", "⊢ ∀x. ¬ (succ x = zero)"},
        {"infinity_step", "INFINITY", "⊢ ∀x y. succ x = succ y ⟶ x = y"},
        {"comprehension", "COMPREHENSION", "⊢ (a ∈ Collect p) = p a"},
    };
    return entries;
}

}  // namespace mhl::kernel
