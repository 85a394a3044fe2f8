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

#ifndef MHL_KERNEL_THM_HPP
#define MHL_KERNEL_THM_HPP

#include <string>
#include <utility>
#include <vector>

#include "mhl/kernel/gates.hpp"
#include "mhl/kernel/theory.hpp"
#include "mhl/syntax/term.hpp"

namespace mhl::kernel {

// A certified judgment `hyps ⊢ concl`. Only Kernel can build one. Hypotheses
// and conclusion are kept in beta-eta normal form; hyps is sorted and
// duplicate free.
class Thm {
public:
    const std::vector<Term>& hyps() const { return hyps_; }
    const Term& concl() const { return concl_; }
    GateSet gates() const { return gates_; }
    bool has_hyp(const Term& t) const;

    std::string to_string() const;

private:
    friend class Kernel;
    Thm(std::vector<Term> hyps, Term concl, GateSet gates)
        : hyps_(std::move(hyps)), concl_(std::move(concl)), gates_(gates) {}

    std::vector<Term> hyps_;
    Term concl_;
    GateSet gates_;
};

// The trusted rule set. Every function here is listed in kernel_manifest().
class Kernel {
public:
    // {φ} ⊢ φ
    static Thm assume(const Theory& thy, const Term& phi);
    // Γ - {φ} ⊢ φ ⟶ ψ
    static Thm imp_intro(const Theory& thy, const Term& phi, const Thm& th);
    // Γ ⊢ φ ⟶ ψ,  Δ ⊢ φ  gives  Γ ∪ Δ ⊢ ψ
    static Thm imp_elim(const Thm& imp, const Thm& ante);
    // Γ ⊢ φ with x not free in Γ  gives  Γ ⊢ ∀x. φ
    static Thm all_intro(const Term& x, const Thm& th);
    // Γ ⊢ ∀x. φ  gives  Γ ⊢ φ[t/x]
    static Thm all_elim(const Theory& thy, const Thm& th, const Term& t);
    // Instantiate type variables everywhere and free term variables that do
    // not occur in the hypotheses.
    static Thm inst_thm(const Theory& thy, const Thm& th, const syntax::TypeSubst& tys, const syntax::TermSubst& terms);
    // Extend `thy` with `name` := definiens; returns ⊢ name = definiens.
    static std::pair<Theory, Thm> define(const Theory& thy, const std::string& name, const Term& definiens);
    // ⊢ name = definiens for a constant already defined in `thy`.
    static Thm definition_thm(const Theory& thy, const std::string& name);
    // Declare an uninterpreted constant (no axioms).
    static Theory declare(const Theory& thy, const std::string& name, const Type& type);
    // Γ ⊢ φ  gives  Γ ⊢ ψ when φ and ψ agree after unfolding definitions.
    static Thm unfold_conv(const Theory& thy, const Thm& th, const Term& target);

    // EXT: Γ ⊢ q (with p assumed), Δ ⊢ p (with q assumed)  gives  Γ-{p} ∪ Δ-{q} ⊢ p = q
    static Thm iff_intro(const Theory& thy, const Thm& pq, const Thm& qp, const Term& p, const Term& q);
    // EXT: Γ ⊢ s = t with x not free in Γ  gives  Γ ⊢ (λx. s) = (λx. t)
    static Thm extension(const Theory& thy, const Thm& th, const Term& x);
    // CHOICE: Γ ⊢ p t  gives  Γ ⊢ p (ε p)
    static Thm choice(const Theory& thy, const Thm& th, const Term& p, const Term& t);
    // INFINITY: ⊢ ∀x. succ x = zero ⟶ (∀p. p), i.e. ¬ (succ x = zero)
    // before the negation is folded.
    static Thm infinity_base(const Theory& thy);
    // INFINITY: ⊢ ∀x y. succ x = succ y ⟶ x = y
    static Thm infinity_step(const Theory& thy);
    // COMPREHENSION: ⊢ (a ∈ Collect p) = p a
    static Thm comprehension(const Theory& thy, const Term& p, const Term& a);
};

struct ManifestEntry {
    std::string name;
    std::string gate;
    std::string shape;
};

// Every Thm-producing operation of the kernel.
const std::vector<ManifestEntry>& kernel_manifest();

}  // namespace mhl::kernel

#endif
