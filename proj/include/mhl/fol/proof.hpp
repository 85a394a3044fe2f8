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

#ifndef MHL_FOL_PROOF_HPP
#define MHL_FOL_PROOF_HPP

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mhl/fol/formula.hpp"

namespace mhl::fol {

struct CheckResult {
    bool ok = true;
    std::string diagnostic;

    explicit operator bool() const { return ok; }
    static CheckResult accept() { return {}; }
    static CheckResult reject(std::string why) { return {false, std::move(why)}; }
};

// ---------------------------------------------------------------------------
// Natural deduction. Nodes carry only the data the checker cannot recover
// from the claimed sequent; sequents are propagated top-down.

enum class NdRule { Assm, FlsE, ImpI, ImpE, UniE, UniI, ImpC };

struct NdNode;
using NdProof = std::shared_ptr<const NdNode>;

struct NdNode {
    NdRule rule;
    std::optional<FolFormula> formula;  // ImpE: antecedent; UniE: the universal; ImpC: q
    std::optional<FolTerm> term;        // UniE
    std::string constant;               // UniI
    std::vector<NdProof> children;
};

namespace nd {
NdProof assm();
NdProof flse(NdProof falsity);
NdProof impi(NdProof body);
NdProof impe(FolFormula antecedent, NdProof major, NdProof minor);
NdProof unie(FolFormula universal, FolTerm t, NdProof child);
NdProof unii(std::string c, NdProof child);
NdProof impc(FolFormula q, NdProof child);
}  // namespace nd

const char* rule_name(NdRule r);
CheckResult nd_check(const NdProof& proof, const FolSequent& claim);
std::size_t nd_size(const NdProof& proof);
bool nd_uses_impc(const NdProof& proof);

// ---------------------------------------------------------------------------
// Axiomatic calculus: AK AT AX AY axioms, MP GR PR rules. Hyp leaves allow
// the hypothesis-extended calculus used by the deduction theorem; the closed
// calculus is ax_check with no hypotheses.

enum class AxRule { AK, AT, AX, AY, MP, GR, PR, Hyp };

struct AxNode;
using AxProof = std::shared_ptr<const AxNode>;

struct AxNode {
    AxRule rule;
    std::vector<FolFormula> formulas;  // axiom parameters or the Hyp formula
    std::optional<FolTerm> term;       // AY
    std::string constant;              // GR
    std::vector<AxProof> children;
    // Conclusion recorded by the builder. The checker verifies it against
    // the rule and the premises' verified conclusions.
    FolFormula concl;
};

namespace ax {
AxProof ak(FolFormula p, FolFormula q);               // p ⟶ q ⟶ p
AxProof at(FolFormula p, FolFormula q, FolFormula r);  // (q ⟶ r) ⟶ (r ⟶ p) ⟶ q ⟶ p
AxProof ax(FolFormula p);                              // ⊥ ⟶ p
AxProof ay(FolFormula universal, FolTerm t);           // ∀p ⟶ ⟨t⟩p
AxProof mp(AxProof major, AxProof minor);              // p ⟶ q, p ⊢ q
AxProof gr(std::string c, AxProof child);              // q ⟶ ⟨c⟩p ⊢ q ⟶ ∀p
AxProof pr(AxProof child);                             // (p ⟶ q) ⟶ p ⊢ p
AxProof hyp(FolFormula p);
}  // namespace ax

const char* rule_name(AxRule r);

constexpr unsigned rule_bit(AxRule r) { return 1u << static_cast<unsigned>(r); }
inline constexpr unsigned kAllAxRules = 0xffu;
inline constexpr unsigned kImplicationalRules =
    rule_bit(AxRule::AK) | rule_bit(AxRule::AT) | rule_bit(AxRule::MP) | rule_bit(AxRule::PR);

// Accepts iff every node is a correct instance of its rule (and of `allowed`),
// Hyp leaves name members of `hyps`, GR constants are fresh for the
// hypotheses their premise uses, and the root proves `claim`.
CheckResult ax_check(const AxProof& proof, const FolFormula& claim, std::span<const FolFormula> hyps = {},
                     unsigned allowed = kAllAxRules);
// Distinct nodes of the proof DAG, and the size of its tree unfolding.
std::size_t ax_dag_size(const AxProof& proof);
double ax_tree_size(const AxProof& proof);
bool ax_uses(const AxProof& proof, AxRule rule);
unsigned ax_rules_used(const AxProof& proof);

// ---------------------------------------------------------------------------
// Line-oriented storage: header lines, then one node per line in postorder,
// `Rule children ; param ; param`. `Ref k` repeats the node on line k of the
// node list (1-based) so shared subproofs stay shared.

struct NdDocument {
    FolSequent claim;
    NdProof proof;
};

struct AxDocument {
    std::vector<FolFormula> hyps;
    FolFormula goal;
    AxProof proof;
};

std::string write_nd(const NdProof& proof, const FolSequent& claim);
std::string write_ax(const AxProof& proof, const FolFormula& goal, std::span<const FolFormula> hyps = {});
NdDocument read_nd(std::string_view text, const std::string& file = "");
AxDocument read_ax(std::string_view text, const std::string& file = "");
// "nd" or "ax" from the calculus header line.
std::string document_calculus(std::string_view text);

}  // namespace mhl::fol

#endif
