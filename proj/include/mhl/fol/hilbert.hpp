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

#ifndef MHL_FOL_HILBERT_HPP
#define MHL_FOL_HILBERT_HPP

#include <map>
#include <string>
#include <vector>

#include "mhl/fol/proof.hpp"

namespace mhl::fol {

// Closed lemma proofs over AK, AT, MP and PR, obtained by replaying condensed
// detachment derivations. Arguments instantiate p, q, r in order.
//   I      p ⟶ p
//   B      (q ⟶ r) ⟶ (p ⟶ q) ⟶ p ⟶ r
//   C      (p ⟶ q ⟶ r) ⟶ q ⟶ p ⟶ r
//   W      (p ⟶ p ⟶ q) ⟶ p ⟶ q
//   S      (p ⟶ q ⟶ r) ⟶ (p ⟶ q) ⟶ p ⟶ r
//   Peirce ((p ⟶ q) ⟶ p) ⟶ p
AxProof lemma(const std::string& name, const std::vector<FolFormula>& args);
std::vector<std::string> lemma_names();
// Lemma instances are cached per thread so repeated uses are one shared node.
// Entering a scope trims an oversized cache; the cache is never trimmed in
// the middle of a scope, so the sharing inside one proof does not depend on
// history.
class LemmaCacheScope {
public:
    LemmaCacheScope();
    ~LemmaCacheScope();
    LemmaCacheScope(const LemmaCacheScope&) = delete;
    LemmaCacheScope& operator=(const LemmaCacheScope&) = delete;
};

// Statement of a lemma instance without building its proof.
FolFormula lemma_statement(const std::string& name, const std::vector<FolFormula>& args);

// From proofs of a ⟶ b and b ⟶ c, a proof of a ⟶ c.
AxProof compose(const AxProof& ab, const AxProof& bc);

// Replace Hyp leaves whose formula is a key of `with` by the mapped proofs.
AxProof replace_hyps(const AxProof& proof, const std::map<FolFormula, AxProof>& with);

// Discharge hypothesis χ: from a proof of ψ (hypotheses H ∪ {χ}) build a proof
// of χ ⟶ ψ from H. Handles MP, PR and leaves; a GR node whose premise uses χ
// raises Error.
AxProof deduction_theorem(const AxProof& proof, const FolFormula& chi);

}  // namespace mhl::fol

#endif
