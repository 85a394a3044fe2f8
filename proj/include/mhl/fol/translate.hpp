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

#ifndef MHL_FOL_TRANSLATE_HPP
#define MHL_FOL_TRANSLATE_HPP

#include "mhl/fol/proof.hpp"

namespace mhl::fol {

// ND proof of z ⇝ p to an axiomatic proof of p from the hypotheses z (Hyp
// leaves). The input must pass nd_check; Error otherwise.
AxProof nd_to_ax_open(const NdProof& proof, const FolSequent& claim);

// ND proof of z ⇝ p to a closed axiomatic proof of z1 ⟶ ... ⟶ zk ⟶ p; for
// z = [] this is a proof of p itself.
AxProof nd_to_ax(const NdProof& proof, const FolSequent& claim);

// Axiomatic proof of φ from `hyps` to an ND proof of hyps ⇝ φ. The input
// must pass ax_check; Error otherwise.
NdProof ax_to_nd(const AxProof& proof, const FolFormula& phi, std::span<const FolFormula> hyps = {});

// Replace an eigenconstant throughout an axiomatic proof.
AxProof rename_const(const AxProof& proof, const std::string& from, const std::string& to);

}  // namespace mhl::fol

#endif
