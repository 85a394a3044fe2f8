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

#ifndef MHL_DERIVED_THEORIES_HPP
#define MHL_DERIVED_THEORIES_HPP

#include "mhl/kernel/thm.hpp"

namespace mhl::derived {

using kernel::GateSet;
using kernel::Theory;
using kernel::Thm;
using syntax::Term;
using syntax::Type;

// Bootstrap theory with the requested gates plus the definitions of ⊥ ¬ ⊤ ∧
// ∨ ∃ (equality comes with the bootstrap).
Theory standard_theory(GateSet gates = GateSet::core());

// Thin conveniences over Kernel; every result is still a kernel Thm.
class Prover {
public:
    explicit Prover(const Theory& thy) : thy_(thy) {}
    const Theory& theory() const { return thy_; }

    Thm assume(const Term& t) const { return kernel::Kernel::assume(thy_, t); }
    Thm disch(const Term& t, const Thm& th) const { return kernel::Kernel::imp_intro(thy_, t, th); }
    Thm mp(const Thm& imp, const Thm& ante) const { return kernel::Kernel::imp_elim(imp, ante); }
    Thm gen(const Term& x, const Thm& th) const { return kernel::Kernel::all_intro(x, th); }
    Thm spec(const Thm& th, const Term& t) const { return kernel::Kernel::all_elim(thy_, th, t); }
    Thm conv(const Thm& th, const Term& target) const { return kernel::Kernel::unfold_conv(thy_, th, target); }
    // Instantiate free variables of `th` (types inferred from the values).
    Thm inst(const Thm& th, const syntax::TermSubst& s) const;

private:
    const Theory& thy_;
};

}  // namespace mhl::derived

#endif
