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

#include "mhl/derived/theories.hpp"

#include "mhl/error.hpp"
#include "mhl/syntax/logic.hpp"

namespace mhl::derived {

namespace cn = syntax::cname;
using kernel::Kernel;
using syntax::lambda;
using syntax::mk_all;
using syntax::mk_imp;

Theory standard_theory(GateSet gates) {
    Theory thy = Theory::bootstrap().with_gates(gates);
    Type b = Type::boolean();
    Type a = syntax::alpha();
    Term p = Term::free("p", b), q = Term::free("q", b), r = Term::free("r", b);
    Term P = Term::free("P", syntax::pred_type(a)), x = Term::free("x", a);
    auto def = [&](const char* name, const Term& rhs) { thy = Kernel::define(thy, name, rhs).first; };

    Term falsum = mk_all(p, p);
    def(cn::kFalse, falsum);
    Term F = Term::constant(cn::kFalse, b);
    def(cn::kNot, lambda(p, mk_imp(p, F)));
    def(cn::kTrue, syntax::mk_not(F));
    def(cn::kConj, lambda(p, lambda(q, mk_all(r, mk_imp(mk_imp(p, mk_imp(q, r)), r)))));
    def(cn::kDisj, lambda(p, lambda(q, mk_all(r, mk_imp(mk_imp(p, r), mk_imp(mk_imp(q, r), r))))));
    def(cn::kEx, lambda(P, mk_all(q, mk_imp(mk_all(x, mk_imp(Term::app(P, x), q)), q))));
    return thy;
}

Thm Prover::inst(const Thm& th, const syntax::TermSubst& s) const {
    syntax::TypeSubst tys;
    for (const auto& [k, v] : s) {
        if (!k.is_free()) throw KernelError("inst: not a variable");
        if (!syntax::match_type(k.type(), thy_.type_of(v), tys))
            throw TypeError("inst: cannot instantiate " + k.name() + " at type " + thy_.type_of(v).to_string());
    }
    return Kernel::inst_thm(thy_, th, tys, s);
}

}  // namespace mhl::derived
