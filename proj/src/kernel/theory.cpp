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

#include "mhl/kernel/theory.hpp"

#include "mhl/error.hpp"
#include "mhl/syntax/logic.hpp"

namespace mhl::kernel {

namespace cn = syntax::cname;
using syntax::TypeSubst;

namespace {

Term leibniz_definiens() {
    Type a = syntax::alpha();
    Type pa = syntax::pred_type(a);
    Term x = Term::free("a", a), y = Term::free("b", a), P = Term::free("P", pa);
    Term body = syntax::mk_all(P, syntax::mk_imp(Term::app(P, x), Term::app(P, y)));
    return syntax::lambda(x, syntax::lambda(y, body));
}

}  // namespace

Theory Theory::bootstrap() {
    Theory t;
    Type b = Type::boolean();
    Type a = syntax::alpha();
    t.sig_.add_constant(cn::kImp, Type::fun(b, Type::fun(b, b)));
    t.sig_.add_constant(cn::kAll, Type::fun(syntax::pred_type(a), b));
    t.sig_.add_constant(cn::kUndefined, a);
    t.sig_.add_constant(cn::kEq, Type::fun(a, syntax::pred_type(a)));
    t.defs_.emplace(cn::kEq, leibniz_definiens());
    t.def_order_.push_back(cn::kEq);
    return t;
}

std::optional<Term> Theory::definition(const std::string& name) const {
    auto it = defs_.find(name);
    if (it == defs_.end()) return std::nullopt;
    return it->second;
}

Theory Theory::with_gate(Gate g) const {
    if (gates_.contains(g)) return *this;
    Theory t = *this;
    Type a = syntax::alpha();
    Type b = Type::boolean();
    switch (g) {
        case Gate::Core:
        case Gate::Ext: break;
        case Gate::Choice: t.sig_.add_constant(cn::kEps, Type::fun(syntax::pred_type(a), a)); break;
        case Gate::Infinity:
            t.sig_.add_constant(cn::kZero, Type::ind());
            t.sig_.add_constant(cn::kSucc, Type::fun(Type::ind(), Type::ind()));
            break;
        case Gate::Comprehension:
            t.sig_.add_type_constructor(cn::kSetType, 1);
            t.sig_.add_constant(cn::kMem, Type::fun(a, Type::fun(syntax::set_type(a), b)));
            t.sig_.add_constant(cn::kCollect, Type::fun(syntax::pred_type(a), syntax::set_type(a)));
            break;
    }
    t.gates_ |= g;
    return t;
}

Theory Theory::with_gates(GateSet gs) const {
    Theory t = *this;
    for (Gate g : kAllGates)
        if (gs.contains(g)) t = t.with_gate(g);
    return t;
}

Term Theory::unfold_all(const Term& t) const {
    switch (t.kind()) {
        case Term::Kind::Const: {
            auto it = defs_.find(t.name());
            if (it == defs_.end()) return t;
            TypeSubst s;
            auto decl = sig_.constant_type(t.name());
            if (!decl || !syntax::match_type(*decl, t.type(), s))
                throw TypeError("constant " + t.name() + " used at an impossible type");
            return unfold_all(syntax::instantiate(it->second, s, {}));
        }
        case Term::Kind::App: return Term::app(unfold_all(t.fun()), unfold_all(t.arg()));
        case Term::Kind::Abs: return Term::abs(t.name(), t.type(), unfold_all(t.body()));
        default: return t;
    }
}

}  // namespace mhl::kernel
