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

#include "mhl/syntax/logic.hpp"

#include "mhl/error.hpp"

namespace mhl::syntax {

namespace {

Type bool_t() { return Type::boolean(); }
Type bin_bool() { return Type::fun(bool_t(), Type::fun(bool_t(), bool_t())); }

}  // namespace

Type alpha() { return Type::var("a"); }
Type pred_type(const Type& a) { return Type::fun(a, bool_t()); }
Type set_type(const Type& a) { return Type::con(cname::kSetType, {a}); }

Term mk_imp(const Term& p, const Term& q) {
    return Term::app(Term::app(Term::constant(cname::kImp, bin_bool()), p), q);
}

Term mk_eq(const Term& a, const Term& b) {
    Type t = type_of(a);
    return Term::app(Term::app(Term::constant(cname::kEq, Type::fun(t, pred_type(t))), a), b);
}

Term mk_all_pred(const Term& pred) {
    Type pt = type_of(pred);
    return Term::app(Term::constant(cname::kAll, pred_type(pt)), pred);
}

Term mk_ex_pred(const Term& pred) {
    Type pt = type_of(pred);
    return Term::app(Term::constant(cname::kEx, pred_type(pt)), pred);
}

Term mk_all(const Term& var, const Term& body) { return mk_all_pred(lambda(var, body)); }
Term mk_ex(const Term& var, const Term& body) { return mk_ex_pred(lambda(var, body)); }

Term mk_not(const Term& p) { return Term::app(Term::constant(cname::kNot, pred_type(bool_t())), p); }

Term mk_conj(const Term& p, const Term& q) {
    return Term::app(Term::app(Term::constant(cname::kConj, bin_bool()), p), q);
}

Term mk_disj(const Term& p, const Term& q) {
    return Term::app(Term::app(Term::constant(cname::kDisj, bin_bool()), p), q);
}

Term mk_false() { return Term::constant(cname::kFalse, bool_t()); }
Term mk_true() { return Term::constant(cname::kTrue, bool_t()); }

Term mk_eps(const Term& pred) {
    Type pt = type_of(pred);
    return Term::app(Term::constant(cname::kEps, Type::fun(pt, pt.domain())), pred);
}

Term mk_mem(const Term& x, const Term& s) {
    Type a = type_of(x);
    return Term::app(Term::app(Term::constant(cname::kMem, Type::fun(a, pred_type(set_type(a)))), x), s);
}

Term mk_collect(const Term& pred) {
    Type pt = type_of(pred);
    return Term::app(Term::constant(cname::kCollect, Type::fun(pt, set_type(pt.domain()))), pred);
}

std::optional<std::pair<Term, Term>> dest_binop(const Term& t, std::string_view name) {
    if (!t.is_app() || !t.fun().is_app() || !is_const(t.fun().fun(), name)) return std::nullopt;
    return std::make_pair(t.fun().arg(), t.arg());
}

std::optional<Term> dest_unop(const Term& t, std::string_view name) {
    if (!t.is_app() || !is_const(t.fun(), name)) return std::nullopt;
    return t.arg();
}

bool is_iff(const Term& t) {
    if (!dest_eq(t)) return false;
    const Type& ty = t.fun().fun().type();
    return ty.is_fun() && ty.domain().is_bool();
}

}  // namespace mhl::syntax
