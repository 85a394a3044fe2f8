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

#ifndef MHL_SYNTAX_LOGIC_HPP
#define MHL_SYNTAX_LOGIC_HPP

#include <optional>
#include <string>
#include <utility>

#include "mhl/syntax/term.hpp"

namespace mhl::syntax {

// Internal names of the logical constants.
namespace cname {
inline constexpr const char* kImp = "imp";
inline constexpr const char* kAll = "All";
inline constexpr const char* kEq = "eq";
inline constexpr const char* kFalse = "False";
inline constexpr const char* kTrue = "True";
inline constexpr const char* kNot = "Not";
inline constexpr const char* kConj = "conj";
inline constexpr const char* kDisj = "disj";
inline constexpr const char* kEx = "Ex";
inline constexpr const char* kEps = "Eps";
inline constexpr const char* kZero = "zero";
inline constexpr const char* kSucc = "succ";
inline constexpr const char* kMem = "mem";
inline constexpr const char* kCollect = "Collect";
inline constexpr const char* kUndefined = "undefined";
inline constexpr const char* kSetType = "set";
}  // namespace cname

Type alpha();
Type pred_type(const Type& a);  // a => bool
Type set_type(const Type& a);

Term mk_imp(const Term& p, const Term& q);
Term mk_eq(const Term& a, const Term& b);
Term mk_all(const Term& var, const Term& body);
Term mk_ex(const Term& var, const Term& body);
// All/Ex applied to an arbitrary predicate (no binder introduced).
Term mk_all_pred(const Term& pred);
Term mk_ex_pred(const Term& pred);
Term mk_not(const Term& p);
Term mk_conj(const Term& p, const Term& q);
Term mk_disj(const Term& p, const Term& q);
Term mk_false();
Term mk_true();
Term mk_eps(const Term& pred);
Term mk_mem(const Term& x, const Term& s);
Term mk_collect(const Term& pred);

// Binary connective / equality destructors; nullopt on shape mismatch.
std::optional<std::pair<Term, Term>> dest_binop(const Term& t, std::string_view name);
inline std::optional<std::pair<Term, Term>> dest_imp(const Term& t) { return dest_binop(t, cname::kImp); }
inline std::optional<std::pair<Term, Term>> dest_eq(const Term& t) { return dest_binop(t, cname::kEq); }
inline std::optional<std::pair<Term, Term>> dest_conj(const Term& t) { return dest_binop(t, cname::kConj); }
inline std::optional<std::pair<Term, Term>> dest_disj(const Term& t) { return dest_binop(t, cname::kDisj); }
std::optional<Term> dest_unop(const Term& t, std::string_view name);
inline std::optional<Term> dest_not(const Term& t) { return dest_unop(t, cname::kNot); }
// Quantifier argument (an abstraction or any predicate).
inline std::optional<Term> dest_all(const Term& t) { return dest_unop(t, cname::kAll); }
inline std::optional<Term> dest_ex(const Term& t) { return dest_unop(t, cname::kEx); }

// Is this an equation between booleans (printed as ⟷)?
bool is_iff(const Term& t);

}  // namespace mhl::syntax

#endif
