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

#ifndef MHL_SYNTAX_TERM_HPP
#define MHL_SYNTAX_TERM_HPP

#include <cstdint>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mhl/syntax/type.hpp"

namespace mhl::syntax {

// Simply typed lambda terms, locally nameless: bound variables are de Bruijn
// indices, free variables are (name, type) pairs. Binder names on
// abstractions are printing hints only and take no part in equality.
class Term {
public:
    enum class Kind : unsigned char { Free, Bound, Const, App, Abs };

    static Term free(std::string name, Type type);
    static Term bound(std::uint32_t index);
    static Term constant(std::string name, Type type);
    static Term app(Term fun, Term arg);
    static Term app(Term fun, std::span<const Term> args);
    static Term abs(std::string hint, Type binder_type, Term body);

    Kind kind() const;
    bool is_free() const { return kind() == Kind::Free; }
    bool is_bound() const { return kind() == Kind::Bound; }
    bool is_const() const { return kind() == Kind::Const; }
    bool is_app() const { return kind() == Kind::App; }
    bool is_abs() const { return kind() == Kind::Abs; }

    // Free/Const name, or the binder hint of an abstraction.
    const std::string& name() const;
    // Free/Const type, or the binder type of an abstraction.
    const Type& type() const;
    std::uint32_t index() const;
    Term fun() const;
    Term arg() const;
    Term body() const;

    // One more than the largest dangling de Bruijn index; 0 when none dangle.
    std::uint32_t loose_bound() const;
    bool has_free_vars() const;

    std::size_t hash() const;
    friend bool operator==(const Term& a, const Term& b);
    friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }
    // Total order compatible with ==; used for canonical hypothesis sets.
    friend bool operator<(const Term& a, const Term& b);

private:
    struct Node;
    explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

struct TermHash {
    std::size_t operator()(const Term& t) const { return t.hash(); }
};

// Simultaneous substitution for free variables (keys must be Free terms).
using TermSubst = std::vector<std::pair<Term, Term>>;

bool is_const(const Term& t, std::string_view name);
// Head symbol and argument list of an iterated application.
Term strip_app(const Term& t, std::vector<Term>& args);

void collect_free_vars(const Term& t, std::set<Term>& out);
std::set<Term> free_vars(const Term& t);
bool occurs_free(const Term& var, const Term& t);
// Does any free variable of `t` have this name (at any type)?
bool occurs_free_name(const std::string& name, const Term& t);
void collect_type_vars(const Term& t, std::set<std::string>& out);

// Add `delta` to every de Bruijn index >= cutoff.
Term shift(const Term& t, std::int64_t delta, std::uint32_t cutoff = 0);
// Replace the free variable `var` by a bound index (the body of λvar. t).
Term abstract(const Term& t, const Term& var);
// λvar. body, with `var` a Free term.
Term lambda(const Term& var, const Term& body);
// Instantiate the outermost binder of an abstraction body with `u`.
Term subst_bound(const Term& body, const Term& u);

// Beta-eta normal form. Terms are assumed well typed (strongly normalizing).
Term normalize(const Term& t);
bool is_normal(const Term& t);

// Simultaneous type and term instantiation; keys of `term_subst` refer to the
// variables as they occur in `t` (before type instantiation). Throws
// TypeError on a non-variable key or a type-incorrect replacement.
Term instantiate(const Term& t, const TypeSubst& type_subst, const TermSubst& term_subst);

// Structural type of a term whose bound indices are typed by `ctx`
// (innermost binder last). Does not consult a signature.
Type type_of(const Term& t, std::span<const Type> ctx = {});

// A variant of `base` that is not in `avoid`.
std::string variant_name(const std::string& base, const std::set<std::string>& avoid);

}  // namespace mhl::syntax

#endif
