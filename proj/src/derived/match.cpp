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

#include "mhl/derived/match.hpp"

#include <algorithm>

#include "mhl/syntax/logic.hpp"

namespace mhl::derived {

using syntax::Type;

namespace {

// Plain replacement of free variables, no type checks: patterns carry
// schematic types while values are concrete.
Term replace_free(const Term& t, const TermSubst& s) {
    if (!t.has_free_vars()) return t;
    switch (t.kind()) {
        case Term::Kind::Free:
            for (const auto& [k, v] : s)
                if (k == t) return v;
            return t;
        case Term::Kind::App: return Term::app(replace_free(t.fun(), s), replace_free(t.arg(), s));
        case Term::Kind::Abs: return Term::abs(t.name(), t.type(), replace_free(t.body(), s));
        default: return t;
    }
}

// Renumber the loose indices of `t` (relative to `depth` local binders) so
// that index args[j] becomes the j-th of n fresh outer binders.
std::optional<Term> remap(const Term& t, const std::vector<std::uint32_t>& args, std::uint32_t d) {
    if (t.loose_bound() <= d) return t;
    switch (t.kind()) {
        case Term::Kind::Bound: {
            std::uint32_t l = t.index() - d;
            auto it = std::find(args.begin(), args.end(), l);
            if (it == args.end()) return std::nullopt;
            std::uint32_t j = static_cast<std::uint32_t>(it - args.begin());
            return Term::bound(d + static_cast<std::uint32_t>(args.size()) - 1 - j);
        }
        case Term::Kind::App: {
            auto f = remap(t.fun(), args, d);
            if (!f) return std::nullopt;
            auto a = remap(t.arg(), args, d);
            if (!a) return std::nullopt;
            return Term::app(*f, *a);
        }
        case Term::Kind::Abs: {
            auto b = remap(t.body(), args, d + 1);
            if (!b) return std::nullopt;
            return Term::abs(t.name(), t.type(), *b);
        }
        default: return t;
    }
}

}  // namespace

std::optional<Term> Instantiation::lookup(const Term& var) const {
    for (const auto& [k, v] : terms)
        if (k == var) return v;
    return std::nullopt;
}

bool Matcher::match_type(const Type& p, const Type& t) {
    if (p.is_var() && schematic_types_.count(p.name())) {
        auto [it, inserted] = inst_.types.emplace(p.name(), t);
        return inserted || it->second == t;
    }
    if (p.is_var()) return t.is_var() && t.name() == p.name();
    if (!t.is_con() || t.name() != p.name() || t.args().size() != p.args().size()) return false;
    for (std::size_t i = 0; i < p.args().size(); ++i)
        if (!match_type(p.args()[i], t.args()[i])) return false;
    return true;
}

bool Matcher::add(const Term& pattern, const Term& target) {
    std::vector<Type> binders;
    return match(pattern, target, binders);
}

bool Matcher::match(const Term& p, const Term& t, std::vector<Type>& binders) {
    std::vector<Term> args;
    Term head = syntax::strip_app(p, args);
    if (is_schematic(head)) {
        if (auto val = inst_.lookup(head)) {
            Term q = syntax::normalize(replace_free(p, {{head, *val}}));
            return match(q, t, binders);
        }
        std::vector<std::uint32_t> idx;
        bool pattern = true;
        for (const Term& a : args) {
            if (!a.is_bound() || a.index() >= binders.size() ||
                std::find(idx.begin(), idx.end(), a.index()) != idx.end()) {
                pattern = false;
                break;
            }
            idx.push_back(a.index());
        }
        if (!pattern) {
            pending_.push_back({p, t, binders});
            return true;
        }
        auto body = remap(t, idx, 0);
        if (!body) return false;
        Term val = *body;
        for (std::size_t j = idx.size(); j-- > 0;) {
            const Type& bt = binders[binders.size() - 1 - idx[j]];
            val = Term::abs("x", bt, val);
        }
        val = syntax::normalize(val);
        if (!match_type(head.type(), syntax::type_of(val))) return false;
        inst_.terms.emplace_back(head, val);
        return true;
    }
    if (p.is_abs() && !t.is_abs()) {
        Type ty = syntax::type_of(t, binders);
        if (!ty.is_fun()) return false;
        Term expanded = Term::abs("x", ty.domain(), Term::app(syntax::shift(t, 1), Term::bound(0)));
        return match(p, expanded, binders);
    }
    if (p.kind() != t.kind()) return false;
    switch (p.kind()) {
        case Term::Kind::Bound: return p.index() == t.index();
        case Term::Kind::Const:
        case Term::Kind::Free: return p.name() == t.name() && match_type(p.type(), t.type());
        case Term::Kind::App: return match(p.fun(), t.fun(), binders) && match(p.arg(), t.arg(), binders);
        case Term::Kind::Abs: {
            if (!match_type(p.type(), t.type())) return false;
            binders.push_back(t.type());
            bool ok = match(p.body(), t.body(), binders);
            binders.pop_back();
            return ok;
        }
    }
    return false;
}

namespace {

// Replace every occurrence of the closed term `a` in `t` by the bound index
// `idx` (counted from outside `t`).
Term abstract_term(const Term& t, const Term& a, std::uint32_t idx, std::uint32_t depth = 0) {
    if (t == a) return Term::bound(idx + depth);
    switch (t.kind()) {
        case Term::Kind::App:
            return Term::app(abstract_term(t.fun(), a, idx, depth), abstract_term(t.arg(), a, idx, depth));
        case Term::Kind::Abs: return Term::abs(t.name(), t.type(), abstract_term(t.body(), a, idx, depth + 1));
        default: return t;
    }
}

}  // namespace

// ?F t1 .. tn outside the pattern fragment with every ti known: take the
// solution that abstracts all occurrences of the ti in the target.
bool Matcher::abstract_occurrences(const Pending& w) {
    std::vector<Term> args;
    Term head = syntax::strip_app(w.pattern, args);
    if (!is_schematic(head) || inst_.lookup(head) || w.target.loose_bound() != 0) return false;
    std::vector<Term> known;
    for (const Term& a : args) {
        Term k = apply(a);
        if (k.loose_bound() != 0) return false;
        for (const Term& v : syntax::free_vars(k))
            if (is_schematic(v)) return false;
        known.push_back(k);
    }
    std::uint32_t n = static_cast<std::uint32_t>(known.size());
    Term body = w.target;
    // Shift the bound indices of earlier replacements past the later ones.
    for (std::uint32_t j = 0; j < n; ++j) body = abstract_term(body, known[j], n - 1 - j);
    Term val = body;
    for (std::uint32_t j = n; j-- > 0;) val = Term::abs("x", syntax::type_of(known[j]), val);
    if (val.loose_bound() != 0) return false;
    if (!match_type(head.type(), syntax::type_of(val))) return false;
    inst_.terms.emplace_back(head, syntax::normalize(val));
    return true;
}

bool Matcher::solve() {
    while (!pending_.empty()) {
        bool progress = false;
        std::vector<Pending> work;
        work.swap(pending_);
        for (auto& w : work) {
            std::vector<Term> args;
            Term head = syntax::strip_app(w.pattern, args);
            if (!inst_.lookup(head)) {
                pending_.push_back(std::move(w));
                continue;
            }
            progress = true;
            if (!match(w.pattern, w.target, w.binders)) return false;
        }
        if (progress) continue;
        bool abstracted = false;
        for (std::size_t i = 0; i < pending_.size() && !abstracted; ++i) {
            if (abstract_occurrences(pending_[i])) {
                Pending w = pending_[i];
                pending_.erase(pending_.begin() + static_cast<std::ptrdiff_t>(i));
                if (!match(w.pattern, w.target, w.binders)) return false;
                abstracted = true;
            }
        }
        if (!abstracted) return false;
    }
    return true;
}

Term Matcher::apply(const Term& pattern) const { return syntax::normalize(replace_free(pattern, inst_.terms)); }

std::optional<Instantiation> match_all(const std::set<Term>& schematic, const std::set<std::string>& schematic_types,
                                       const std::vector<std::pair<Term, Term>>& problems, const Instantiation& seed) {
    Matcher m(schematic, schematic_types);
    m.result() = seed;
    for (const auto& [p, t] : problems)
        if (!m.add(p, t)) return std::nullopt;
    if (!m.solve()) return std::nullopt;
    return m.result();
}

}  // namespace mhl::derived
