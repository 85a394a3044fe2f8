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

#include "mhl/syntax/term.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "mhl/error.hpp"

namespace mhl::syntax {

struct Term::Node {
    Kind kind;
    std::string name;
    std::optional<Type> type;
    std::uint32_t index = 0;
    std::shared_ptr<const Node> a;  // App: fun, Abs: body
    std::shared_ptr<const Node> b;  // App: arg
    std::size_t hash = 0;
    std::uint32_t loose = 0;
    bool has_free = false;
};

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

Term Term::free(std::string name, Type type) {
    std::size_t h = mix(mix(0x11, std::hash<std::string>{}(name)), type.hash());
    auto n = std::make_shared<Node>();
    n->kind = Kind::Free;
    n->name = std::move(name);
    n->type = std::move(type);
    n->hash = h;
    n->has_free = true;
    return Term(std::move(n));
}

Term Term::bound(std::uint32_t index) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Bound;
    n->index = index;
    n->hash = mix(0x22, index);
    n->loose = index + 1;
    return Term(std::move(n));
}

Term Term::constant(std::string name, Type type) {
    std::size_t h = mix(mix(0x33, std::hash<std::string>{}(name)), type.hash());
    auto n = std::make_shared<Node>();
    n->kind = Kind::Const;
    n->name = std::move(name);
    n->type = std::move(type);
    n->hash = h;
    return Term(std::move(n));
}

Term Term::app(Term fun, Term arg) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::App;
    n->hash = mix(mix(0x44, fun.hash()), arg.hash());
    n->loose = std::max(fun.node_->loose, arg.node_->loose);
    n->has_free = fun.node_->has_free || arg.node_->has_free;
    n->a = std::move(fun.node_);
    n->b = std::move(arg.node_);
    return Term(std::move(n));
}

Term Term::app(Term fun, std::span<const Term> args) {
    for (const Term& a : args) fun = app(std::move(fun), a);
    return fun;
}

Term Term::abs(std::string hint, Type binder_type, Term body) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Abs;
    n->name = std::move(hint);
    n->hash = mix(mix(0x55, binder_type.hash()), body.hash());
    n->type = std::move(binder_type);
    n->loose = body.node_->loose > 0 ? body.node_->loose - 1 : 0;
    n->has_free = body.node_->has_free;
    n->a = std::move(body.node_);
    return Term(std::move(n));
}

Term::Kind Term::kind() const { return node_->kind; }
const std::string& Term::name() const { return node_->name; }
const Type& Term::type() const {
    if (!node_->type) throw TypeError("term has no stored type");
    return *node_->type;
}
std::uint32_t Term::index() const { return node_->index; }
Term Term::fun() const { return Term(node_->a); }
Term Term::arg() const { return Term(node_->b); }
Term Term::body() const { return Term(node_->a); }
std::uint32_t Term::loose_bound() const { return node_->loose; }
bool Term::has_free_vars() const { return node_->has_free; }
std::size_t Term::hash() const { return node_->hash; }

bool operator==(const Term& a, const Term& b) {
    const Term::Node* x = a.node_.get();
    const Term::Node* y = b.node_.get();
    while (true) {
        if (x == y) return true;
        if (x->hash != y->hash || x->kind != y->kind) return false;
        switch (x->kind) {
            case Term::Kind::Free:
            case Term::Kind::Const:
                return x->name == y->name && *x->type == *y->type;
            case Term::Kind::Bound:
                return x->index == y->index;
            case Term::Kind::Abs:
                if (!(*x->type == *y->type)) return false;
                x = x->a.get();
                y = y->a.get();
                continue;
            case Term::Kind::App:
                if (!(Term(x->b) == Term(y->b))) return false;
                x = x->a.get();
                y = y->a.get();
                continue;
        }
    }
}

namespace {

int compare(const Term& a, const Term& b);

}  // namespace

bool operator<(const Term& a, const Term& b) {
    if (a.hash() != b.hash()) return a.hash() < b.hash();
    return compare(a, b) < 0;
}

namespace {

int compare(const Term& a, const Term& b) {
    if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
    switch (a.kind()) {
        case Term::Kind::Free:
        case Term::Kind::Const:
            if (a.name() != b.name()) return a.name() < b.name() ? -1 : 1;
            if (a.type() == b.type()) return 0;
            return a.type() < b.type() ? -1 : 1;
        case Term::Kind::Bound:
            if (a.index() == b.index()) return 0;
            return a.index() < b.index() ? -1 : 1;
        case Term::Kind::Abs:
            if (!(a.type() == b.type())) return a.type() < b.type() ? -1 : 1;
            return compare(a.body(), b.body());
        case Term::Kind::App: {
            int c = compare(a.fun(), b.fun());
            return c != 0 ? c : compare(a.arg(), b.arg());
        }
    }
    return 0;
}

bool mentions_index(const Term& t, std::uint32_t i) {
    if (t.loose_bound() <= i) return false;
    switch (t.kind()) {
        case Term::Kind::Bound: return t.index() == i;
        case Term::Kind::App: return mentions_index(t.fun(), i) || mentions_index(t.arg(), i);
        case Term::Kind::Abs: return mentions_index(t.body(), i + 1);
        default: return false;
    }
}

}  // namespace

bool is_const(const Term& t, std::string_view name) { return t.is_const() && t.name() == name; }

Term strip_app(const Term& t, std::vector<Term>& args) {
    args.clear();
    Term head = t;
    while (head.is_app()) {
        args.push_back(head.arg());
        head = head.fun();
    }
    std::reverse(args.begin(), args.end());
    return head;
}

void collect_free_vars(const Term& t, std::set<Term>& out) {
    if (!t.has_free_vars()) return;
    switch (t.kind()) {
        case Term::Kind::Free: out.insert(t); break;
        case Term::Kind::App:
            collect_free_vars(t.fun(), out);
            collect_free_vars(t.arg(), out);
            break;
        case Term::Kind::Abs: collect_free_vars(t.body(), out); break;
        default: break;
    }
}

std::set<Term> free_vars(const Term& t) {
    std::set<Term> out;
    collect_free_vars(t, out);
    return out;
}

bool occurs_free(const Term& var, const Term& t) {
    if (!t.has_free_vars()) return false;
    switch (t.kind()) {
        case Term::Kind::Free: return t == var;
        case Term::Kind::App: return occurs_free(var, t.fun()) || occurs_free(var, t.arg());
        case Term::Kind::Abs: return occurs_free(var, t.body());
        default: return false;
    }
}

bool occurs_free_name(const std::string& name, const Term& t) {
    if (!t.has_free_vars()) return false;
    switch (t.kind()) {
        case Term::Kind::Free: return t.name() == name;
        case Term::Kind::App: return occurs_free_name(name, t.fun()) || occurs_free_name(name, t.arg());
        case Term::Kind::Abs: return occurs_free_name(name, t.body());
        default: return false;
    }
}

void collect_type_vars(const Term& t, std::set<std::string>& out) {
    switch (t.kind()) {
        case Term::Kind::Free:
        case Term::Kind::Const: collect_type_vars(t.type(), out); break;
        case Term::Kind::App:
            collect_type_vars(t.fun(), out);
            collect_type_vars(t.arg(), out);
            break;
        case Term::Kind::Abs:
            collect_type_vars(t.type(), out);
            collect_type_vars(t.body(), out);
            break;
        default: break;
    }
}

Term shift(const Term& t, std::int64_t delta, std::uint32_t cutoff) {
    if (delta == 0 || t.loose_bound() <= cutoff) return t;
    switch (t.kind()) {
        case Term::Kind::Bound: {
            std::int64_t i = static_cast<std::int64_t>(t.index()) + delta;
            if (i < 0) throw TypeError("negative de Bruijn index after shift");
            return Term::bound(static_cast<std::uint32_t>(i));
        }
        case Term::Kind::App: return Term::app(shift(t.fun(), delta, cutoff), shift(t.arg(), delta, cutoff));
        case Term::Kind::Abs: return Term::abs(t.name(), t.type(), shift(t.body(), delta, cutoff + 1));
        default: return t;
    }
}

namespace {

Term abstract_at(const Term& t, const Term& var, std::uint32_t depth) {
    if (!t.has_free_vars()) return t;
    switch (t.kind()) {
        case Term::Kind::Free: return t == var ? Term::bound(depth) : t;
        case Term::Kind::App:
            return Term::app(abstract_at(t.fun(), var, depth), abstract_at(t.arg(), var, depth));
        case Term::Kind::Abs: return Term::abs(t.name(), t.type(), abstract_at(t.body(), var, depth + 1));
        default: return t;
    }
}

Term subst_at(const Term& t, const Term& u, std::uint32_t depth) {
    if (t.loose_bound() <= depth) return t;
    switch (t.kind()) {
        case Term::Kind::Bound:
            if (t.index() == depth) return shift(u, depth);
            return Term::bound(t.index() - 1);
        case Term::Kind::App: return Term::app(subst_at(t.fun(), u, depth), subst_at(t.arg(), u, depth));
        case Term::Kind::Abs: return Term::abs(t.name(), t.type(), subst_at(t.body(), u, depth + 1));
        default: return t;
    }
}

}  // namespace

Term abstract(const Term& t, const Term& var) {
    if (!var.is_free()) throw TypeError("can only abstract over a free variable");
    return abstract_at(t, var, 0);
}

Term lambda(const Term& var, const Term& body) {
    return Term::abs(var.name(), var.type(), abstract(body, var));
}

Term subst_bound(const Term& body, const Term& u) { return subst_at(body, u, 0); }

Term normalize(const Term& t) {
    switch (t.kind()) {
        case Term::Kind::App: {
            Term f = normalize(t.fun());
            Term a = normalize(t.arg());
            if (f.is_abs()) return normalize(subst_bound(f.body(), a));
            if (f == t.fun() && a == t.arg()) return t;
            return Term::app(f, a);
        }
        case Term::Kind::Abs: {
            Term b = normalize(t.body());
            if (b.is_app() && b.arg().is_bound() && b.arg().index() == 0 && !mentions_index(b.fun(), 0))
                return shift(b.fun(), -1);
            if (b == t.body()) return t;
            return Term::abs(t.name(), t.type(), b);
        }
        default: return t;
    }
}

bool is_normal(const Term& t) {
    switch (t.kind()) {
        case Term::Kind::App: return !t.fun().is_abs() && is_normal(t.fun()) && is_normal(t.arg());
        case Term::Kind::Abs: {
            Term b = t.body();
            if (b.is_app() && b.arg().is_bound() && b.arg().index() == 0 && !mentions_index(b.fun(), 0)) return false;
            return is_normal(b);
        }
        default: return true;
    }
}

namespace {

struct Instantiator {
    const TypeSubst& tys;
    const TermSubst& terms;

    Term go(const Term& t) const {
        switch (t.kind()) {
            case Term::Kind::Free: {
                for (const auto& [k, v] : terms)
                    if (k == t) return v;
                return tys.empty() ? t : Term::free(t.name(), apply(tys, t.type()));
            }
            case Term::Kind::Const: return tys.empty() ? t : Term::constant(t.name(), apply(tys, t.type()));
            case Term::Kind::Bound: return t;
            case Term::Kind::App: {
                Term f = go(t.fun());
                Term a = go(t.arg());
                return Term::app(f, a);
            }
            case Term::Kind::Abs: return Term::abs(t.name(), apply(tys, t.type()), go(t.body()));
        }
        return t;
    }
};

}  // namespace

Term instantiate(const Term& t, const TypeSubst& type_subst, const TermSubst& term_subst) {
    for (const auto& [k, v] : term_subst) {
        if (!k.is_free()) throw TypeError("attempt to substitute for a non-variable term");
        if (v.loose_bound() != 0) throw TypeError("substituted term for " + k.name() + " has dangling bound variables");
        Type want = apply(type_subst, k.type());
        Type got = type_of(v);
        if (!(want == got))
            throw TypeError("type mismatch substituting for " + k.name() + ": expected " + want.to_string() + ", got " +
                            got.to_string());
    }
    if (type_subst.empty() && (term_subst.empty() || !t.has_free_vars())) return t;
    return Instantiator{type_subst, term_subst}.go(t);
}

Type type_of(const Term& t, std::span<const Type> ctx) {
    std::vector<Type> stack(ctx.begin(), ctx.end());
    std::function<Type(const Term&)> go = [&](const Term& u) -> Type {
        switch (u.kind()) {
            case Term::Kind::Free:
            case Term::Kind::Const: return u.type();
            case Term::Kind::Bound:
                if (u.index() >= stack.size()) throw TypeError("unbound de Bruijn index " + std::to_string(u.index()));
                return stack[stack.size() - 1 - u.index()];
            case Term::Kind::App: {
                Type f = go(u.fun());
                Type a = go(u.arg());
                if (!f.is_fun()) throw TypeError("applying a non-function of type " + f.to_string());
                if (!(f.domain() == a))
                    throw TypeError("argument type " + a.to_string() + " does not match " + f.domain().to_string());
                return f.codomain();
            }
            case Term::Kind::Abs: {
                stack.push_back(u.type());
                Type b = go(u.body());
                stack.pop_back();
                return Type::fun(u.type(), b);
            }
        }
        throw TypeError("unreachable");
    };
    return go(t);
}

std::string variant_name(const std::string& base, const std::set<std::string>& avoid) {
    if (!avoid.count(base)) return base;
    for (std::string s = base + "'"; s.size() <= base.size() + 2; s += "'")
        if (!avoid.count(s)) return s;
    for (int i = 1;; ++i) {
        std::string s = base + std::to_string(i);
        if (!avoid.count(s)) return s;
    }
}

}  // namespace mhl::syntax
