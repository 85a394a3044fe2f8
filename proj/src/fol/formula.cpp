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

#include "mhl/fol/formula.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "mhl/error.hpp"

namespace mhl::fol {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

struct FolTerm::Node {
    bool is_var;
    std::uint32_t index;
    std::string name;
    std::vector<FolTerm> args;
    std::size_t hash;
};

FolTerm FolTerm::var(std::uint32_t index) {
    return FolTerm(std::make_shared<const Node>(Node{true, index, {}, {}, mix(0x7a, index)}));
}

FolTerm FolTerm::fun(std::string name, std::vector<FolTerm> args) {
    std::size_t h = mix(0xf0, std::hash<std::string>{}(name));
    for (const FolTerm& a : args) h = mix(h, a.hash());
    return FolTerm(std::make_shared<const Node>(Node{false, 0, std::move(name), std::move(args), h}));
}

bool FolTerm::is_var() const { return node_->is_var; }
std::uint32_t FolTerm::index() const { return node_->index; }
const std::string& FolTerm::name() const { return node_->name; }
std::span<const FolTerm> FolTerm::args() const { return node_->args; }
std::size_t FolTerm::hash() const { return node_->hash; }

bool operator==(const FolTerm& a, const FolTerm& b) {
    if (a.node_ == b.node_) return true;
    if (a.node_->hash != b.node_->hash || a.node_->is_var != b.node_->is_var) return false;
    if (a.node_->is_var) return a.node_->index == b.node_->index;
    return a.node_->name == b.node_->name && a.node_->args == b.node_->args;
}

struct FolFormula::Node {
    Kind kind;
    std::size_t hash;
    std::size_t size;
    std::string name;
    std::vector<FolTerm> args;
    // Imp: lhs, rhs; Uni: body in `a`.
    std::optional<FolFormula> a, b;
};

FolFormula FolFormula::falsity() {
    static const FolFormula f(std::make_shared<const Node>(Node{Kind::Falsity, 0xb07, 1, {}, {}, {}, {}}));
    return f;
}

FolFormula FolFormula::pre(std::string name, std::vector<FolTerm> args) {
    std::size_t h = mix(0x9e, std::hash<std::string>{}(name));
    for (const FolTerm& a : args) h = mix(h, a.hash());
    return FolFormula(std::make_shared<const Node>(Node{Kind::Pre, h, 1, std::move(name), std::move(args), {}, {}}));
}

FolFormula FolFormula::imp(FolFormula lhs, FolFormula rhs) {
    std::size_t h = mix(mix(0x1b, lhs.hash()), rhs.hash());
    std::size_t n = 1 + lhs.size() + rhs.size();
    return FolFormula(std::make_shared<const Node>(Node{Kind::Imp, h, n, {}, {}, std::move(lhs), std::move(rhs)}));
}

FolFormula FolFormula::uni(FolFormula body) {
    std::size_t h = mix(0xa11, body.hash());
    std::size_t n = 1 + body.size();
    return FolFormula(std::make_shared<const Node>(Node{Kind::Uni, h, n, {}, {}, std::move(body), {}}));
}

FolFormula::Kind FolFormula::kind() const { return node_->kind; }
const std::string& FolFormula::name() const { return node_->name; }
std::span<const FolTerm> FolFormula::args() const { return node_->args; }
const FolFormula& FolFormula::lhs() const { return node_->a.value(); }
const FolFormula& FolFormula::rhs() const { return node_->b.value(); }
const FolFormula& FolFormula::body() const { return node_->a.value(); }
std::size_t FolFormula::hash() const { return node_->hash; }
std::size_t FolFormula::size() const { return node_->size; }

bool operator==(const FolFormula& a, const FolFormula& b) {
    if (a.node_ == b.node_) return true;
    const auto& x = *a.node_;
    const auto& y = *b.node_;
    if (x.hash != y.hash || x.kind != y.kind || x.size != y.size) return false;
    return x.name == y.name && x.args == y.args && x.a == y.a && x.b == y.b;
}

namespace {

int compare(const FolTerm& a, const FolTerm& b) {
    if (a == b) return 0;
    if (a.is_var() != b.is_var()) return a.is_var() ? -1 : 1;
    if (a.is_var()) return a.index() < b.index() ? -1 : 1;
    if (int c = a.name().compare(b.name())) return c;
    if (a.args().size() != b.args().size()) return a.args().size() < b.args().size() ? -1 : 1;
    for (std::size_t i = 0; i < a.args().size(); ++i)
        if (int c = compare(a.args()[i], b.args()[i])) return c;
    return 0;
}

int compare(const FolFormula& a, const FolFormula& b) {
    if (a == b) return 0;
    if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
    switch (a.kind()) {
        case FolFormula::Kind::Falsity:
            return 0;
        case FolFormula::Kind::Pre: {
            if (int c = a.name().compare(b.name())) return c;
            if (a.args().size() != b.args().size()) return a.args().size() < b.args().size() ? -1 : 1;
            for (std::size_t i = 0; i < a.args().size(); ++i)
                if (int c = compare(a.args()[i], b.args()[i])) return c;
            return 0;
        }
        case FolFormula::Kind::Imp:
            if (int c = compare(a.lhs(), b.lhs())) return c;
            return compare(a.rhs(), b.rhs());
        case FolFormula::Kind::Uni:
            return compare(a.body(), b.body());
    }
    return 0;
}

}  // namespace

bool operator<(const FolFormula& a, const FolFormula& b) { return compare(a, b) < 0; }

// ---------------------------------------------------------------------------
// de Bruijn operations

namespace {

FolTerm map_vars(const FolTerm& t, const std::function<FolTerm(std::uint32_t)>& f) {
    if (t.is_var()) return f(t.index());
    if (t.args().empty()) return t;
    std::vector<FolTerm> args;
    args.reserve(t.args().size());
    for (const FolTerm& a : t.args()) args.push_back(map_vars(a, f));
    return FolTerm::fun(t.name(), std::move(args));
}

FolTerm lift_from(const FolTerm& t, std::uint32_t cutoff) {
    return map_vars(t, [&](std::uint32_t i) { return FolTerm::var(i >= cutoff ? i + 1 : i); });
}

FolFormula lift_formula(const FolFormula& p, std::uint32_t cutoff) {
    switch (p.kind()) {
        case FolFormula::Kind::Falsity:
            return p;
        case FolFormula::Kind::Pre: {
            std::vector<FolTerm> args;
            for (const FolTerm& a : p.args()) args.push_back(lift_from(a, cutoff));
            return FolFormula::pre(p.name(), std::move(args));
        }
        case FolFormula::Kind::Imp:
            return FolFormula::imp(lift_formula(p.lhs(), cutoff), lift_formula(p.rhs(), cutoff));
        case FolFormula::Kind::Uni:
            return FolFormula::uni(lift_formula(p.body(), cutoff + 1));
    }
    return p;
}

}  // namespace

FolTerm lift(const FolTerm& t) { return lift_from(t, 0); }
FolFormula lift(const FolFormula& p) { return lift_formula(p, 0); }

FolTerm sub_term(std::uint32_t v, const FolTerm& s, const FolTerm& t) {
    return map_vars(t, [&](std::uint32_t n) {
        if (n < v) return FolTerm::var(n);
        if (n == v) return s;
        return FolTerm::var(n - 1);
    });
}

FolFormula sub(std::uint32_t v, const FolTerm& s, const FolFormula& p) {
    switch (p.kind()) {
        case FolFormula::Kind::Falsity:
            return p;
        case FolFormula::Kind::Pre: {
            if (p.args().empty()) return p;
            std::vector<FolTerm> args;
            for (const FolTerm& a : p.args()) args.push_back(sub_term(v, s, a));
            return FolFormula::pre(p.name(), std::move(args));
        }
        case FolFormula::Kind::Imp:
            return FolFormula::imp(sub(v, s, p.lhs()), sub(v, s, p.rhs()));
        case FolFormula::Kind::Uni:
            return FolFormula::uni(sub(v + 1, lift(s), p.body()));
    }
    return p;
}

namespace {

FolTerm abstract_term(std::uint32_t v, const std::string& c, const FolTerm& t) {
    if (t.is_var()) return FolTerm::var(t.index() >= v ? t.index() + 1 : t.index());
    if (t.args().empty() && t.name() == c) return FolTerm::var(v);
    if (t.args().empty()) return t;
    std::vector<FolTerm> args;
    for (const FolTerm& a : t.args()) args.push_back(abstract_term(v, c, a));
    return FolTerm::fun(t.name(), std::move(args));
}

}  // namespace

FolFormula abstract_const(std::uint32_t v, const std::string& c, const FolFormula& p) {
    switch (p.kind()) {
        case FolFormula::Kind::Falsity:
            return p;
        case FolFormula::Kind::Pre: {
            std::vector<FolTerm> args;
            for (const FolTerm& a : p.args()) args.push_back(abstract_term(v, c, a));
            return FolFormula::pre(p.name(), std::move(args));
        }
        case FolFormula::Kind::Imp:
            return FolFormula::imp(abstract_const(v, c, p.lhs()), abstract_const(v, c, p.rhs()));
        case FolFormula::Kind::Uni:
            return FolFormula::uni(abstract_const(v + 1, c, p.body()));
    }
    return p;
}

FolTerm rename_const(const FolTerm& t, const std::string& from, const std::string& to) {
    if (t.is_var()) return t;
    std::vector<FolTerm> args;
    for (const FolTerm& a : t.args()) args.push_back(rename_const(a, from, to));
    return FolTerm::fun(t.name() == from ? to : t.name(), std::move(args));
}

FolFormula rename_const(const FolFormula& p, const std::string& from, const std::string& to) {
    switch (p.kind()) {
        case FolFormula::Kind::Falsity:
            return p;
        case FolFormula::Kind::Pre: {
            std::vector<FolTerm> args;
            for (const FolTerm& a : p.args()) args.push_back(rename_const(a, from, to));
            return FolFormula::pre(p.name(), std::move(args));
        }
        case FolFormula::Kind::Imp:
            return FolFormula::imp(rename_const(p.lhs(), from, to), rename_const(p.rhs(), from, to));
        case FolFormula::Kind::Uni:
            return FolFormula::uni(rename_const(p.body(), from, to));
    }
    return p;
}

namespace {

void collect_functions(const FolTerm& t, std::set<std::string>& out) {
    if (t.is_var()) return;
    out.insert(t.name());
    for (const FolTerm& a : t.args()) collect_functions(a, out);
}

}  // namespace

void collect_functions(const FolFormula& p, std::set<std::string>& out) {
    switch (p.kind()) {
        case FolFormula::Kind::Falsity:
            return;
        case FolFormula::Kind::Pre:
            for (const FolTerm& a : p.args()) collect_functions(a, out);
            return;
        case FolFormula::Kind::Imp:
            collect_functions(p.lhs(), out);
            collect_functions(p.rhs(), out);
            return;
        case FolFormula::Kind::Uni:
            collect_functions(p.body(), out);
            return;
    }
}

bool occurs_in(const std::string& name, const FolTerm& t) {
    if (t.is_var()) return false;
    if (t.name() == name) return true;
    for (const FolTerm& a : t.args())
        if (occurs_in(name, a)) return true;
    return false;
}

bool occurs_in(const std::string& name, const FolFormula& p) {
    switch (p.kind()) {
        case FolFormula::Kind::Falsity:
            return false;
        case FolFormula::Kind::Pre:
            for (const FolTerm& a : p.args())
                if (occurs_in(name, a)) return true;
            return false;
        case FolFormula::Kind::Imp:
            return occurs_in(name, p.lhs()) || occurs_in(name, p.rhs());
        case FolFormula::Kind::Uni:
            return occurs_in(name, p.body());
    }
    return false;
}

bool occurs_in(const std::string& name, std::span<const FolFormula> z) {
    return std::any_of(z.begin(), z.end(), [&](const FolFormula& p) { return occurs_in(name, p); });
}

std::uint32_t loose_bound(const FolTerm& t) {
    if (t.is_var()) return t.index() + 1;
    std::uint32_t m = 0;
    for (const FolTerm& a : t.args()) m = std::max(m, loose_bound(a));
    return m;
}

std::uint32_t loose_bound(const FolFormula& p) {
    switch (p.kind()) {
        case FolFormula::Kind::Falsity:
            return 0;
        case FolFormula::Kind::Pre: {
            std::uint32_t m = 0;
            for (const FolTerm& a : p.args()) m = std::max(m, loose_bound(a));
            return m;
        }
        case FolFormula::Kind::Imp:
            return std::max(loose_bound(p.lhs()), loose_bound(p.rhs()));
        case FolFormula::Kind::Uni: {
            std::uint32_t b = loose_bound(p.body());
            return b == 0 ? 0 : b - 1;
        }
    }
    return 0;
}

void FolSignature::add(const FolTerm& t) {
    if (t.is_var()) return;
    auto [it, fresh] = functions.emplace(t.name(), t.args().size());
    if (!fresh && it->second != t.args().size())
        throw Error("function " + t.name() + " used with arities " + std::to_string(it->second) + " and " +
                    std::to_string(t.args().size()));
    for (const FolTerm& a : t.args()) add(a);
}

void FolSignature::add(const FolFormula& p) {
    switch (p.kind()) {
        case FolFormula::Kind::Falsity:
            return;
        case FolFormula::Kind::Pre: {
            auto [it, fresh] = predicates.emplace(p.name(), p.args().size());
            if (!fresh && it->second != p.args().size())
                throw Error("predicate " + p.name() + " used with arities " + std::to_string(it->second) + " and " +
                            std::to_string(p.args().size()));
            for (const FolTerm& a : p.args()) add(a);
            return;
        }
        case FolFormula::Kind::Imp:
            add(p.lhs());
            add(p.rhs());
            return;
        case FolFormula::Kind::Uni:
            add(p.body());
            return;
    }
}

FolFormula neg(const FolFormula& p) { return FolFormula::imp(p, FolFormula::falsity()); }

FolFormula conj(const FolFormula& p, const FolFormula& q) {
    return neg(FolFormula::imp(p, neg(q)));
}

FolFormula disj(const FolFormula& p, const FolFormula& q) { return FolFormula::imp(neg(p), q); }

FolFormula exists(const FolFormula& body) { return neg(FolFormula::uni(neg(body))); }

FolFormula truth() { return neg(FolFormula::falsity()); }

// ---------------------------------------------------------------------------
// printing

namespace {

void collect_names(const FolTerm& t, std::set<std::string>& out) {
    if (t.is_var()) return;
    out.insert(t.name());
    for (const FolTerm& a : t.args()) collect_names(a, out);
}

void collect_names(const FolFormula& p, std::set<std::string>& out) {
    switch (p.kind()) {
        case FolFormula::Kind::Falsity:
            return;
        case FolFormula::Kind::Pre:
            out.insert(p.name());
            for (const FolTerm& a : p.args()) collect_names(a, out);
            return;
        case FolFormula::Kind::Imp:
            collect_names(p.lhs(), out);
            collect_names(p.rhs(), out);
            return;
        case FolFormula::Kind::Uni:
            collect_names(p.body(), out);
            return;
    }
}

class Printer {
public:
    explicit Printer(std::set<std::string> avoid) : avoid_(std::move(avoid)) {}

    std::string term(const FolTerm& t, bool atomic) {
        if (t.is_var()) {
            if (t.index() < binders_.size()) return binders_[binders_.size() - 1 - t.index()];
            return "#" + std::to_string(t.index() - binders_.size());
        }
        if (t.args().empty()) return t.name();
        std::string s = t.name();
        for (const FolTerm& a : t.args()) s += " " + term(a, true);
        return atomic ? "(" + s + ")" : s;
    }

    // ctx 0: anything; 1: left of an implication.
    std::string formula(const FolFormula& p, int ctx) {
        switch (p.kind()) {
            case FolFormula::Kind::Falsity:
                return "⊥";
            case FolFormula::Kind::Pre: {
                std::string s = p.name();
                for (const FolTerm& a : p.args()) s += " " + term(a, true);
                return s;
            }
            case FolFormula::Kind::Imp: {
                std::string s = formula(p.lhs(), 1) + " ⟶ " + formula(p.rhs(), 0);
                return ctx > 0 ? "(" + s + ")" : s;
            }
            case FolFormula::Kind::Uni: {
                std::string name = fresh();
                binders_.push_back(name);
                std::string s = "∀" + name + ". " + formula(p.body(), 0);
                binders_.pop_back();
                return ctx > 0 ? "(" + s + ")" : s;
            }
        }
        return "?";
    }

private:
    std::string fresh() const {
        static const char* base[] = {"x", "y", "z", "w", "u", "v"};
        for (int round = 0;; ++round) {
            for (const char* b : base) {
                std::string n = round == 0 ? std::string(b) : std::string(b) + std::to_string(round);
                if (avoid_.count(n)) continue;
                if (std::find(binders_.begin(), binders_.end(), n) != binders_.end()) continue;
                return n;
            }
        }
    }

    std::set<std::string> avoid_;
    std::vector<std::string> binders_;
};

}  // namespace

std::string pretty(const FolFormula& p) {
    std::set<std::string> avoid;
    collect_names(p, avoid);
    return Printer(std::move(avoid)).formula(p, 0);
}

std::string pretty(const FolTerm& t) {
    std::set<std::string> avoid;
    collect_names(t, avoid);
    return Printer(std::move(avoid)).term(t, false);
}

std::string pretty(const FolSequent& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.assumptions.size(); ++i) {
        if (i) out += ", ";
        out += pretty(s.assumptions[i]);
    }
    return out + "] ⇝ " + pretty(s.goal);
}

}  // namespace mhl::fol
