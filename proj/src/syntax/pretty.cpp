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

#include "mhl/syntax/pretty.hpp"

#include <set>
#include <vector>

#include "mhl/syntax/logic.hpp"

namespace mhl::syntax {

namespace {

constexpr int kBinder = 0;
constexpr int kIff = 10;
constexpr int kImp = 20;
constexpr int kDisj = 30;
constexpr int kConj = 40;
constexpr int kNot = 50;
constexpr int kRel = 60;
constexpr int kApp = 100;

struct Printer {
    const PrettyOptions& opts;
    std::set<std::string> avoid;
    std::vector<std::string> names;  // innermost last

    std::string paren(const std::string& s, bool p) { return p ? "(" + s + ")" : s; }

    std::string bound_name(std::uint32_t i) {
        if (i >= names.size()) return "#" + std::to_string(i - names.size());
        return names[names.size() - 1 - i];
    }

    std::string fresh(const std::string& hint) {
        std::set<std::string> used = avoid;
        used.insert(names.begin(), names.end());
        std::string base = hint.empty() || hint[0] == '%' || hint[0] == '?' ? "x" : hint;
        return variant_name(base, used);
    }

    std::string annot(const std::string& s, const Type& ty) {
        return opts.annotate_types ? "(" + s + " :: " + pretty_type(ty) + ")" : s;
    }

    // Binder over `pred`: an abstraction is printed with its own hint; any
    // other predicate is eta-expanded.
    // `quant` is the binder constant applied to `pred`; its type gives the
    // bound variable's type when pred is eta-contracted.
    std::string binder(const std::string& sym, const Term& pred, int ctx, const Term* quant = nullptr) {
        Term body = pred;
        Type ty = pred.is_abs() ? pred.type() : quant ? quant->type().domain().domain() : type_of(pred).domain();
        std::string hint = pred.is_abs() ? pred.name() : "x";
        if (!pred.is_abs()) body = Term::app(shift(pred, 1), Term::bound(0));
        else body = pred.body();
        std::string v = fresh(hint);
        names.push_back(v);
        std::string inner = go(body, kBinder);
        names.pop_back();
        std::string var = opts.annotate_types ? v + " :: " + pretty_type(ty) : v;
        return paren(sym + var + ". " + inner, ctx > kBinder);
    }

    bool binder_form(const Term& arg) { return arg.is_abs() || opts.eta_expand; }

    std::string infix(const Term& a, const Term& b, const std::string& op, int prec, bool right, int ctx) {
        std::string l = go(a, right ? prec + 1 : prec + 1);
        std::string r = go(b, right ? prec : prec + 1);
        return paren(l + " " + op + " " + r, ctx > prec);
    }

    std::string go(const Term& t, int ctx) {
        std::vector<Term> args;
        Term head = strip_app(t, args);
        if (head.is_const()) {
            const std::string& c = head.name();
            std::size_t n = args.size();
            if (n == 2 && c == cname::kImp) return infix(args[0], args[1], "⟶", kImp, true, ctx);
            if (n == 2 && c == cname::kConj) return infix(args[0], args[1], "∧", kConj, true, ctx);
            if (n == 2 && c == cname::kDisj) return infix(args[0], args[1], "∨", kDisj, true, ctx);
            if (n == 2 && c == cname::kEq) {
                if (is_iff(t) && !opts.iff_as_eq) return infix(args[0], args[1], "⟷", kIff, true, ctx);
                return infix(args[0], args[1], "=", kRel, false, ctx);
            }
            if (n == 2 && c == cname::kMem) return infix(args[0], args[1], "∈", kRel, false, ctx);
            if (n == 1 && c == cname::kNot) return paren("¬ " + go(args[0], kNot), ctx > kNot);
            if (n == 1 && c == cname::kAll && binder_form(args[0])) return binder("∀", args[0], ctx, &head);
            if (n == 1 && c == cname::kEx && binder_form(args[0])) return binder("∃", args[0], ctx, &head);
            if (n == 1 && c == cname::kEps && binder_form(args[0])) return binder("SOME ", args[0], ctx, &head);
            if (n == 1 && c == cname::kCollect && binder_form(args[0])) {
                std::string s = binder("", args[0], kBinder, &head);
                return "{" + s + "}";
            }
            if (n == 0 && c == cname::kFalse) return "⊥";
            if (n == 0 && c == cname::kTrue) return "⊤";
        }
        switch (t.kind()) {
            case Term::Kind::Free: return annot(t.name(), t.type());
            case Term::Kind::Const: return annot(t.name(), t.type());
            case Term::Kind::Bound: return bound_name(t.index());
            case Term::Kind::Abs: return binder("λ", t, ctx);
            case Term::Kind::App: {
                std::string f = go(t.fun(), kApp);
                std::string a = go(t.arg(), kApp + 1);
                return paren(f + " " + a, ctx > kApp);
            }
        }
        return "?";
    }
};

void collect_names(const Term& t, std::set<std::string>& out) {
    switch (t.kind()) {
        case Term::Kind::Free:
        case Term::Kind::Const: out.insert(t.name()); break;
        case Term::Kind::App:
            collect_names(t.fun(), out);
            collect_names(t.arg(), out);
            break;
        case Term::Kind::Abs: collect_names(t.body(), out); break;
        default: break;
    }
}

}  // namespace

std::string pretty(const Term& t, const PrettyOptions& opts) {
    Printer p{opts, {}, {}};
    collect_names(t, p.avoid);
    return p.go(t, kBinder);
}

std::string pretty_type(const Type& t) {
    if (t.is_var()) return "'" + t.name();
    if (t.is_fun()) {
        std::string dom = pretty_type(t.domain());
        if (t.domain().is_fun()) dom = "(" + dom + ")";
        return dom + " ⇒ " + pretty_type(t.codomain());
    }
    if (t.args().empty()) return t.name();
    std::string out;
    if (t.args().size() == 1) {
        out = pretty_type(t.args()[0]);
        if (t.args()[0].is_fun()) out = "(" + out + ")";
    } else {
        out = "(";
        for (std::size_t i = 0; i < t.args().size(); ++i) {
            if (i) out += ", ";
            out += pretty_type(t.args()[i]);
        }
        out += ")";
    }
    return out + " " + t.name();
}

}  // namespace mhl::syntax
