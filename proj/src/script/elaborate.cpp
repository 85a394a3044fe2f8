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

#include "mhl/script/elaborate.hpp"

#include <set>
#include <utility>
#include <vector>

#include "mhl/fol/parse.hpp"
#include "mhl/syntax/logic.hpp"
#include "mhl/syntax/pretty.hpp"
#include "mhl/syntax/signature.hpp"

namespace mhl::script {

namespace cn = syntax::cname;

namespace {

bool is_flex(const Type& t) { return t.is_var() && !t.name().empty() && t.name()[0] == '?'; }

class Elaborator {
public:
    explicit Elaborator(const ElabContext& ctx) : ctx_(ctx), sig_(ctx.theory->signature()) {}

    Term run(const PreTerm& t, const std::optional<Type>& expected) {
        auto [term, ty] = infer(t);
        if (expected) unify(ty, *expected, t.span, "expected a term of type " + syntax::pretty_type(*expected));
        Term out = finish(term);
        try {
            syntax::infer_type(sig_, out);
        } catch (const TypeError& e) {
            throw ParseError(e.what(), t.span);
        }
        return out;
    }

private:
    struct Binder {
        std::string name;
        Type type;
    };

    Type fresh() { return Type::var("?t" + std::to_string(++counter_)); }

    Type resolve(const Type& t) const {
        if (t.is_var()) {
            auto it = sub_.find(t.name());
            return it == sub_.end() ? t : resolve(it->second);
        }
        if (t.args().empty()) return t;
        std::vector<Type> args;
        for (const Type& a : t.args()) args.push_back(resolve(a));
        return Type::con(t.name(), std::move(args));
    }

    bool occurs(const std::string& v, const Type& t) const {
        if (t.is_var()) return t.name() == v;
        for (const Type& a : t.args())
            if (occurs(v, a)) return true;
        return false;
    }

    bool unify_types(const Type& x, const Type& y) {
        Type a = resolve(x), b = resolve(y);
        if (a == b) return true;
        if (is_flex(a)) {
            if (occurs(a.name(), b)) return false;
            sub_.emplace(a.name(), b);
            return true;
        }
        if (is_flex(b)) return unify_types(b, a);
        if (a.is_var() || b.is_var()) return false;
        if (a.name() != b.name() || a.args().size() != b.args().size()) return false;
        for (std::size_t i = 0; i < a.args().size(); ++i)
            if (!unify_types(a.args()[i], b.args()[i])) return false;
        return true;
    }

    void unify(const Type& a, const Type& b, const SourceSpan& span, const std::string& what) {
        if (!unify_types(a, b))
            throw ParseError(what + " (have " + show(a) + ", need " + show(b) + ")", span);
    }

    std::string show(const Type& t) const { return syntax::pretty_type(resolve(t)); }

    std::pair<Term, Type> constant(const std::string& name, const SourceSpan& span) {
        auto ty = sig_.constant_type(name);
        if (!ty) throw ParseError("unknown constant " + name + " (not declared in this theory)", span);
        std::set<std::string> vars;
        syntax::collect_type_vars(*ty, vars);
        syntax::TypeSubst inst;
        for (const std::string& v : vars) inst.emplace(v, fresh());
        Type t = syntax::apply(inst, *ty);
        return {Term::constant(name, t), t};
    }

    std::pair<Term, Type> apply(std::pair<Term, Type> f, std::pair<Term, Type> a, const SourceSpan& span) {
        Type r = fresh();
        unify(f.second, Type::fun(a.second, r), span, "type mismatch in application");
        return {Term::app(f.first, a.first), r};
    }

    Type check_user_type(const Type& t, const SourceSpan& span) {
        try {
            sig_.check_type(t);
        } catch (const TypeError& e) {
            throw ParseError(e.what(), span);
        }
        return t;
    }

    std::pair<Term, Type> identifier(const PreTerm& t) {
        const std::string& n = t.name;
        if (n == "⊥") return constant(cn::kFalse, t.span);
        if (n == "⊤") return constant(cn::kTrue, t.span);
        if (n[0] == '?') {
            auto it = ctx_.abbrevs.find(n);
            if (it == ctx_.abbrevs.end()) throw ParseError("unknown abbreviation " + n, t.span);
            try {
                return {it->second, syntax::infer_type(sig_, it->second)};
            } catch (const TypeError& e) {
                throw ParseError(e.what(), t.span);
            }
        }
        for (std::size_t i = binders_.size(); i-- > 0;)
            if (binders_[i].name == n)
                return {Term::bound(static_cast<std::uint32_t>(binders_.size() - 1 - i)), binders_[i].type};
        if (auto it = ctx_.fixed.find(n); it != ctx_.fixed.end()) return {Term::free(n, it->second), it->second};
        if (sig_.has_constant(n)) return constant(n, t.span);
        if (!ctx_.allow_new_frees) throw ParseError("unknown variable " + n, t.span);
        auto [it, inserted] = frees_.emplace(n, Type::boolean());
        if (inserted) it->second = fresh();
        return {Term::free(n, it->second), it->second};
    }

    std::pair<Term, Type> infer(const PreTerm& t) {
        switch (t.kind) {
            case PreTerm::Kind::Ident:
                return identifier(t);
            case PreTerm::Kind::App:
                return apply(infer(t.arg(0)), infer(t.arg(1)), t.span);
            case PreTerm::Kind::Not:
                return apply(constant(cn::kNot, t.span), infer(t.arg(0)), t.span);
            case PreTerm::Kind::Annot: {
                auto r = infer(t.arg(0));
                unify(r.second, check_user_type(*t.type, t.span), t.span, "type annotation does not fit");
                return r;
            }
            case PreTerm::Kind::Infix: {
                auto l = infer(t.arg(0));
                auto r = infer(t.arg(1));
                std::string c;
                if (t.name == "⟶") c = cn::kImp;
                else if (t.name == "∧") c = cn::kConj;
                else if (t.name == "∨") c = cn::kDisj;
                else if (t.name == "∈") c = cn::kMem;
                else c = cn::kEq;
                if (t.name == "⟷") unify(l.second, Type::boolean(), t.arg(0).span, "⟷ needs formulas");
                return apply(apply(constant(c, t.span), l, t.span), r, t.span);
            }
            case PreTerm::Kind::Binder:
                return binder(t, 0);
            case PreTerm::Kind::Collect: {
                auto lam = abstraction(t.vars[0], t.arg(0), t.span, true);
                return apply(constant(cn::kCollect, t.span), lam, t.span);
            }
        }
        throw ParseError("bad term", t.span);
    }

    std::pair<Term, Type> abstraction(const PreTerm::Var& v, const PreTerm& body, const SourceSpan& span,
                                      bool bool_body, std::size_t next_var = 0, const PreTerm* outer = nullptr) {
        Type ty = v.type ? check_user_type(*v.type, span) : fresh();
        binders_.push_back({v.name, ty});
        std::pair<Term, Type> b = outer ? binder(*outer, next_var) : infer(body);
        binders_.pop_back();
        if (bool_body) unify(b.second, Type::boolean(), body.span, "the body of a binder must be a formula");
        return {Term::abs(v.name, ty, b.first), Type::fun(ty, b.second)};
    }

    // Binder t over its variables from index i on.
    std::pair<Term, Type> binder(const PreTerm& t, std::size_t i) {
        const PreTerm& body = t.arg(0);
        bool last = i + 1 == t.vars.size();
        const std::string& op = t.name;
        bool pred = op != "λ";
        auto lam = last ? abstraction(t.vars[i], body, t.span, pred)
                        : abstraction(t.vars[i], body, t.span, pred, i + 1, &t);
        if (op == "λ") return lam;
        const char* c = op == "∀" ? cn::kAll : op == "∃" ? cn::kEx : cn::kEps;
        return apply(constant(c, t.span), lam, t.span);
    }

    Term finish(const Term& t) {
        std::set<std::string> taken;
        syntax::collect_type_vars(t, taken);
        for (const auto& [n, ty] : ctx_.fixed) syntax::collect_type_vars(ty, taken);
        defaults_.clear();
        return map_types(t, taken);
    }

    Type final_type(const Type& t, std::set<std::string>& taken) {
        Type r = resolve(t);
        std::set<std::string> vars;
        syntax::collect_type_vars(r, vars);
        syntax::TypeSubst s;
        for (const std::string& v : vars) {
            if (v[0] != '?') continue;
            auto it = defaults_.find(v);
            if (it == defaults_.end()) {
                std::string name = syntax::variant_name("a", taken);
                for (char c = 'a'; c <= 'z'; ++c)
                    if (!taken.count(std::string(1, c))) {
                        name = std::string(1, c);
                        break;
                    }
                taken.insert(name);
                it = defaults_.emplace(v, Type::var(name)).first;
            }
            s.emplace(v, it->second);
        }
        return s.empty() ? r : syntax::apply(s, r);
    }

    Term map_types(const Term& t, std::set<std::string>& taken) {
        switch (t.kind()) {
            case Term::Kind::Free: return Term::free(t.name(), final_type(t.type(), taken));
            case Term::Kind::Const: return Term::constant(t.name(), final_type(t.type(), taken));
            case Term::Kind::Bound: return t;
            case Term::Kind::App: {
                Term f = map_types(t.fun(), taken);
                return Term::app(f, map_types(t.arg(), taken));
            }
            case Term::Kind::Abs: {
                Type ty = final_type(t.type(), taken);
                return Term::abs(t.name(), ty, map_types(t.body(), taken));
            }
        }
        return t;
    }

    const ElabContext& ctx_;
    const syntax::Signature& sig_;
    std::map<std::string, Type> sub_;
    std::map<std::string, Type> frees_;
    std::map<std::string, Type> defaults_;
    std::vector<Binder> binders_;
    int counter_ = 0;
};

}  // namespace

Term elaborate(const PreTerm& t, const ElabContext& ctx, const std::optional<Type>& expected) {
    if (!ctx.theory) throw Error("elaborate: no theory");
    return Elaborator(ctx).run(t, expected);
}

Term parse_formula(std::string_view text, const ElabContext& ctx, const SourceSpan& origin) {
    return elaborate(*parse_preterm(text, origin), ctx, Type::boolean());
}

Term parse_term(std::string_view text, const ElabContext& ctx, const SourceSpan& origin) {
    return elaborate(*parse_preterm(text, origin), ctx);
}

std::variant<Term, fol::FolFormula> parse_formula(std::string_view text, Profile profile, const ElabContext& ctx,
                                                  const SourceSpan& origin) {
    if (profile == Profile::FOL) return fol::parse_formula(text, origin);
    return parse_formula(text, ctx, origin);
}

}  // namespace mhl::script
