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

// A reference lambda calculus with named variables and textbook
// capture-avoiding substitution. It shares nothing with the de Bruijn
// implementation except the Term type used to convert in and out.

#ifndef MHL_TESTS_SUPPORT_NAMED_HPP
#define MHL_TESTS_SUPPORT_NAMED_HPP

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "mhl/syntax/term.hpp"

namespace mhl::testing {

struct Named;
using NamedPtr = std::shared_ptr<const Named>;

struct Named {
    enum class Kind { Var, Const, App, Lam } kind;
    std::string name;  // Var, Const, Lam binder
    syntax::Type type = syntax::Type::boolean();
    NamedPtr fun, arg;  // App
    NamedPtr body;      // Lam
};

inline NamedPtr nvar(std::string n, syntax::Type t) {
    return std::make_shared<Named>(Named{Named::Kind::Var, std::move(n), std::move(t), nullptr, nullptr, nullptr});
}
inline NamedPtr nconst(std::string n, syntax::Type t) {
    return std::make_shared<Named>(Named{Named::Kind::Const, std::move(n), std::move(t), nullptr, nullptr, nullptr});
}
inline NamedPtr napp(NamedPtr f, NamedPtr a) {
    return std::make_shared<Named>(
        Named{Named::Kind::App, "", syntax::Type::boolean(), std::move(f), std::move(a), nullptr});
}
inline NamedPtr nlam(std::string x, syntax::Type t, NamedPtr body) {
    return std::make_shared<Named>(Named{Named::Kind::Lam, std::move(x), std::move(t), nullptr, nullptr, std::move(body)});
}

class NamedCalculus {
public:
    // Bound variables get names `_1`, `_2`, ... that cannot clash with the
    // free variables of generated terms.
    NamedPtr from_term(const syntax::Term& t) {
        std::vector<std::pair<std::string, syntax::Type>> env;
        return from_term(t, env);
    }

    syntax::Term to_term(const NamedPtr& n) const {
        std::vector<std::string> env;
        return to_term(n, env);
    }

    // Simultaneous t[x1 := u1, ...].
    NamedPtr subst_all(const NamedPtr& t, const std::map<std::string, NamedPtr>& s) {
        switch (t->kind) {
            case Named::Kind::Var: {
                auto it = s.find(t->name);
                return it == s.end() ? t : it->second;
            }
            case Named::Kind::Const: return t;
            case Named::Kind::App: return napp(subst_all(t->fun, s), subst_all(t->arg, s));
            case Named::Kind::Lam: {
                std::map<std::string, NamedPtr> inner = s;
                inner.erase(t->name);
                std::set<std::string> fv;
                for (const auto& [k, v] : inner) free_vars(v, fv);
                if (!fv.count(t->name)) return nlam(t->name, t->type, subst_all(t->body, inner));
                std::string z = fresh();
                inner[t->name] = nvar(z, t->type);
                return nlam(z, t->type, subst_all(t->body, inner));
            }
        }
        return t;
    }

    static void free_vars(const NamedPtr& n, std::set<std::string>& out, std::set<std::string> bound = {}) {
        switch (n->kind) {
            case Named::Kind::Var:
                if (!bound.count(n->name)) out.insert(n->name);
                return;
            case Named::Kind::Const: return;
            case Named::Kind::App:
                free_vars(n->fun, out, bound);
                free_vars(n->arg, out, bound);
                return;
            case Named::Kind::Lam:
                bound.insert(n->name);
                free_vars(n->body, out, bound);
                return;
        }
    }

    // t[x := u], renaming binders that would capture free variables of u.
    NamedPtr subst(const NamedPtr& t, const std::string& x, const NamedPtr& u) {
        switch (t->kind) {
            case Named::Kind::Var: return t->name == x ? u : t;
            case Named::Kind::Const: return t;
            case Named::Kind::App: return napp(subst(t->fun, x, u), subst(t->arg, x, u));
            case Named::Kind::Lam: {
                if (t->name == x) return t;
                std::set<std::string> fu;
                free_vars(u, fu);
                if (!fu.count(t->name)) return nlam(t->name, t->type, subst(t->body, x, u));
                std::string z = fresh();
                NamedPtr body = subst(t->body, t->name, nvar(z, t->type));
                return nlam(z, t->type, subst(body, x, u));
            }
        }
        return t;
    }

    // Normal-order beta reduction to normal form, then eta contraction.
    NamedPtr normalize(const NamedPtr& t) { return eta(beta(t)); }

    NamedPtr beta(const NamedPtr& t) {
        switch (t->kind) {
            case Named::Kind::Var:
            case Named::Kind::Const: return t;
            case Named::Kind::Lam: return nlam(t->name, t->type, beta(t->body));
            case Named::Kind::App: {
                NamedPtr f = beta(t->fun);
                if (f->kind == Named::Kind::Lam) return beta(subst(f->body, f->name, t->arg));
                return napp(f, beta(t->arg));
            }
        }
        return t;
    }

    NamedPtr eta(const NamedPtr& t) {
        switch (t->kind) {
            case Named::Kind::Var:
            case Named::Kind::Const: return t;
            case Named::Kind::App: return napp(eta(t->fun), eta(t->arg));
            case Named::Kind::Lam: {
                NamedPtr body = eta(t->body);
                if (body->kind == Named::Kind::App && body->arg->kind == Named::Kind::Var && body->arg->name == t->name) {
                    std::set<std::string> fv;
                    free_vars(body->fun, fv);
                    if (!fv.count(t->name)) return body->fun;
                }
                return nlam(t->name, t->type, body);
            }
        }
        return t;
    }

    std::string fresh() { return "_" + std::to_string(++counter_); }

    // Dangling indices of `t` name the entries of `env` (innermost last).
    NamedPtr from_term(const syntax::Term& t, std::vector<std::pair<std::string, syntax::Type>>& env) {
        switch (t.kind()) {
            case syntax::Term::Kind::Free: return nvar(t.name(), t.type());
            case syntax::Term::Kind::Const: return nconst(t.name(), t.type());
            case syntax::Term::Kind::Bound: {
                const auto& [n, ty] = env.at(env.size() - 1 - t.index());
                return nvar(n, ty);
            }
            case syntax::Term::Kind::App: return napp(from_term(t.fun(), env), from_term(t.arg(), env));
            case syntax::Term::Kind::Abs: {
                std::string x = fresh();
                env.emplace_back(x, t.type());
                NamedPtr body = from_term(t.body(), env);
                env.pop_back();
                return nlam(x, t.type(), body);
            }
        }
        return nullptr;
    }

    syntax::Term to_term(const NamedPtr& n, std::vector<std::string>& env) const {
        switch (n->kind) {
            case Named::Kind::Var:
                for (std::size_t i = env.size(); i-- > 0;)
                    if (env[i] == n->name) return syntax::Term::bound(static_cast<std::uint32_t>(env.size() - 1 - i));
                return syntax::Term::free(n->name, n->type);
            case Named::Kind::Const: return syntax::Term::constant(n->name, n->type);
            case Named::Kind::App: return syntax::Term::app(to_term(n->fun, env), to_term(n->arg, env));
            case Named::Kind::Lam: {
                env.push_back(n->name);
                syntax::Term body = to_term(n->body, env);
                env.pop_back();
                return syntax::Term::abs(n->name, n->type, body);
            }
        }
        return syntax::Term::bound(0);
    }

private:
    int counter_ = 0;
};

}  // namespace mhl::testing

#endif
