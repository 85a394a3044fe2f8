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

// Random well-typed HOL terms for property tests.

#ifndef MHL_TESTS_SUPPORT_TERM_GEN_HPP
#define MHL_TESTS_SUPPORT_TERM_GEN_HPP

#include <random>
#include <string>
#include <vector>

#include "mhl/syntax/logic.hpp"
#include "mhl/syntax/term.hpp"

namespace mhl::testing {

using syntax::Term;
using syntax::Type;

class TermGen {
public:
    explicit TermGen(std::uint64_t seed) : rng_(seed) {}

    static Type a() { return Type::var("a"); }
    static Type b() { return Type::boolean(); }
    static Type fn(Type x, Type y) { return Type::fun(std::move(x), std::move(y)); }

    // Types the generator knows how to fill.
    std::vector<Type> types() const { return {b(), a(), fn(a(), b()), fn(a(), a()), fn(b(), b())}; }

    Type any_type() { return types()[pick(types().size())]; }

    // A term of type `ty` whose dangling bound indices are typed by `binders`
    // (innermost last).
    Term term(const Type& ty, int depth, std::vector<Type> binders = {}) { return gen(ty, depth, binders); }

    // Free variables used by the generator.
    static std::vector<Term> frees() {
        return {Term::free("p", b()),          Term::free("q", b()),
                Term::free("x", a()),          Term::free("y", a()),
                Term::free("f", fn(a(), a())), Term::free("P", fn(a(), b())),
                Term::free("Q", fn(a(), b())), Term::free("R", fn(a(), fn(a(), b()))),
                Term::free("h", fn(b(), b()))};
    }

    int pick(std::size_t n) { return std::uniform_int_distribution<int>(0, static_cast<int>(n) - 1)(rng_); }

private:
    Term leaf(const Type& ty, const std::vector<Type>& binders) {
        std::vector<Term> options;
        for (std::size_t i = 0; i < binders.size(); ++i)
            if (binders[binders.size() - 1 - i] == ty) options.push_back(Term::bound(static_cast<std::uint32_t>(i)));
        for (const Term& f : frees())
            if (f.type() == ty) options.push_back(f);
        if (ty.is_bool()) {
            options.push_back(syntax::mk_true());
            options.push_back(syntax::mk_false());
        }
        if (!options.empty()) return options[pick(options.size())];
        // Function type without a variable of that type: a lambda.
        std::vector<Type> inner = binders;
        inner.push_back(ty.domain());
        return Term::abs("v", ty.domain(), leaf(ty.codomain(), inner));
    }

    Term gen(const Type& ty, int depth, std::vector<Type>& binders) {
        if (depth <= 0 || pick(5) == 0) return leaf(ty, binders);
        int choice = pick(ty.is_bool() ? 6 : 3);
        if (ty.is_fun() && choice == 0) {
            binders.push_back(ty.domain());
            Term body = gen(ty.codomain(), depth - 1, binders);
            binders.pop_back();
            return Term::abs(hint(), ty.domain(), body);
        }
        if (ty.is_bool() && choice >= 3) {
            namespace cn = syntax::cname;
            Type bb = fn(b(), fn(b(), b()));
            auto bin = [&](const char* c) {
                Term l = gen(b(), depth - 1, binders);
                return Term::app(Term::app(Term::constant(c, bb), l), gen(b(), depth - 1, binders));
            };
            switch (pick(5)) {
                case 0: return bin(cn::kImp);
                case 1: return bin(cn::kConj);
                case 2: return Term::app(Term::constant(cn::kNot, fn(b(), b())), gen(b(), depth - 1, binders));
                case 3: {
                    Type t = pick(2) ? a() : b();
                    Term l = gen(t, depth - 1, binders);
                    Term eq = Term::constant(cn::kEq, fn(t, fn(t, b())));
                    return Term::app(Term::app(eq, l), gen(t, depth - 1, binders));
                }
                default: {
                    Type t = pick(2) ? a() : b();
                    binders.push_back(t);
                    Term body = gen(b(), depth - 1, binders);
                    binders.pop_back();
                    Term q = Term::constant(pick(2) ? cn::kAll : cn::kEx, fn(fn(t, b()), b()));
                    return Term::app(q, Term::abs(hint(), t, body));
                }
            }
        }
        // Application: a function into `ty` applied to an argument.
        Type arg_ty = pick(2) ? a() : b();
        Term fun = gen(fn(arg_ty, ty), depth - 1, binders);
        Term arg = gen(arg_ty, depth - 1, binders);
        return Term::app(fun, arg);
    }

    std::string hint() {
        static const char* names[] = {"x", "y", "z", "u", "w"};
        return names[pick(5)];
    }

    std::mt19937_64 rng_;
};

}  // namespace mhl::testing

#endif
