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

// Random surface syntax trees for printer/parser round trips.

#ifndef MHL_TESTS_SUPPORT_PRETERM_GEN_HPP
#define MHL_TESTS_SUPPORT_PRETERM_GEN_HPP

#include <random>
#include <string>
#include <vector>

#include "mhl/script/preterm.hpp"

namespace mhl::testing {

class PreTermGen {
public:
    explicit PreTermGen(std::uint64_t seed) : rng_(seed) {}

    script::PreTermPtr term(int depth) {
        using namespace script;
        if (depth <= 0 || pick(6) == 0) return pre::ident(ident());
        switch (pick(8)) {
            case 0: return pre::app(term(depth - 1), term(depth - 1));
            case 1: {
                static const char* ops[] = {"∀", "∃", "λ", "SOME"};
                std::vector<PreTerm::Var> vars;
                int n = 1 + pick(2);
                for (int i = 0; i < n; ++i) vars.push_back(var(n == 1));
                return pre::binder(ops[pick(4)], vars, term(depth - 1));
            }
            case 2:
            case 3: {
                static const char* ops[] = {"⟷", "⟶", "∨", "∧", "=", "∈"};
                return pre::infix(ops[pick(6)], term(depth - 1), term(depth - 1));
            }
            case 4: return pre::negation(term(depth - 1));
            case 5: return pre::annot(term(depth - 1), type());
            case 6: return pre::collect(var(true), term(depth - 1));
            default: return pre::app(pre::ident(ident()), term(depth - 1));
        }
    }

private:
    int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

    std::string ident() {
        static const char* names[] = {"x", "y", "P", "Q", "f", "False", "⊤", "⊥", "?th", "x'", "a_1"};
        return names[pick(11)];
    }

    syntax::Type type() {
        using syntax::Type;
        switch (pick(4)) {
            case 0: return Type::boolean();
            case 1: return Type::var("a");
            case 2: return Type::fun(Type::var("a"), Type::boolean());
            default: return Type::fun(Type::fun(Type::var("a"), Type::var("b")), Type::boolean());
        }
    }

    script::PreTerm::Var var(bool allow_type) {
        static const char* names[] = {"x", "y", "z", "s"};
        script::PreTerm::Var v{names[pick(4)], std::nullopt};
        if (allow_type && pick(3) == 0) v.type = type();
        return v;
    }

    std::mt19937_64 rng_;
};

}  // namespace mhl::testing

#endif
