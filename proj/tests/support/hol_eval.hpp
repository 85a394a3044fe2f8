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

// Standard-model evaluation of HOL terms with every type variable read as
// the same finite domain {0, .., n-1}. Function values are full tables, so
// only small types are practical. Logical constants get their intended
// meaning; anything else (ε, succ, sets) is reported as unsupported.

#ifndef MHL_TESTS_SUPPORT_HOL_EVAL_HPP
#define MHL_TESTS_SUPPORT_HOL_EVAL_HPP

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "mhl/syntax/logic.hpp"
#include "mhl/syntax/term.hpp"

namespace mhl::testing {

struct Unsupported : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Value {
    int atom = 0;              // bool (0/1) or domain element
    std::vector<Value> table;  // functions: one entry per domain value
    friend bool operator==(const Value& a, const Value& b) { return a.atom == b.atom && a.table == b.table; }
};

class HolModel {
public:
    explicit HolModel(int domain = 2) : domain_(domain) {}

    const std::vector<Value>& values(const syntax::Type& t) {
        auto it = cache_.find(t);
        if (it != cache_.end()) return it->second;
        std::vector<Value> out;
        if (t.is_bool()) {
            out = {Value{0, {}}, Value{1, {}}};
        } else if (t.is_var()) {
            for (int i = 0; i < domain_; ++i) out.push_back(Value{i, {}});
        } else if (t.is_fun()) {
            const auto dom = values(t.domain());
            const auto cod = values(t.codomain());
            double total = 1;
            for (std::size_t i = 0; i < dom.size(); ++i) total *= static_cast<double>(cod.size());
            if (total > 1 << 16) throw Unsupported("type too large: " + t.to_string());
            std::vector<std::size_t> digits(dom.size(), 0);
            for (;;) {
                Value f;
                for (std::size_t d : digits) f.table.push_back(cod[d]);
                out.push_back(std::move(f));
                std::size_t i = 0;
                while (i < digits.size() && ++digits[i] == cod.size()) digits[i++] = 0;
                if (i == digits.size()) break;
            }
        } else {
            throw Unsupported("type " + t.to_string());
        }
        return cache_.emplace(t, std::move(out)).first->second;
    }

    Value apply(const Value& f, const Value& a, const syntax::Type& dom) {
        const auto& d = values(dom);
        for (std::size_t i = 0; i < d.size(); ++i)
            if (d[i] == a) return f.table[i];
        throw std::logic_error("argument outside its type");
    }

    using Env = std::map<std::string, Value>;

    Value eval(const syntax::Term& t, const Env& frees, std::vector<Value>& bound, std::vector<syntax::Type>& btypes) {
        using K = syntax::Term::Kind;
        switch (t.kind()) {
            case K::Free: {
                auto it = frees.find(t.name());
                if (it == frees.end()) throw Unsupported("unvalued variable " + t.name());
                return it->second;
            }
            case K::Bound: return bound.at(bound.size() - 1 - t.index());
            case K::Const: return constant(t.name(), t.type());
            case K::App: {
                Value f = eval(t.fun(), frees, bound, btypes);
                Value a = eval(t.arg(), frees, bound, btypes);
                return apply(f, a, syntax::type_of(t.fun(), btypes).domain());
            }
            case K::Abs: {
                Value out;
                for (const Value& v : values(t.type())) {
                    bound.push_back(v);
                    btypes.push_back(t.type());
                    out.table.push_back(eval(t.body(), frees, bound, btypes));
                    bound.pop_back();
                    btypes.pop_back();
                }
                return out;
            }
        }
        return {};
    }

    bool holds(const syntax::Term& t, const Env& frees) {
        std::vector<Value> bound;
        std::vector<syntax::Type> btypes;
        return eval(t, frees, bound, btypes).atom == 1;
    }

    // Does every valuation of the free variables that satisfies `hyps` also
    // satisfy `concl`? Returns the number of valuations examined, or nullopt
    // on a counterexample.
    std::optional<std::size_t> valid(const std::vector<syntax::Term>& hyps, const syntax::Term& concl) {
        std::set<syntax::Term> vars;
        for (const auto& h : hyps) syntax::collect_free_vars(h, vars);
        syntax::collect_free_vars(concl, vars);
        std::vector<syntax::Term> vs(vars.begin(), vars.end());
        Env env;
        std::size_t seen = 0;
        bool ok = true;
        std::function<void(std::size_t)> go = [&](std::size_t i) {
            if (!ok) return;
            if (i == vs.size()) {
                ++seen;
                for (const auto& h : hyps)
                    if (!holds(h, env)) return;
                ok = holds(concl, env);
                return;
            }
            for (const Value& v : values(vs[i].type())) {
                env[vs[i].name()] = v;
                go(i + 1);
            }
        };
        go(0);
        if (!ok) return std::nullopt;
        return seen;
    }

private:
    static Value b(bool v) { return Value{v ? 1 : 0, {}}; }

    Value binop(const syntax::Type& t, const std::function<bool(bool, bool)>& op) {
        (void)t;
        Value f;
        for (int x = 0; x < 2; ++x) {
            Value g;
            for (int y = 0; y < 2; ++y) g.table.push_back(b(op(x, y)));
            f.table.push_back(g);
        }
        return f;
    }

    Value constant(const std::string& name, const syntax::Type& t) {
        namespace cn = syntax::cname;
        if (name == cn::kTrue) return b(true);
        if (name == cn::kFalse) return b(false);
        if (name == cn::kNot) return Value{0, {b(true), b(false)}};
        if (name == cn::kImp) return binop(t, [](bool x, bool y) { return !x || y; });
        if (name == cn::kConj) return binop(t, [](bool x, bool y) { return x && y; });
        if (name == cn::kDisj) return binop(t, [](bool x, bool y) { return x || y; });
        if (name == cn::kEq) {
            const auto& d = values(t.domain());
            Value f;
            for (const Value& x : d) {
                Value g;
                for (const Value& y : d) g.table.push_back(b(x == y));
                f.table.push_back(g);
            }
            return f;
        }
        if (name == cn::kAll || name == cn::kEx) {
            bool all = name == cn::kAll;
            Value f;
            for (const Value& p : values(t.domain())) {
                bool r = all;
                for (const Value& v : p.table) r = all ? (r && v.atom == 1) : (r || v.atom == 1);
                f.table.push_back(b(r));
            }
            return f;
        }
        throw Unsupported("constant " + name);
    }

    int domain_;
    std::map<syntax::Type, std::vector<Value>> cache_;
};

}  // namespace mhl::testing

#endif
