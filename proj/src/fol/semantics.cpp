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

#include "mhl/fol/semantics.hpp"

#include <atomic>
#include <memory>
#include <limits>

#include "mhl/error.hpp"

namespace mhl::fol {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > (std::uint64_t{1} << 62) / a) throw Error("model space too large to enumerate");
    return a * b;
}

std::uint64_t ipow(std::uint64_t base, std::size_t exp) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

std::size_t table_index(std::uint32_t size, const std::vector<std::uint32_t>& args) {
    std::size_t k = 0;
    for (std::uint32_t a : args) k = k * size + a;
    return k;
}

bool eval_formula(const Model& m, const FolFormula& p, std::vector<std::uint32_t>& env) {
    switch (p.kind()) {
        case FolFormula::Kind::Falsity:
            return false;
        case FolFormula::Kind::Pre: {
            auto it = m.predicates.find(p.name());
            if (it == m.predicates.end()) throw Error("model has no predicate " + p.name());
            if (it->second.arity != p.args().size())
                throw Error("predicate " + p.name() + " has arity " + std::to_string(it->second.arity));
            std::vector<std::uint32_t> args;
            for (const FolTerm& a : p.args()) args.push_back(eval(m, a, env));
            return it->second.values.at(table_index(m.size, args));
        }
        case FolFormula::Kind::Imp:
            return !eval_formula(m, p.lhs(), env) || eval_formula(m, p.rhs(), env);
        case FolFormula::Kind::Uni:
            for (std::uint32_t d = 0; d < m.size; ++d) {
                env.insert(env.begin(), d);
                bool ok = eval_formula(m, p.body(), env);
                env.erase(env.begin());
                if (!ok) return false;
            }
            return true;
    }
    return false;
}

}  // namespace

std::uint32_t eval(const Model& m, const FolTerm& t, const std::vector<std::uint32_t>& env) {
    if (t.is_var()) {
        if (t.index() >= env.size()) throw Error("index #" + std::to_string(t.index()) + " outside the environment");
        return env[t.index()];
    }
    auto it = m.functions.find(t.name());
    if (it == m.functions.end()) throw Error("model has no function " + t.name());
    if (it->second.arity != t.args().size())
        throw Error("function " + t.name() + " has arity " + std::to_string(it->second.arity));
    std::vector<std::uint32_t> args;
    for (const FolTerm& a : t.args()) args.push_back(eval(m, a, env));
    return it->second.values.at(table_index(m.size, args));
}

bool eval(const Model& m, const FolFormula& p) {
    std::vector<std::uint32_t> env = m.env;
    return eval_formula(m, p, env);
}

std::string Model::to_string() const {
    std::string out = "domain {";
    for (std::uint32_t d = 0; d < size; ++d) out += (d ? ", " : "") + std::to_string(d);
    out += "}";
    auto tuple = [&](std::size_t k, std::size_t arity) {
        std::vector<std::uint32_t> digits(arity);
        for (std::size_t i = arity; i-- > 0;) {
            digits[i] = static_cast<std::uint32_t>(k % size);
            k /= size;
        }
        std::string s;
        for (std::uint32_t d : digits) s += " " + std::to_string(d);
        return s;
    };
    for (const auto& [name, tab] : functions)
        for (std::size_t k = 0; k < tab.values.size(); ++k)
            out += "; " + name + tuple(k, tab.arity) + " = " + std::to_string(tab.values[k]);
    for (const auto& [name, tab] : predicates)
        for (std::size_t k = 0; k < tab.values.size(); ++k)
            out += "; " + name + tuple(k, tab.arity) + " = " + (tab.values[k] ? "1" : "0");
    for (std::size_t i = 0; i < env.size(); ++i) out += "; #" + std::to_string(i) + " = " + std::to_string(env[i]);
    return out;
}

ModelSpace::ModelSpace(FolSignature sig, std::uint32_t size, std::size_t env_len)
    : sig_(std::move(sig)), size_(size), env_len_(env_len) {
    if (size == 0) throw Error("domain must be nonempty");
    for (const auto& [name, arity] : sig_.functions) count_ = checked_mul(count_, ipow(size, ipow(size, arity)));
    for (const auto& [name, arity] : sig_.predicates) count_ = checked_mul(count_, ipow(2, ipow(size, arity)));
    count_ = checked_mul(count_, ipow(size, env_len));
}

Model ModelSpace::decode(std::uint64_t index) const {
    Model m;
    m.size = size_;
    for (const auto& [name, arity] : sig_.functions) {
        FunctionTable& t = m.functions[name];
        t.arity = arity;
        t.values.resize(ipow(size_, arity));
        for (auto& v : t.values) {
            v = static_cast<std::uint32_t>(index % size_);
            index /= size_;
        }
    }
    for (const auto& [name, arity] : sig_.predicates) {
        PredicateTable& t = m.predicates[name];
        t.arity = arity;
        t.values.resize(ipow(size_, arity));
        for (std::size_t k = 0; k < t.values.size(); ++k) {
            t.values[k] = index % 2;
            index /= 2;
        }
    }
    m.env.resize(env_len_);
    for (auto& v : m.env) {
        v = static_cast<std::uint32_t>(index % size_);
        index /= size_;
    }
    return m;
}

// ---------------------------------------------------------------------------
// Compiled evaluation for enumeration. Symbols become offsets into one flat
// value array laid out exactly as ModelSpace::decode consumes digits.

namespace {

struct CTerm {
    std::int32_t var = -1;
    std::uint32_t offset = 0;
    std::vector<CTerm> args;
};

struct CForm {
    FolFormula::Kind kind;
    std::uint32_t offset = 0;
    std::vector<CTerm> args;
    std::vector<CForm> subs;
};

class Compiled {
public:
    Compiled(const FolFormula& p, std::uint32_t size) : size_(size) {
        sig_.add(p);
        env_len_ = loose_bound(p);
        std::uint32_t off = 0;
        for (const auto& [name, arity] : sig_.functions) {
            fun_offset_[name] = off;
            auto n = static_cast<std::uint32_t>(ipow(size, arity));
            for (std::uint32_t i = 0; i < n; ++i) radix_.push_back(size);
            off += n;
        }
        for (const auto& [name, arity] : sig_.predicates) {
            pred_offset_[name] = off;
            auto n = static_cast<std::uint32_t>(ipow(size, arity));
            for (std::uint32_t i = 0; i < n; ++i) radix_.push_back(2);
            off += n;
        }
        env_offset_ = off;
        for (std::size_t i = 0; i < env_len_; ++i) radix_.push_back(size);
        root_ = compile(p);
        space_ = std::make_unique<ModelSpace>(sig_, size, env_len_);
    }

    std::uint64_t count() const { return space_->count(); }
    const ModelSpace& space() const { return *space_; }
    std::size_t digits() const { return radix_.size(); }

    void decode(std::uint64_t index, std::vector<std::uint32_t>& vals) const {
        vals.resize(radix_.size());
        for (std::size_t k = 0; k < radix_.size(); ++k) {
            vals[k] = static_cast<std::uint32_t>(index % radix_[k]);
            index /= radix_[k];
        }
    }

    bool holds(const std::vector<std::uint32_t>& vals, std::vector<std::uint32_t>& stack) const {
        stack.clear();
        for (std::size_t i = env_len_; i-- > 0;) stack.push_back(vals[env_offset_ + i]);
        return eval(root_, vals, stack);
    }

private:
    CTerm compile(const FolTerm& t) {
        CTerm c;
        if (t.is_var()) {
            c.var = static_cast<std::int32_t>(t.index());
            return c;
        }
        c.offset = fun_offset_.at(t.name());
        for (const FolTerm& a : t.args()) c.args.push_back(compile(a));
        return c;
    }

    CForm compile(const FolFormula& p) {
        CForm c{p.kind(), 0, {}, {}};
        switch (p.kind()) {
            case FolFormula::Kind::Falsity:
                break;
            case FolFormula::Kind::Pre:
                c.offset = pred_offset_.at(p.name());
                for (const FolTerm& a : p.args()) c.args.push_back(compile(a));
                break;
            case FolFormula::Kind::Imp:
                c.subs.push_back(compile(p.lhs()));
                c.subs.push_back(compile(p.rhs()));
                break;
            case FolFormula::Kind::Uni:
                c.subs.push_back(compile(p.body()));
                break;
        }
        return c;
    }

    std::uint32_t eval(const CTerm& t, const std::vector<std::uint32_t>& vals,
                       const std::vector<std::uint32_t>& stack) const {
        if (t.var >= 0) return stack[stack.size() - 1 - static_cast<std::size_t>(t.var)];
        std::uint32_t k = 0;
        for (const CTerm& a : t.args) k = k * size_ + eval(a, vals, stack);
        return vals[t.offset + k];
    }

    bool eval(const CForm& p, const std::vector<std::uint32_t>& vals, std::vector<std::uint32_t>& stack) const {
        switch (p.kind) {
            case FolFormula::Kind::Falsity:
                return false;
            case FolFormula::Kind::Pre: {
                std::uint32_t k = 0;
                for (const CTerm& a : p.args) k = k * size_ + eval(a, vals, stack);
                return vals[p.offset + k] != 0;
            }
            case FolFormula::Kind::Imp:
                return !eval(p.subs[0], vals, stack) || eval(p.subs[1], vals, stack);
            case FolFormula::Kind::Uni:
                for (std::uint32_t d = 0; d < size_; ++d) {
                    stack.push_back(d);
                    bool ok = eval(p.subs[0], vals, stack);
                    stack.pop_back();
                    if (!ok) return false;
                }
                return true;
        }
        return false;
    }

    std::uint32_t size_;
    FolSignature sig_;
    std::size_t env_len_ = 0;
    std::map<std::string, std::uint32_t> fun_offset_;
    std::map<std::string, std::uint32_t> pred_offset_;
    std::uint32_t env_offset_ = 0;
    std::vector<std::uint32_t> radix_;
    CForm root_;
    std::unique_ptr<ModelSpace> space_;
};

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

std::uint64_t first_failure_serial(const Compiled& c) {
    std::vector<std::uint32_t> vals, stack;
    for (std::uint64_t i = 0; i < c.count(); ++i) {
        c.decode(i, vals);
        if (!c.holds(vals, stack)) return i;
    }
    return kNone;
}

std::uint64_t first_failure_parallel(const Compiled& c) {
    std::atomic<std::uint64_t> best{kNone};
    const auto n = static_cast<std::int64_t>(c.count());
#pragma omp parallel
    {
        std::vector<std::uint32_t> vals, stack;
#pragma omp for schedule(dynamic, 512)
        for (std::int64_t i = 0; i < n; ++i) {
            auto u = static_cast<std::uint64_t>(i);
            if (u >= best.load(std::memory_order_relaxed)) continue;
            c.decode(u, vals);
            if (!c.holds(vals, stack)) {
                std::uint64_t cur = best.load();
                while (u < cur && !best.compare_exchange_weak(cur, u)) {
                }
            }
        }
    }
    return best.load();
}

}  // namespace

std::optional<Model> countermodel(const FolFormula& p, std::uint32_t max_size, Exec exec) {
    for (std::uint32_t size = 1; size <= max_size; ++size) {
        Compiled c(p, size);
        std::uint64_t i = exec == Exec::Serial ? first_failure_serial(c) : first_failure_parallel(c);
        if (i != kNone) return c.space().decode(i);
    }
    return std::nullopt;
}

std::uint64_t count_countermodels(const FolFormula& p, std::uint32_t size, Exec exec) {
    Compiled c(p, size);
    const auto n = static_cast<std::int64_t>(c.count());
    std::uint64_t total = 0;
    if (exec == Exec::Serial) {
        std::vector<std::uint32_t> vals, stack;
        for (std::int64_t i = 0; i < n; ++i) {
            c.decode(static_cast<std::uint64_t>(i), vals);
            if (!c.holds(vals, stack)) ++total;
        }
        return total;
    }
#pragma omp parallel
    {
        std::vector<std::uint32_t> vals, stack;
#pragma omp for schedule(static) reduction(+ : total)
        for (std::int64_t i = 0; i < n; ++i) {
            c.decode(static_cast<std::uint64_t>(i), vals);
            if (!c.holds(vals, stack)) ++total;
        }
    }
    return total;
}

FolFormula close_sequent(const FolSequent& s) {
    FolFormula out = s.goal;
    for (std::size_t i = s.assumptions.size(); i-- > 0;) out = FolFormula::imp(s.assumptions[i], out);
    return out;
}

}  // namespace mhl::fol
