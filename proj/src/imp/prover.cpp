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

#include "mhl/imp/prover.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "mhl/error.hpp"
#include "mhl/fol/hilbert.hpp"

namespace mhl::imp {

using fol::AxProof;
using fol::FolFormula;
namespace ax = fol::ax;

struct ImpFormula::Node {
    std::string name;
    std::vector<ImpFormula> subs;
    std::size_t connectives;
};

ImpFormula ImpFormula::atom(std::string name) {
    return ImpFormula(std::make_shared<const Node>(Node{std::move(name), {}, 0}));
}

ImpFormula ImpFormula::imp(ImpFormula lhs, ImpFormula rhs) {
    std::size_t n = 1 + lhs.connectives() + rhs.connectives();
    return ImpFormula(std::make_shared<const Node>(Node{{}, {std::move(lhs), std::move(rhs)}, n}));
}

bool ImpFormula::is_atom() const { return node_->subs.empty(); }
const std::string& ImpFormula::name() const { return node_->name; }
const ImpFormula& ImpFormula::lhs() const { return node_->subs.at(0); }
const ImpFormula& ImpFormula::rhs() const { return node_->subs.at(1); }
std::size_t ImpFormula::connectives() const { return node_->connectives; }

bool operator==(const ImpFormula& a, const ImpFormula& b) {
    if (a.node_ == b.node_) return true;
    return a.node_->name == b.node_->name && a.node_->subs == b.node_->subs;
}

std::string to_string(const ImpFormula& f) {
    if (f.is_atom()) return f.name();
    std::string l = to_string(f.lhs());
    if (!f.lhs().is_atom()) l = "(" + l + ")";
    return l + " -> " + to_string(f.rhs());
}

namespace {

class ImpParser {
public:
    explicit ImpParser(std::string_view s) : s_(s) {}

    ImpFormula run() {
        ImpFormula f = formula();
        skip();
        if (pos_ != s_.size()) fail("unexpected input");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, {"", 1, static_cast<int>(pos_) + 1, 1, static_cast<int>(pos_) + 1});
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool arrow() {
        skip();
        for (std::string_view a : {"-->", "->", "⟶", "→"})
            if (s_.substr(pos_, a.size()) == a) {
                pos_ += a.size();
                return true;
            }
        return false;
    }
    ImpFormula formula() {
        ImpFormula lhs = primary();
        if (arrow()) return ImpFormula::imp(lhs, formula());
        return lhs;
    }
    ImpFormula primary() {
        skip();
        if (pos_ < s_.size() && s_[pos_] == '(') {
            ++pos_;
            ImpFormula f = formula();
            skip();
            if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
            ++pos_;
            return f;
        }
        std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '\''))
            ++pos_;
        if (start == pos_) fail("expected an atom");
        return ImpFormula::atom(std::string(s_.substr(start, pos_ - start)));
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

void collect_atoms(const ImpFormula& f, std::vector<std::string>& out) {
    if (f.is_atom()) {
        if (std::find(out.begin(), out.end(), f.name()) == out.end()) out.push_back(f.name());
        return;
    }
    collect_atoms(f.lhs(), out);
    collect_atoms(f.rhs(), out);
}

// Truth table as a bit set over valuations (atoms <= 6).
std::uint64_t table(const ImpFormula& f, const std::vector<std::string>& names) {
    if (f.is_atom()) {
        auto i = static_cast<std::size_t>(std::find(names.begin(), names.end(), f.name()) - names.begin());
        std::uint64_t bits = 0;
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << names.size()); ++v)
            if (v >> i & 1) bits |= std::uint64_t{1} << v;
        return bits;
    }
    return ~table(f.lhs(), names) | table(f.rhs(), names);
}

}  // namespace

ImpFormula parse(std::string_view text) { return ImpParser(text).run(); }

std::vector<std::string> atoms(const ImpFormula& f) {
    std::vector<std::string> out;
    collect_atoms(f, out);
    return out;
}

bool eval(const ImpFormula& f, const Valuation& v) {
    if (f.is_atom()) {
        auto it = v.find(f.name());
        return it != v.end() && it->second;
    }
    return !eval(f.lhs(), v) || eval(f.rhs(), v);
}

bool taut(const ImpFormula& f) {
    std::vector<std::string> names = atoms(f);
    if (names.size() <= 6) {
        std::uint64_t rows = std::uint64_t{1} << names.size();
        std::uint64_t mask = rows == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rows) - 1;
        return (table(f, names) & mask) == mask;
    }
    Valuation v;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << names.size()); ++bits) {
        for (std::size_t i = 0; i < names.size(); ++i) v[names[i]] = bits >> i & 1;
        if (!eval(f, v)) return false;
    }
    return true;
}

FolFormula to_fol(const ImpFormula& f) {
    if (f.is_atom()) return FolFormula::pre(f.name());
    return FolFormula::imp(to_fol(f.lhs()), to_fol(f.rhs()));
}

std::optional<ImpFormula> from_fol(const FolFormula& f) {
    if (f.is_pre() && f.args().empty()) return ImpFormula::atom(f.name());
    if (!f.is_imp()) return std::nullopt;
    auto l = from_fol(f.lhs());
    auto r = from_fol(f.rhs());
    if (!l || !r) return std::nullopt;
    return ImpFormula::imp(*l, *r);
}

std::string to_string(const Valuation& v) {
    std::string out;
    for (const auto& [k, b] : v) out += (out.empty() ? "" : " ") + k + "=" + (b ? "1" : "0");
    return out;
}

// ---------------------------------------------------------------------------
// Sequent search. A sequent Γ ⇒ g | Δ is established by a proof of g from the
// hypotheses Γ ∪ {δ ⟶ g | δ ∈ Δ}. Every rule is invertible, so the search
// never backtracks; a stuck sequent gives the countervaluation.

namespace {

FolFormula imp(const FolFormula& a, const FolFormula& b) { return FolFormula::imp(a, b); }

bool member(const std::vector<FolFormula>& xs, const FolFormula& x) {
    return std::find(xs.begin(), xs.end(), x) != xs.end();
}

struct Sequent {
    std::vector<FolFormula> left;  // Γ
    std::vector<FolFormula> todo;  // implications of Γ not yet decomposed
    std::vector<FolFormula> side;  // Δ
};

struct Search {
    std::optional<Sequent> stuck;  // first irreducible sequent, with its goal last in side

    AxProof run(Sequent s, const FolFormula& g) {
        if (member(s.left, g)) return ax::hyp(g);
        if (member(s.left, FolFormula::falsity())) return ax::mp(ax::ax(g), ax::hyp(FolFormula::falsity()));
        for (const auto& d : s.side)
            if (member(s.left, d)) return ax::mp(ax::hyp(imp(d, g)), ax::hyp(d));

        if (g.is_imp()) {
            const FolFormula a = g.lhs(), b = g.rhs();
            Sequent t = s;
            add_left(t, a);
            std::erase(t.side, b);
            AxProof sub = run(t, b);
            if (!sub) return nullptr;
            std::map<FolFormula, AxProof> with;
            for (const auto& d : t.side)
                with.emplace(imp(d, b), ax::mp(ax::mp(fol::lemma("C", {d, a, b}), ax::hyp(imp(d, g))), ax::hyp(a)));
            return fol::deduction_theorem(fol::replace_hyps(sub, with), a);
        }

        for (std::size_t i = 0; i < s.side.size(); ++i) {
            const FolFormula d = s.side[i];
            if (!d.is_imp()) continue;
            const FolFormula a = d.lhs(), b = d.rhs();
            Sequent t = s;
            t.side.erase(t.side.begin() + static_cast<std::ptrdiff_t>(i));
            add_side(t, b, g);
            add_left(t, a);
            AxProof sub = run(t, g);
            if (!sub) return nullptr;
            AxProof h = ax::hyp(imp(d, g));
            AxProof bg = fol::compose(ax::ak(b, a), h);
            AxProof ag = fol::deduction_theorem(fol::replace_hyps(sub, {{imp(b, g), bg}}), a);
            const FolFormula gb = imp(g, b);
            AxProof body = ax::mp(h, fol::compose(ag, ax::hyp(gb)));
            return ax::pr(fol::deduction_theorem(body, gb));
        }

        if (!s.todo.empty()) {
            const FolFormula c = s.todo.front();
            const FolFormula a = c.lhs(), b = c.rhs();
            Sequent t = s;
            t.todo.erase(t.todo.begin());

            Sequent right = t;
            add_left(right, b);
            AxProof p2 = run(right, g);
            if (!p2) return nullptr;

            Sequent left = t;
            std::erase(left.side, a);
            add_side(left, g, a);
            AxProof p1 = run(left, a);
            if (!p1) return nullptr;
            if (a == g) return p1;

            AxProof bg = fol::deduction_theorem(p2, b);
            const FolFormula ga = imp(g, a);
            std::map<FolFormula, AxProof> with;
            for (const auto& d : s.side)
                if (d != a) with.emplace(imp(d, a), fol::compose(ax::hyp(imp(d, g)), ax::hyp(ga)));
            AxProof body = ax::mp(fol::compose(ax::hyp(c), bg), fol::replace_hyps(p1, with));
            return ax::pr(fol::deduction_theorem(body, ga));
        }

        if (!stuck) {
            stuck = s;
            stuck->side.push_back(g);
        }
        return nullptr;
    }

    static void add_left(Sequent& s, const FolFormula& f) {
        if (member(s.left, f)) return;
        s.left.push_back(f);
        if (f.is_imp()) s.todo.push_back(f);
    }

    // Side formulas equal to the goal or ⊥ carry no information.
    static void add_side(Sequent& s, const FolFormula& f, const FolFormula& goal) {
        if (f == goal || f.is_falsity() || member(s.side, f)) return;
        s.side.push_back(f);
    }
};

}  // namespace

AxProof prove_from(const std::vector<FolFormula>& hyps, const FolFormula& goal) {
    Search search;
    Sequent s;
    for (const auto& h : hyps) Search::add_left(s, h);
    return search.run(s, goal);
}

namespace {

// Axiom instances get their one-node proof.
fol::AxProof axiom_instance(const fol::FolFormula& g) {
    if (!g.is_imp() || !g.rhs().is_imp()) return nullptr;
    const auto& a = g.lhs();
    const auto& b = g.rhs().lhs();
    const auto& rest = g.rhs().rhs();
    if (rest == a) return fol::ax::ak(a, b);
    if (a.is_imp() && b.is_imp() && rest.is_imp() && rest.lhs() == a.lhs() && a.rhs() == b.lhs() &&
        b.rhs() == rest.rhs())
        return fol::ax::at(rest.rhs(), a.lhs(), a.rhs());
    return nullptr;
}

}  // namespace

ProveResult prove(const ImpFormula& f) {
    ProveResult out;
    if ((out.proof = axiom_instance(to_fol(f)))) return out;
    fol::LemmaCacheScope scope;
    Search search;
    out.proof = search.run(Sequent{}, to_fol(f));
    if (out.proof) return out;
    Valuation v;
    for (const auto& a : atoms(f)) v[a] = false;
    for (const auto& l : search.stuck->left)
        if (l.is_pre()) v[l.name()] = true;
    out.countervaluation = std::move(v);
    return out;
}

// ---------------------------------------------------------------------------
// Enumeration and the sweep

FormulaSpace::FormulaSpace(std::size_t max_connectives, std::size_t atom_count) : max_(max_connectives) {
    static const char* names[] = {"p", "q", "r", "s", "t", "u", "v", "w"};
    if (atom_count == 0 || atom_count > 8) throw Error("atom count must be between 1 and 8");
    for (std::size_t i = 0; i < atom_count; ++i) atoms_.push_back(names[i]);
    by_size_.push_back(atom_count);
    for (std::size_t n = 1; n <= max_connectives; ++n) {
        std::uint64_t c = 0;
        for (std::size_t k = 0; k < n; ++k) c += by_size_[k] * by_size_[n - 1 - k];
        by_size_.push_back(c);
    }
    for (auto c : by_size_) total_ += c;
}

ImpFormula FormulaSpace::unrank(std::size_t n, std::uint64_t index) const {
    if (n == 0) return ImpFormula::atom(atoms_[index]);
    for (std::size_t k = 0; k < n; ++k) {
        std::uint64_t right = by_size_[n - 1 - k];
        std::uint64_t block = by_size_[k] * right;
        if (index < block) return ImpFormula::imp(unrank(k, index / right), unrank(n - 1 - k, index % right));
        index -= block;
    }
    throw Error("formula index out of range");
}

ImpFormula FormulaSpace::at(std::uint64_t index) const {
    for (std::size_t n = 0; n <= max_; ++n) {
        if (index < by_size_[n]) return unrank(n, index);
        index -= by_size_[n];
    }
    throw Error("formula index out of range");
}

namespace {

struct One {
    bool taut = false, proved = false, disagree = false, bad = false;
    std::string detail;
};

One sweep_one(const ImpFormula& f, bool check) {
    One o;
    o.taut = taut(f);
    ProveResult r = prove(f);
    o.proved = static_cast<bool>(r);
    o.disagree = o.taut != o.proved;
    if (o.disagree) o.detail = to_string(f) + ": taut=" + (o.taut ? "1" : "0") + " prove=" + (o.proved ? "1" : "0");
    if (r.proof) {
        if (check) {
            auto c = fol::ax_check(r.proof, to_fol(f), {}, fol::kImplicationalRules);
            if (!c) {
                o.bad = true;
                o.detail = to_string(f) + ": " + c.diagnostic;
            }
        }
    } else if (eval(f, *r.countervaluation)) {
        o.bad = true;
        o.detail = to_string(f) + ": countervaluation " + to_string(*r.countervaluation) + " satisfies it";
    }
    return o;
}

}  // namespace

SweepReport sweep(const FormulaSpace& space, Exec exec, bool check_proofs) {
    auto t0 = std::chrono::steady_clock::now();
    SweepReport rep;
    rep.formulas = space.count();
    const auto n = static_cast<std::int64_t>(space.count());
    std::uint64_t taut_n = 0, proved = 0, disagree = 0, bad = 0;
    std::uint64_t first = UINT64_MAX;
    std::string detail;
    auto record = [&](std::uint64_t i, const One& o) {
        if ((o.disagree || o.bad) && i < first) {
            first = i;
            detail = o.detail;
        }
    };
    if (exec == Exec::Serial) {
        for (std::int64_t i = 0; i < n; ++i) {
            One o = sweep_one(space.at(static_cast<std::uint64_t>(i)), check_proofs);
            taut_n += o.taut;
            proved += o.proved;
            disagree += o.disagree;
            bad += o.bad;
            record(static_cast<std::uint64_t>(i), o);
        }
    } else {
#pragma omp parallel for schedule(dynamic, 256) reduction(+ : taut_n, proved, disagree, bad)
        for (std::int64_t i = 0; i < n; ++i) {
            One o = sweep_one(space.at(static_cast<std::uint64_t>(i)), check_proofs);
            taut_n += o.taut;
            proved += o.proved;
            disagree += o.disagree;
            bad += o.bad;
            if (o.disagree || o.bad) {
#pragma omp critical(mhl_sweep_failure)
                record(static_cast<std::uint64_t>(i), o);
            }
        }
    }
    rep.tautologies = taut_n;
    rep.proved = proved;
    rep.refuted = rep.formulas - proved;
    rep.disagreements = disagree;
    rep.check_failures = bad;
    if (first != UINT64_MAX) {
        rep.first_failure = first;
        rep.first_failure_detail = detail;
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace mhl::imp
