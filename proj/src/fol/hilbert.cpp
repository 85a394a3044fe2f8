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

#include "mhl/fol/hilbert.hpp"

#include <functional>
#include <mutex>
#include <unordered_map>

#include "mhl/error.hpp"

namespace mhl::fol {

namespace {

FolFormula imp(const FolFormula& a, const FolFormula& b) { return FolFormula::imp(a, b); }

// Condensed detachment: D(major, minor) detaches the most general common
// instance; PR(x) applies Peirce's rule to x. K and T are the axioms AK and AT.
struct LemmaSource {
    const char* name;
    const char* statement;  // over p q r, ASCII `>`
    const char* cd;
};

constexpr const char* kTT = "D(T,T)";
constexpr const char* kPR1 = "PR(D(D(T,D(T,K)),D(D(T,K),T)))";
constexpr const char* kPR2 = "PR(D(T,D(T,D(K,K))))";

std::string expand(std::string s) {
    auto rep = [&](const std::string& from, const std::string& to) {
        for (std::size_t at = s.find(from); at != std::string::npos; at = s.find(from, at + to.size()))
            s.replace(at, from.size(), to);
    };
    rep("$TT", kTT);
    rep("$PR1", kPR1);
    rep("$PR2", kPR2);
    return s;
}

const std::vector<LemmaSource>& sources() {
    static const std::vector<LemmaSource> v = {
        {"I", "p>p", "PR(D(T,K))"},
        {"B", "(q>r)>((p>q)>(p>r))", "D(D($TT,$PR1),D($TT,D($TT,$PR2)))"},
        {"C", "(p>(q>r))>(q>(p>r))", "D(D($TT,$TT),D(D($TT,$PR1),D($TT,$PR2)))"},
        {"W", "(p>(p>q))>(p>q)", "D(D($TT,$PR1),D(D($TT,$PR1),D($TT,$PR2)))"},
        {"Peirce", "((p>q)>p)>p",
         "D(D(D(T,$PR1),$PR2),D(D(D($TT,T),D(D(T,K),K)),D(D($TT,$PR1),D($TT,$PR2))))"},
        // S = B (B W) (B B C)
        {"S", "(p>(q>r))>((p>q)>(p>r))", "D(D(B,D(B,W)),D(D(B,B),C))"},
    };
    return v;
}

// --- schematic formulas with a global binding store ------------------------

class Unifier {
public:
    int var() {
        nodes_.push_back({-1, -1});
        bind_.push_back(-1);
        return static_cast<int>(nodes_.size()) - 1;
    }
    int imp(int a, int b) {
        nodes_.push_back({a, b});
        bind_.push_back(-1);
        return static_cast<int>(nodes_.size()) - 1;
    }
    bool is_var(int n) const { return nodes_[n].first < 0; }
    int walk(int n) const {
        while (is_var(n) && bind_[n] >= 0) n = bind_[n];
        return n;
    }
    int lhs(int n) const { return nodes_[n].first; }
    int rhs(int n) const { return nodes_[n].second; }

    bool occurs(int v, int t) const {
        t = walk(t);
        if (t == v) return true;
        if (is_var(t)) return false;
        return occurs(v, lhs(t)) || occurs(v, rhs(t));
    }

    void unify(int a, int b) {
        a = walk(a);
        b = walk(b);
        if (a == b) return;
        if (is_var(a)) {
            if (occurs(a, b)) throw Error("lemma replay: occurs check");
            bind_[a] = b;
            return;
        }
        if (is_var(b)) return unify(b, a);
        unify(lhs(a), lhs(b));
        unify(rhs(a), rhs(b));
    }

private:
    std::vector<std::pair<int, int>> nodes_;
    std::vector<int> bind_;
};

struct RNode {
    AxRule rule;
    std::vector<int> params;
    std::vector<int> kids;
    int concl;
};

class Replay {
public:
    Unifier u;
    std::vector<RNode> nodes;

    int run(std::string_view cd) {
        pos_ = 0;
        src_ = cd;
        int n = parse();
        if (pos_ != src_.size()) throw Error("lemma replay: trailing input");
        return n;
    }

private:
    int add(RNode n) {
        nodes.push_back(std::move(n));
        return static_cast<int>(nodes.size()) - 1;
    }

    void expect(char c) {
        if (pos_ >= src_.size() || src_[pos_] != c) throw Error(std::string("lemma replay: expected ") + c);
        ++pos_;
    }

    int parse() {
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        std::string word(src_.substr(start, pos_ - start));
        if (word == "K") {
            int p = u.var(), q = u.var();
            return add({AxRule::AK, {p, q}, {}, u.imp(p, u.imp(q, p))});
        }
        if (word == "T") {
            int p = u.var(), q = u.var(), r = u.var();
            return add({AxRule::AT, {p, q, r}, {}, u.imp(u.imp(q, r), u.imp(u.imp(r, p), u.imp(q, p)))});
        }
        if (word == "D") {
            expect('(');
            int major = parse();
            expect(',');
            int minor = parse();
            expect(')');
            int m = u.walk(nodes[major].concl);
            if (u.is_var(m)) {
                int a = u.var(), b = u.var();
                u.unify(m, u.imp(a, b));
                m = u.walk(m);
            }
            u.unify(u.lhs(m), nodes[minor].concl);
            return add({AxRule::MP, {}, {major, minor}, u.rhs(m)});
        }
        if (word == "PR") {
            expect('(');
            int x = parse();
            expect(')');
            int a = u.var(), b = u.var();
            u.unify(nodes[x].concl, u.imp(u.imp(a, b), a));
            return add({AxRule::PR, {}, {x}, a});
        }
        // A previously defined lemma, replayed afresh.
        for (const auto& s : sources())
            if (word == s.name) {
                std::size_t save = pos_;
                std::string_view save_src = src_;
                std::string body = expand(s.cd);
                src_ = body;
                pos_ = 0;
                int n = parse();
                src_ = save_src;
                pos_ = save;
                return n;
            }
        throw Error("lemma replay: unknown token " + word);
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

// Template proof: parameters are formulas over the atoms %0 %1 %2.
struct Template {
    struct Node {
        AxRule rule;
        std::vector<FolFormula> params;
        std::vector<std::size_t> kids;
    };
    std::vector<Node> nodes;  // children before parents; root last
    FolFormula statement;
};

FolFormula parse_schema(std::string_view s, std::size_t& pos) {
    FolFormula lhs = FolFormula::falsity();
    if (s[pos] == '(') {
        ++pos;
        lhs = parse_schema(s, pos);
        if (pos >= s.size() || s[pos] != ')') throw Error("bad lemma statement");
        ++pos;
    } else {
        lhs = FolFormula::pre("%" + std::to_string(s[pos] - 'p'));
        ++pos;
    }
    if (pos < s.size() && s[pos] == '>') {
        ++pos;
        return imp(lhs, parse_schema(s, pos));
    }
    return lhs;
}

FolFormula parse_statement(std::string_view s) {
    std::size_t pos = 0;
    FolFormula f = parse_schema(s, pos);
    if (pos != s.size()) throw Error("bad lemma statement");
    return f;
}

bool is_template_var(const FolFormula& f) { return f.is_pre() && !f.name().empty() && f.name()[0] == '%'; }

Template build_template(const LemmaSource& src) {
    Replay r;
    int root = r.run(expand(src.cd));
    FolFormula target = parse_statement(src.statement);

    // Resolve pool nodes to formulas; unresolved variables become ?k atoms.
    std::unordered_map<int, FolFormula> resolved;
    std::function<FolFormula(int)> resolve = [&](int n) -> FolFormula {
        n = r.u.walk(n);
        if (auto it = resolved.find(n); it != resolved.end()) return it->second;
        FolFormula f = r.u.is_var(n) ? FolFormula::pre("?" + std::to_string(n))
                                     : imp(resolve(r.u.lhs(n)), resolve(r.u.rhs(n)));
        resolved.emplace(n, f);
        return f;
    };

    // Match the principal conclusion onto the intended statement.
    std::map<std::string, FolFormula> sigma;
    std::function<bool(const FolFormula&, const FolFormula&)> match = [&](const FolFormula& pat,
                                                                          const FolFormula& t) {
        if (pat.is_pre() && pat.name()[0] == '?') {
            auto [it, fresh] = sigma.emplace(pat.name(), t);
            return fresh || it->second == t;
        }
        if (pat.is_imp() && t.is_imp()) return match(pat.lhs(), t.lhs()) && match(pat.rhs(), t.rhs());
        return pat == t;
    };
    if (!match(resolve(r.nodes[root].concl), target))
        throw Error(std::string("lemma replay: ") + src.name + " does not prove its statement");

    const FolFormula filler = FolFormula::pre("%0");
    std::unordered_map<const void*, FolFormula> memo;
    std::function<FolFormula(const FolFormula&)> apply = [&](const FolFormula& f) -> FolFormula {
        if (auto it = memo.find(f.identity()); it != memo.end()) return it->second;
        FolFormula out = f;
        if (f.is_pre() && f.name()[0] == '?') {
            auto it = sigma.find(f.name());
            out = it == sigma.end() ? filler : it->second;
        } else if (f.is_imp()) {
            out = imp(apply(f.lhs()), apply(f.rhs()));
        }
        memo.emplace(f.identity(), out);
        return out;
    };

    Template t{{}, target};
    // Keep only nodes reachable from the root, children first.
    std::unordered_map<int, std::size_t> index;
    std::function<std::size_t(int)> emit = [&](int n) -> std::size_t {
        if (auto it = index.find(n); it != index.end()) return it->second;
        Template::Node out{r.nodes[n].rule, {}, {}};
        for (int k : r.nodes[n].kids) out.kids.push_back(emit(k));
        for (int p : r.nodes[n].params) out.params.push_back(apply(resolve(p)));
        t.nodes.push_back(std::move(out));
        return index[n] = t.nodes.size() - 1;
    };
    emit(root);
    return t;
}

const std::map<std::string, Template>& templates() {
    static const std::map<std::string, Template> t = [] {
        std::map<std::string, Template> m;
        for (const auto& s : sources()) m.emplace(s.name, build_template(s));
        return m;
    }();
    return t;
}

FolFormula instantiate(const FolFormula& f, const std::vector<FolFormula>& args,
                       std::unordered_map<const void*, FolFormula>& memo) {
    if (auto it = memo.find(f.identity()); it != memo.end()) return it->second;
    FolFormula out = f;
    if (is_template_var(f)) {
        auto k = static_cast<std::size_t>(std::stoul(f.name().substr(1)));
        if (k >= args.size()) throw Error("lemma: missing argument " + std::to_string(k));
        out = args[k];
    } else if (f.is_imp()) {
        out = imp(instantiate(f.lhs(), args, memo), instantiate(f.rhs(), args, memo));
    }
    memo.emplace(f.identity(), out);
    return out;
}

struct InstanceKey {
    std::string name;
    std::vector<FolFormula> args;
    bool operator==(const InstanceKey&) const = default;
};

struct InstanceKeyHash {
    std::size_t operator()(const InstanceKey& k) const {
        std::size_t h = std::hash<std::string>{}(k.name);
        for (const auto& a : k.args) h = h * 1000003u ^ a.hash();
        return h;
    }
};

std::size_t arity(const std::string& name) {
    if (name == "I") return 1;
    if (name == "W" || name == "Peirce") return 2;
    return 3;
}

// Instances repeat heavily inside one deduction-theorem pass.
std::unordered_map<InstanceKey, AxProof, InstanceKeyHash>& instance_cache() {
    thread_local std::unordered_map<InstanceKey, AxProof, InstanceKeyHash> cache;
    return cache;
}

}  // namespace

LemmaCacheScope::LemmaCacheScope() {
    if (instance_cache().size() > 4096) instance_cache().clear();
}
LemmaCacheScope::~LemmaCacheScope() = default;

std::vector<std::string> lemma_names() {
    std::vector<std::string> out;
    for (const auto& s : sources()) out.push_back(s.name);
    return out;
}

FolFormula lemma_statement(const std::string& name, const std::vector<FolFormula>& args) {
    auto it = templates().find(name);
    if (it == templates().end()) throw Error("unknown lemma " + name);
    std::unordered_map<const void*, FolFormula> memo;
    return instantiate(it->second.statement, args, memo);
}

AxProof lemma(const std::string& name, const std::vector<FolFormula>& args) {
    auto it = templates().find(name);
    if (it == templates().end()) throw Error("unknown lemma " + name);
    if (args.size() != arity(name)) throw Error("lemma " + name + " takes " + std::to_string(arity(name)) + " formulas");
    auto& cache = instance_cache();
    InstanceKey key{name, args};
    if (auto c = cache.find(key); c != cache.end()) return c->second;

    std::unordered_map<const void*, FolFormula> memo;
    std::vector<AxProof> built;
    built.reserve(it->second.nodes.size());
    for (const auto& n : it->second.nodes) {
        auto arg = [&](std::size_t i) { return instantiate(n.params[i], args, memo); };
        switch (n.rule) {
            case AxRule::AK: built.push_back(ax::ak(arg(0), arg(1))); break;
            case AxRule::AT: built.push_back(ax::at(arg(0), arg(1), arg(2))); break;
            case AxRule::MP: built.push_back(ax::mp(built[n.kids[0]], built[n.kids[1]])); break;
            case AxRule::PR: built.push_back(ax::pr(built[n.kids[0]])); break;
            default: throw Error("lemma: unexpected rule");
        }
    }
    cache.emplace(std::move(key), built.back());
    return built.back();
}

AxProof compose(const AxProof& ab, const AxProof& bc) {
    const FolFormula& f = ab->concl;
    const FolFormula& g = bc->concl;
    if (!f.is_imp() || !g.is_imp()) throw Error("compose: premises must be implications");
    return ax::mp(ax::mp(ax::at(g.rhs(), f.lhs(), f.rhs()), ab), bc);
}

AxProof replace_hyps(const AxProof& proof, const std::map<FolFormula, AxProof>& with) {
    std::unordered_map<const AxNode*, AxProof> memo;
    std::function<AxProof(const AxProof&)> go = [&](const AxProof& p) -> AxProof {
        if (auto it = memo.find(p.get()); it != memo.end()) return it->second;
        AxProof out = p;
        switch (p->rule) {
            case AxRule::Hyp:
                if (auto it = with.find(p->formulas[0]); it != with.end()) out = it->second;
                break;
            case AxRule::MP: {
                AxProof a = go(p->children[0]), b = go(p->children[1]);
                if (a != p->children[0] || b != p->children[1]) out = ax::mp(a, b);
                break;
            }
            case AxRule::GR: {
                AxProof a = go(p->children[0]);
                if (a != p->children[0]) out = ax::gr(p->constant, a);
                break;
            }
            case AxRule::PR: {
                AxProof a = go(p->children[0]);
                if (a != p->children[0]) out = ax::pr(a);
                break;
            }
            default:
                break;
        }
        memo.emplace(p.get(), out);
        return out;
    };
    return go(proof);
}

AxProof deduction_theorem(const AxProof& proof, const FolFormula& chi) {
    std::unordered_map<const AxNode*, bool> dep_memo;
    std::function<bool(const AxProof&)> depends = [&](const AxProof& p) -> bool {
        if (auto it = dep_memo.find(p.get()); it != dep_memo.end()) return it->second;
        bool d = false;
        if (p->rule == AxRule::Hyp) d = p->formulas[0] == chi;
        for (const auto& c : p->children) d = depends(c) || d;
        dep_memo.emplace(p.get(), d);
        return d;
    };

    std::unordered_map<const AxNode*, AxProof> memo;
    std::function<AxProof(const AxProof&)> go = [&](const AxProof& p) -> AxProof {
        if (auto it = memo.find(p.get()); it != memo.end()) return it->second;
        AxProof out;
        if (!depends(p)) {
            out = ax::mp(ax::ak(p->concl, chi), p);
        } else {
            switch (p->rule) {
                case AxRule::Hyp:
                    out = lemma("I", {chi});
                    break;
                case AxRule::MP: {
                    const AxProof& major = p->children[0];
                    const AxProof& minor = p->children[1];
                    const FolFormula& q = minor->concl;
                    const FolFormula& r = p->concl;
                    bool dm = depends(major), dn = depends(minor);
                    if (dm && dn)
                        out = ax::mp(ax::mp(lemma("S", {chi, q, r}), go(major)), go(minor));
                    else if (dm)
                        out = ax::mp(ax::mp(lemma("C", {chi, q, r}), go(major)), minor);
                    else
                        out = ax::mp(ax::mp(ax::at(r, chi, q), go(minor)), major);
                    break;
                }
                case AxRule::PR: {
                    // child: (a ⟶ b) ⟶ a, discharged: χ ⟶ (a ⟶ b) ⟶ a
                    const FolFormula& f = p->children[0]->concl;
                    const FolFormula a = f.rhs();
                    const FolFormula b = f.lhs().rhs();
                    const FolFormula chi_a = imp(chi, a);
                    AxProof flipped = ax::mp(lemma("C", {chi, f.lhs(), a}), go(p->children[0]));
                    AxProof weak = ax::mp(ax::at(b, a, chi_a), ax::ak(a, chi));
                    AxProof peirce =
                        ax::mp(ax::mp(ax::at(chi_a, imp(chi_a, b), f.lhs()), weak), flipped);
                    out = ax::pr(peirce);
                    break;
                }
                case AxRule::GR:
                    throw Error("deduction theorem: GR premise depends on the discharged hypothesis " + pretty(chi));
                default:
                    throw Error("deduction theorem: unexpected node");
            }
        }
        memo.emplace(p.get(), out);
        return out;
    };
    return go(proof);
}

}  // namespace mhl::fol
