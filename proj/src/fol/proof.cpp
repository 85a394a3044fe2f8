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

#include "mhl/fol/proof.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "mhl/error.hpp"
#include "mhl/fol/parse.hpp"

namespace mhl::fol {

namespace {

using Kind = FolFormula::Kind;

FolFormula imp(const FolFormula& a, const FolFormula& b) { return FolFormula::imp(a, b); }

bool contains(std::span<const FolFormula> z, const FolFormula& p) {
    return std::find(z.begin(), z.end(), p) != z.end();
}

}  // namespace

const char* rule_name(NdRule r) {
    switch (r) {
        case NdRule::Assm: return "Assm";
        case NdRule::FlsE: return "FlsE";
        case NdRule::ImpI: return "ImpI";
        case NdRule::ImpE: return "ImpE";
        case NdRule::UniE: return "UniE";
        case NdRule::UniI: return "UniI";
        case NdRule::ImpC: return "ImpC";
    }
    return "?";
}

const char* rule_name(AxRule r) {
    switch (r) {
        case AxRule::AK: return "AK";
        case AxRule::AT: return "AT";
        case AxRule::AX: return "AX";
        case AxRule::AY: return "AY";
        case AxRule::MP: return "MP";
        case AxRule::GR: return "GR";
        case AxRule::PR: return "PR";
        case AxRule::Hyp: return "Hyp";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// ND

namespace nd {

NdProof assm() { return std::make_shared<const NdNode>(NdNode{NdRule::Assm, {}, {}, {}, {}}); }
NdProof flse(NdProof p) { return std::make_shared<const NdNode>(NdNode{NdRule::FlsE, {}, {}, {}, {std::move(p)}}); }
NdProof impi(NdProof p) { return std::make_shared<const NdNode>(NdNode{NdRule::ImpI, {}, {}, {}, {std::move(p)}}); }

NdProof impe(FolFormula a, NdProof major, NdProof minor) {
    return std::make_shared<const NdNode>(NdNode{NdRule::ImpE, std::move(a), {}, {}, {std::move(major), std::move(minor)}});
}

NdProof unie(FolFormula u, FolTerm t, NdProof p) {
    return std::make_shared<const NdNode>(NdNode{NdRule::UniE, std::move(u), std::move(t), {}, {std::move(p)}});
}

NdProof unii(std::string c, NdProof p) {
    return std::make_shared<const NdNode>(NdNode{NdRule::UniI, {}, {}, std::move(c), {std::move(p)}});
}

NdProof impc(FolFormula q, NdProof p) {
    return std::make_shared<const NdNode>(NdNode{NdRule::ImpC, std::move(q), {}, {}, {std::move(p)}});
}

}  // namespace nd

namespace {

std::size_t expected_children(NdRule r) {
    switch (r) {
        case NdRule::Assm: return 0;
        case NdRule::ImpE: return 2;
        default: return 1;
    }
}

CheckResult nd_check_at(const NdProof& p, const std::vector<FolFormula>& z, const FolFormula& goal,
                        const std::string& path) {
    if (!p) return CheckResult::reject(path + ": missing subproof");
    auto fail = [&](const std::string& why) {
        return CheckResult::reject(path + " (" + rule_name(p->rule) + "): " + why);
    };
    if (p->children.size() != expected_children(p->rule))
        return fail("expected " + std::to_string(expected_children(p->rule)) + " premises, found " +
                    std::to_string(p->children.size()));
    auto child = [&](std::size_t i, const std::vector<FolFormula>& cz, const FolFormula& cg) {
        return nd_check_at(p->children[i], cz, cg, path + "." + std::to_string(i));
    };
    switch (p->rule) {
        case NdRule::Assm:
            if (!contains(z, goal)) return fail(pretty(goal) + " is not among the assumptions");
            return CheckResult::accept();
        case NdRule::FlsE:
            return child(0, z, FolFormula::falsity());
        case NdRule::ImpI: {
            if (!goal.is_imp()) return fail("goal " + pretty(goal) + " is not an implication");
            std::vector<FolFormula> z2;
            z2.reserve(z.size() + 1);
            z2.push_back(goal.lhs());
            z2.insert(z2.end(), z.begin(), z.end());
            return child(0, z2, goal.rhs());
        }
        case NdRule::ImpE: {
            if (!p->formula) return fail("missing antecedent");
            if (auto r = child(0, z, imp(*p->formula, goal)); !r) return r;
            return child(1, z, *p->formula);
        }
        case NdRule::UniE: {
            if (!p->formula || !p->term) return fail("missing universal formula or term");
            if (!p->formula->is_uni()) return fail(pretty(*p->formula) + " is not universal");
            if (inst(*p->term, p->formula->body()) != goal)
                return fail("instantiating " + pretty(*p->formula) + " with " + pretty(*p->term) + " does not give " +
                            pretty(goal));
            return child(0, z, *p->formula);
        }
        case NdRule::UniI: {
            if (!goal.is_uni()) return fail("goal " + pretty(goal) + " is not universal");
            if (p->constant.empty()) return fail("missing constant");
            if (occurs_in(p->constant, std::span<const FolFormula>(z)))
                return fail("constant " + p->constant + " is not fresh: it occurs in the assumptions");
            if (occurs_in(p->constant, goal))
                return fail("constant " + p->constant + " is not fresh: it occurs in the goal");
            return child(0, z, inst(FolTerm::fun(p->constant), goal.body()));
        }
        case NdRule::ImpC: {
            if (!p->formula) return fail("missing formula q");
            std::vector<FolFormula> z2;
            z2.reserve(z.size() + 1);
            z2.push_back(imp(goal, *p->formula));
            z2.insert(z2.end(), z.begin(), z.end());
            return child(0, z2, goal);
        }
    }
    return fail("unknown rule");
}

}  // namespace

CheckResult nd_check(const NdProof& proof, const FolSequent& claim) {
    return nd_check_at(proof, claim.assumptions, claim.goal, "root");
}

std::size_t nd_size(const NdProof& proof) {
    if (!proof) return 0;
    std::size_t n = 1;
    for (const auto& c : proof->children) n += nd_size(c);
    return n;
}

bool nd_uses_impc(const NdProof& proof) {
    if (!proof) return false;
    if (proof->rule == NdRule::ImpC) return true;
    return std::any_of(proof->children.begin(), proof->children.end(), nd_uses_impc);
}

// ---------------------------------------------------------------------------
// AX builders

namespace ax {

namespace {

AxProof make(AxRule r, std::vector<FolFormula> fs, std::optional<FolTerm> t, std::string c, std::vector<AxProof> kids,
             FolFormula concl) {
    return std::make_shared<const AxNode>(
        AxNode{r, std::move(fs), std::move(t), std::move(c), std::move(kids), std::move(concl)});
}

}  // namespace

AxProof ak(FolFormula p, FolFormula q) {
    FolFormula c = imp(p, imp(q, p));
    return make(AxRule::AK, {std::move(p), std::move(q)}, {}, {}, {}, std::move(c));
}

AxProof at(FolFormula p, FolFormula q, FolFormula r) {
    FolFormula c = imp(imp(q, r), imp(imp(r, p), imp(q, p)));
    return make(AxRule::AT, {std::move(p), std::move(q), std::move(r)}, {}, {}, {}, std::move(c));
}

AxProof ax(FolFormula p) {
    FolFormula c = imp(FolFormula::falsity(), p);
    return make(AxRule::AX, {std::move(p)}, {}, {}, {}, std::move(c));
}

AxProof ay(FolFormula u, FolTerm t) {
    if (!u.is_uni()) throw Error("AY: " + pretty(u) + " is not universal");
    FolFormula c = imp(u, inst(t, u.body()));
    return make(AxRule::AY, {std::move(u)}, std::move(t), {}, {}, std::move(c));
}

AxProof mp(AxProof major, AxProof minor) {
    const FolFormula& m = major->concl;
    if (!m.is_imp() || m.lhs() != minor->concl)
        throw Error("MP: " + pretty(m) + " cannot be applied to " + pretty(minor->concl));
    FolFormula c = m.rhs();
    return make(AxRule::MP, {}, {}, {}, {std::move(major), std::move(minor)}, std::move(c));
}

AxProof gr(std::string c, AxProof child) {
    const FolFormula& f = child->concl;
    if (!f.is_imp()) throw Error("GR: " + pretty(f) + " is not an implication");
    if (occurs_in(c, f.lhs())) throw Error("GR: constant " + c + " occurs in " + pretty(f.lhs()));
    FolFormula concl = imp(f.lhs(), FolFormula::uni(abstract_const(0, c, f.rhs())));
    return make(AxRule::GR, {}, {}, std::move(c), {std::move(child)}, std::move(concl));
}

AxProof pr(AxProof child) {
    const FolFormula& f = child->concl;
    if (!f.is_imp() || !f.lhs().is_imp() || f.lhs().lhs() != f.rhs())
        throw Error("PR: " + pretty(f) + " is not of the form (p ⟶ q) ⟶ p");
    FolFormula c = f.rhs();
    return make(AxRule::PR, {}, {}, {}, {std::move(child)}, std::move(c));
}

AxProof hyp(FolFormula p) {
    FolFormula c = p;
    return make(AxRule::Hyp, {std::move(p)}, {}, {}, {}, std::move(c));
}

}  // namespace ax

// ---------------------------------------------------------------------------
// AX checker. Memoized per node so shared subproofs are checked once.

namespace {

bool is_ak(const FolFormula& c, const FolFormula& p, const FolFormula& q) {
    return c.is_imp() && c.lhs() == p && c.rhs().is_imp() && c.rhs().lhs() == q && c.rhs().rhs() == p;
}

// (q ⟶ r) ⟶ (r ⟶ p) ⟶ q ⟶ p
bool is_at(const FolFormula& c, const FolFormula& p, const FolFormula& q, const FolFormula& r) {
    if (!c.is_imp() || !c.rhs().is_imp() || !c.rhs().rhs().is_imp()) return false;
    const FolFormula& qr = c.lhs();
    const FolFormula& rp = c.rhs().lhs();
    const FolFormula& qp = c.rhs().rhs();
    return qr.is_imp() && qr.lhs() == q && qr.rhs() == r && rp.is_imp() && rp.lhs() == r && rp.rhs() == p &&
           qp.lhs() == q && qp.rhs() == p;
}

class AxChecker {
public:
    AxChecker(std::span<const FolFormula> hyps, unsigned allowed) : hyps_(hyps), allowed_(allowed) {}

    using Deps = std::vector<std::uint32_t>;

    // Hypotheses used by the subproof; nullptr after recording a diagnostic.
    const Deps* check(const AxProof& p) {
        if (!p) return fail(nullptr, "missing subproof");
        if (auto it = memo_.find(p.get()); it != memo_.end()) return &it->second;
        const AxNode& n = *p;
        auto arity = [&](std::size_t nf, std::size_t nc) {
            return n.formulas.size() == nf && n.children.size() == nc;
        };
        if (!(allowed_ & rule_bit(n.rule))) return fail(&n, "rule not permitted here");
        Deps deps;
        auto premise = [&](std::size_t i) -> const Deps* {
            path_.push_back(static_cast<int>(i));
            const Deps* d = check(n.children[i]);
            if (d) path_.pop_back();
            return d;
        };
        std::optional<FolFormula> expected;  // conclusion the rule yields, when not checked in place
        switch (n.rule) {
            case AxRule::AK:
                if (!arity(2, 0)) return fail(&n, "malformed node");
                if (!is_ak(n.concl, n.formulas[0], n.formulas[1])) expected = imp(n.formulas[0], imp(n.formulas[1], n.formulas[0]));
                break;
            case AxRule::AT: {
                if (!arity(3, 0)) return fail(&n, "malformed node");
                const auto& f = n.formulas;
                if (!is_at(n.concl, f[0], f[1], f[2])) expected = imp(imp(f[1], f[2]), imp(imp(f[2], f[0]), imp(f[1], f[0])));
                break;
            }
            case AxRule::AX:
                if (!arity(1, 0)) return fail(&n, "malformed node");
                expected = imp(FolFormula::falsity(), n.formulas[0]);
                break;
            case AxRule::AY:
                if (!arity(1, 0) || !n.term) return fail(&n, "malformed node");
                if (!n.formulas[0].is_uni()) return fail(&n, pretty(n.formulas[0]) + " is not universal");
                expected = imp(n.formulas[0], inst(*n.term, n.formulas[0].body()));
                break;
            case AxRule::Hyp: {
                if (!arity(1, 0)) return fail(&n, "malformed node");
                auto it = std::find(hyps_.begin(), hyps_.end(), n.formulas[0]);
                if (it == hyps_.end()) return fail(&n, pretty(n.formulas[0]) + " is not a hypothesis");
                expected = n.formulas[0];
                deps.push_back(static_cast<std::uint32_t>(it - hyps_.begin()));
                break;
            }
            case AxRule::MP: {
                if (!arity(0, 2)) return fail(&n, "malformed node");
                const Deps* a = premise(0);
                if (!a) return nullptr;
                Deps da = *a;
                const Deps* b = premise(1);
                if (!b) return nullptr;
                const FolFormula& major = n.children[0]->concl;
                const FolFormula& minor = n.children[1]->concl;
                if (!major.is_imp() || major.lhs() != minor)
                    return fail(&n, pretty(major) + " cannot be applied to " + pretty(minor));
                expected = major.rhs();
                std::set_union(da.begin(), da.end(), b->begin(), b->end(), std::back_inserter(deps));
                break;
            }
            case AxRule::GR: {
                if (!arity(0, 1) || n.constant.empty()) return fail(&n, "malformed node");
                const Deps* a = premise(0);
                if (!a) return nullptr;
                const FolFormula& f = n.children[0]->concl;
                if (!f.is_imp()) return fail(&n, pretty(f) + " is not an implication");
                if (occurs_in(n.constant, f.lhs()))
                    return fail(&n, "constant " + n.constant + " is not fresh: it occurs in " + pretty(f.lhs()));
                for (std::uint32_t d : *a)
                    if (occurs_in(n.constant, hyps_[d]))
                        return fail(&n, "constant " + n.constant + " is not fresh: it occurs in hypothesis " +
                                            pretty(hyps_[d]));
                expected = imp(f.lhs(), FolFormula::uni(abstract_const(0, n.constant, f.rhs())));
                deps = *a;
                break;
            }
            case AxRule::PR: {
                if (!arity(0, 1)) return fail(&n, "malformed node");
                const Deps* a = premise(0);
                if (!a) return nullptr;
                const FolFormula& f = n.children[0]->concl;
                if (!f.is_imp() || !f.lhs().is_imp() || f.lhs().lhs() != f.rhs())
                    return fail(&n, pretty(f) + " is not of the form (p ⟶ q) ⟶ p");
                expected = f.rhs();
                deps = *a;
                break;
            }
        }
        if (expected && *expected != n.concl)
            return fail(&n, "recorded conclusion " + pretty(n.concl) + " should be " + pretty(*expected));
        return &memo_.emplace(p.get(), std::move(deps)).first->second;
    }

    const std::string& diagnostic() const { return diag_; }

private:
    const Deps* fail(const AxNode* n, const std::string& why) {
        if (!diag_.empty()) return nullptr;
        diag_ = "root";
        for (int i : path_) diag_ += "." + std::to_string(i);
        if (n) diag_ += std::string(" (") + rule_name(n->rule) + ")";
        diag_ += ": " + why;
        return nullptr;
    }

    std::span<const FolFormula> hyps_;
    unsigned allowed_;
    std::unordered_map<const AxNode*, Deps> memo_;
    std::vector<int> path_;
    std::string diag_;
};

}  // namespace

CheckResult ax_check(const AxProof& proof, const FolFormula& claim, std::span<const FolFormula> hyps,
                     unsigned allowed) {
    AxChecker checker(hyps, allowed);
    if (!checker.check(proof)) return CheckResult::reject(checker.diagnostic());
    if (proof->concl != claim)
        return CheckResult::reject("root: proves " + pretty(proof->concl) + ", not " + pretty(claim));
    return CheckResult::accept();
}

std::size_t ax_dag_size(const AxProof& proof) {
    std::unordered_set<const AxNode*> seen;
    std::vector<const AxNode*> todo{proof.get()};
    while (!todo.empty()) {
        const AxNode* n = todo.back();
        todo.pop_back();
        if (!n || !seen.insert(n).second) continue;
        for (const auto& c : n->children) todo.push_back(c.get());
    }
    return seen.size();
}

double ax_tree_size(const AxProof& proof) {
    std::unordered_map<const AxNode*, double> memo;
    std::function<double(const AxNode*)> go = [&](const AxNode* n) -> double {
        if (auto it = memo.find(n); it != memo.end()) return it->second;
        double s = 1;
        for (const auto& c : n->children) s += go(c.get());
        return memo[n] = s;
    };
    return go(proof.get());
}

unsigned ax_rules_used(const AxProof& proof) {
    std::unordered_set<const AxNode*> seen;
    std::vector<const AxNode*> todo{proof.get()};
    unsigned used = 0;
    while (!todo.empty()) {
        const AxNode* n = todo.back();
        todo.pop_back();
        if (!n || !seen.insert(n).second) continue;
        used |= rule_bit(n->rule);
        for (const auto& c : n->children) todo.push_back(c.get());
    }
    return used;
}

bool ax_uses(const AxProof& proof, AxRule rule) { return (ax_rules_used(proof) & rule_bit(rule)) != 0; }

// ---------------------------------------------------------------------------
// Serialization

namespace {

template <class Node>
class Writer {
public:
    using Ptr = std::shared_ptr<const Node>;
    using Params = std::function<std::vector<std::string>(const Node&)>;
    using Name = std::function<std::string(const Node&)>;

    Writer(Name name, Params params) : name_(std::move(name)), params_(std::move(params)) {}

    void emit(const Ptr& root) {
        // Iterative postorder; subproofs can be deep.
        std::vector<std::pair<const Node*, bool>> stack{{root.get(), false}};
        while (!stack.empty()) {
            auto [n, expanded] = stack.back();
            stack.pop_back();
            if (auto it = line_.find(n); it != line_.end() && !expanded) {
                out_ << "Ref 0 ; " << it->second << "\n";
                ++count_;
                continue;
            }
            if (!expanded) {
                stack.push_back({n, true});
                for (auto it = n->children.rbegin(); it != n->children.rend(); ++it) stack.push_back({it->get(), false});
                continue;
            }
            out_ << name_(*n) << " " << n->children.size();
            for (const auto& p : params_(*n)) out_ << " ; " << p;
            out_ << "\n";
            line_[n] = ++count_;
        }
    }

    std::string str() const { return out_.str(); }

private:
    Name name_;
    Params params_;
    std::ostringstream out_;
    std::unordered_map<const Node*, std::size_t> line_;
    std::size_t count_ = 0;
};

}  // namespace

std::string write_nd(const NdProof& proof, const FolSequent& claim) {
    std::ostringstream head;
    head << "calculus nd\n";
    for (const auto& a : claim.assumptions) head << "assume " << pretty(a) << "\n";
    head << "goal " << pretty(claim.goal) << "\n";
    Writer<NdNode> w([](const NdNode& n) { return std::string(rule_name(n.rule)); },
                     [](const NdNode& n) {
                         std::vector<std::string> ps;
                         if (n.formula) ps.push_back(pretty(*n.formula));
                         if (n.term) ps.push_back(pretty(*n.term));
                         if (!n.constant.empty()) ps.push_back(n.constant);
                         return ps;
                     });
    w.emit(proof);
    return head.str() + w.str();
}

std::string write_ax(const AxProof& proof, const FolFormula& goal, std::span<const FolFormula> hyps) {
    std::ostringstream head;
    head << "calculus ax\n";
    for (const auto& h : hyps) head << "hyp " << pretty(h) << "\n";
    head << "goal " << pretty(goal) << "\n";
    Writer<AxNode> w([](const AxNode& n) { return std::string(rule_name(n.rule)); },
                     [](const AxNode& n) {
                         std::vector<std::string> ps;
                         for (const auto& f : n.formulas) ps.push_back(pretty(f));
                         if (n.term) ps.push_back(pretty(*n.term));
                         if (!n.constant.empty()) ps.push_back(n.constant);
                         return ps;
                     });
    w.emit(proof);
    return head.str() + w.str();
}

namespace {

struct Line {
    int number;
    std::string rule;
    std::size_t children = 0;
    struct Param {
        std::string text;
        int column;
    };
    std::vector<Param> params;
};

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

struct Document {
    std::string calculus;
    std::vector<std::pair<std::string, Line::Param>> header;  // (keyword, value)
    std::vector<int> header_lines;
    std::vector<Line> nodes;
};

Document split(std::string_view text, const std::string& file) {
    Document doc;
    std::size_t start = 0;
    int number = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(start, end - start);
        ++number;
        start = end + 1;
        std::string line = trim(raw);
        if (line.empty() || line.rfind("//", 0) == 0) {
            if (end == text.size()) break;
            continue;
        }
        int lead = static_cast<int>(raw.find_first_not_of(" \t"));
        std::size_t sp = line.find(' ');
        std::string word = line.substr(0, sp);
        std::string rest = sp == std::string::npos ? "" : line.substr(sp + 1);
        if (word == "calculus") {
            doc.calculus = trim(rest);
        } else if (word == "assume" || word == "goal" || word == "hyp") {
            doc.header.push_back({word, {trim(rest), lead + static_cast<int>(sp) + 2}});
            doc.header_lines.push_back(number);
        } else {
            Line l;
            l.number = number;
            std::size_t pos = 0;
            std::vector<std::pair<std::string, int>> parts;
            while (true) {
                std::size_t semi = line.find(';', pos);
                std::string part = line.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
                parts.push_back({trim(part), lead + static_cast<int>(pos) + 2});
                if (semi == std::string::npos) break;
                pos = semi + 1;
            }
            std::istringstream hs(parts[0].first);
            std::string count;
            hs >> l.rule >> count;
            if (l.rule.empty() || count.empty() || !std::all_of(count.begin(), count.end(), ::isdigit))
                throw ParseError("expected `Rule children`", {file, number, lead + 1, number, lead + 1});
            l.children = std::stoul(count);
            for (std::size_t i = 1; i < parts.size(); ++i) l.params.push_back({parts[i].first, parts[i].second});
            doc.nodes.push_back(std::move(l));
        }
        if (end == text.size()) break;
    }
    return doc;
}

template <class Node, class Build>
std::shared_ptr<const Node> assemble(const Document& doc, const std::string& file, Build build) {
    using Ptr = std::shared_ptr<const Node>;
    std::vector<Ptr> stack;
    std::vector<Ptr> by_line;
    for (const Line& l : doc.nodes) {
        SourceSpan at{file, l.number, 1, l.number, 1};
        if (l.rule == "Ref") {
            if (l.params.size() != 1) throw ParseError("Ref takes one line number", at);
            std::size_t k = 0;
            try {
                k = std::stoul(l.params[0].text);
            } catch (const std::exception&) {
                throw ParseError("bad line number in Ref", at);
            }
            if (k == 0 || k > by_line.size() || !by_line[k - 1])
                throw ParseError("Ref to unknown node " + std::to_string(k), at);
            stack.push_back(by_line[k - 1]);
            by_line.push_back(nullptr);
            continue;
        }
        if (stack.size() < l.children) throw ParseError("not enough subproofs for " + l.rule, at);
        std::vector<Ptr> kids(stack.end() - static_cast<std::ptrdiff_t>(l.children), stack.end());
        stack.resize(stack.size() - l.children);
        Ptr n = build(l, std::move(kids), at);
        stack.push_back(n);
        by_line.push_back(n);
    }
    if (stack.size() != 1)
        throw ParseError("expected exactly one root proof, found " + std::to_string(stack.size()), {file, 0, 0, 0, 0});
    return stack.back();
}

FolFormula param_formula(const Line& l, std::size_t i, const std::string& file) {
    if (i >= l.params.size()) throw ParseError(l.rule + ": missing formula parameter", {file, l.number, 1, l.number, 1});
    return parse_formula(l.params[i].text, {file, l.number, l.params[i].column, l.number, l.params[i].column});
}

FolTerm param_term(const Line& l, std::size_t i, const std::string& file) {
    if (i >= l.params.size()) throw ParseError(l.rule + ": missing term parameter", {file, l.number, 1, l.number, 1});
    return parse_term(l.params[i].text, {file, l.number, l.params[i].column, l.number, l.params[i].column});
}

std::string param_name(const Line& l, std::size_t i, const std::string& file) {
    if (i >= l.params.size() || l.params[i].text.empty())
        throw ParseError(l.rule + ": missing constant parameter", {file, l.number, 1, l.number, 1});
    return l.params[i].text;
}

void expect_params(const Line& l, std::size_t n, const SourceSpan& at) {
    if (l.params.size() != n)
        throw ParseError(l.rule + " takes " + std::to_string(n) + " parameters, found " +
                             std::to_string(l.params.size()),
                         at);
}

}  // namespace

std::string document_calculus(std::string_view text) { return split(text, "").calculus; }

NdDocument read_nd(std::string_view text, const std::string& file) {
    Document doc = split(text, file);
    if (doc.calculus != "nd") throw ParseError("expected `calculus nd`", {file, 1, 1, 1, 1});
    NdDocument out{{{}, FolFormula::falsity()}, nullptr};
    bool have_goal = false;
    for (std::size_t i = 0; i < doc.header.size(); ++i) {
        const auto& [key, val] = doc.header[i];
        FolFormula f = parse_formula(val.text, {file, doc.header_lines[i], val.column, doc.header_lines[i], val.column});
        if (key == "assume") out.claim.assumptions.push_back(f);
        else if (key == "goal") out.claim.goal = f, have_goal = true;
        else throw ParseError("unexpected header " + key, {file, doc.header_lines[i], 1, doc.header_lines[i], 1});
    }
    if (!have_goal) throw ParseError("missing `goal` line", {file, 1, 1, 1, 1});
    out.proof = assemble<NdNode>(doc, file, [&](const Line& l, std::vector<NdProof> kids, const SourceSpan& at) {
        NdRule r;
        if (l.rule == "Assm") r = NdRule::Assm;
        else if (l.rule == "FlsE") r = NdRule::FlsE;
        else if (l.rule == "ImpI") r = NdRule::ImpI;
        else if (l.rule == "ImpE") r = NdRule::ImpE;
        else if (l.rule == "UniE") r = NdRule::UniE;
        else if (l.rule == "UniI") r = NdRule::UniI;
        else if (l.rule == "ImpC") r = NdRule::ImpC;
        else throw ParseError("unknown natural deduction rule " + l.rule, at);
        if (kids.size() != expected_children(r))
            throw ParseError(l.rule + " takes " + std::to_string(expected_children(r)) + " subproofs", at);
        NdNode n{r, {}, {}, {}, std::move(kids)};
        switch (r) {
            case NdRule::ImpE:
            case NdRule::ImpC:
                expect_params(l, 1, at);
                n.formula = param_formula(l, 0, file);
                break;
            case NdRule::UniE:
                expect_params(l, 2, at);
                n.formula = param_formula(l, 0, file);
                n.term = param_term(l, 1, file);
                break;
            case NdRule::UniI:
                expect_params(l, 1, at);
                n.constant = param_name(l, 0, file);
                break;
            default:
                expect_params(l, 0, at);
        }
        return std::make_shared<const NdNode>(std::move(n));
    });
    return out;
}

AxDocument read_ax(std::string_view text, const std::string& file) {
    Document doc = split(text, file);
    if (doc.calculus != "ax") throw ParseError("expected `calculus ax`", {file, 1, 1, 1, 1});
    AxDocument out{{}, FolFormula::falsity(), nullptr};
    bool have_goal = false;
    for (std::size_t i = 0; i < doc.header.size(); ++i) {
        const auto& [key, val] = doc.header[i];
        FolFormula f = parse_formula(val.text, {file, doc.header_lines[i], val.column, doc.header_lines[i], val.column});
        if (key == "hyp") out.hyps.push_back(f);
        else if (key == "goal") out.goal = f, have_goal = true;
        else throw ParseError("unexpected header " + key, {file, doc.header_lines[i], 1, doc.header_lines[i], 1});
    }
    if (!have_goal) throw ParseError("missing `goal` line", {file, 1, 1, 1, 1});
    out.proof = assemble<AxNode>(doc, file, [&](const Line& l, std::vector<AxProof> kids, const SourceSpan& at) {
        // Build through the raw node so that malformed proofs still load and
        // are rejected by ax_check with a diagnostic.
        AxRule r;
        std::size_t nf = 0, nk = 0;
        if (l.rule == "AK") r = AxRule::AK, nf = 2;
        else if (l.rule == "AT") r = AxRule::AT, nf = 3;
        else if (l.rule == "AX") r = AxRule::AX, nf = 1;
        else if (l.rule == "AY") r = AxRule::AY, nf = 1;
        else if (l.rule == "MP") r = AxRule::MP, nk = 2;
        else if (l.rule == "GR") r = AxRule::GR, nk = 1;
        else if (l.rule == "PR") r = AxRule::PR, nk = 1;
        else if (l.rule == "Hyp") r = AxRule::Hyp, nf = 1;
        else throw ParseError("unknown axiomatic rule " + l.rule, at);
        if (kids.size() != nk) throw ParseError(l.rule + " takes " + std::to_string(nk) + " subproofs", at);
        AxNode n{r, {}, {}, {}, std::move(kids), FolFormula::falsity()};
        for (std::size_t i = 0; i < nf; ++i) n.formulas.push_back(param_formula(l, i, file));
        if (r == AxRule::AY) {
            expect_params(l, 2, at);
            n.term = param_term(l, 1, file);
        } else if (r == AxRule::GR) {
            expect_params(l, 1, at);
            n.constant = param_name(l, 0, file);
        } else {
            expect_params(l, nf, at);
        }
        try {
            switch (r) {
                case AxRule::AK: return ax::ak(n.formulas[0], n.formulas[1]);
                case AxRule::AT: return ax::at(n.formulas[0], n.formulas[1], n.formulas[2]);
                case AxRule::AX: return ax::ax(n.formulas[0]);
                case AxRule::AY: return ax::ay(n.formulas[0], *n.term);
                case AxRule::MP: return ax::mp(n.children[0], n.children[1]);
                case AxRule::GR: return ax::gr(n.constant, n.children[0]);
                case AxRule::PR: return ax::pr(n.children[0]);
                case AxRule::Hyp: return ax::hyp(n.formulas[0]);
            }
        } catch (const Error&) {
        }
        return std::make_shared<const AxNode>(std::move(n));
    });
    return out;
}

}  // namespace mhl::fol
