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

#include "mhl/session/engine.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "mhl/derived/theories.hpp"
#include "mhl/script/elaborate.hpp"
#include "mhl/syntax/logic.hpp"
#include "mhl/syntax/pretty.hpp"

namespace mhl::session {

namespace detail {

using derived::Instantiation;
using derived::PremiseShape;
using derived::Rule;
using script::Command;

struct Fact {
    std::optional<std::string> name;
    Thm thm;
};

struct Obtained {
    std::vector<Term> vars;
    Term prop;
    Thm exists;
};

// ⋀params. assms ⟹ concl, the stripped form of `premise`.
struct Goal {
    std::vector<Term> params;
    std::vector<Term> assms;
    Term concl;
    Term premise;
    std::size_t index;  // premise position in the block's rule
    std::optional<Thm> solved;
};

struct Segment {
    std::vector<Term> fixes;
    std::vector<Fact> facts;
    std::vector<Term> assumed;
    std::vector<Obtained> obtains;
    std::map<std::string, Term> abbrevs;
    std::vector<Thm> this_;
    int user_fixes = 0;
};

struct Claim {
    Command::Kind kind = Command::Kind::Have;
    std::string keyword;
    std::optional<std::string> label;
    Term target = Term::bound(0);
    std::vector<Term> obtain_vars;
    std::optional<Term> obtain_body;
    std::vector<Thm> chained;
    SourceSpan span;
};

struct Block {
    Claim claim;
    std::string method;  // rule name, or "-"
    std::shared_ptr<const Rule> rule;
    Instantiation inst;
    std::vector<std::optional<Thm>> filled;  // premises discharged by chained facts
    std::vector<Goal> goals;
    std::vector<Term> auto_fixes;
    Segment seg;
};

struct ItemState {
    std::string keyword;
    std::optional<std::string> name;
    Term stmt;
    std::map<std::string, syntax::Type> frees;
    SourceSpan span;
};

}  // namespace detail

struct State {
    std::shared_ptr<const TheoryState> theory;
    std::optional<detail::ItemState> item;
    std::optional<detail::Claim> pending;
    std::vector<detail::Block> blocks;
    std::vector<script::Command> applied;
};

namespace {

using namespace detail;
using Kind = Command::Kind;
using syntax::PrettyOptions;
using syntax::Type;

PrettyOptions display_options(bool iff_as_eq = false) {
    PrettyOptions o;
    o.eta_expand = true;
    o.iff_as_eq = iff_as_eq;
    return o;
}

std::string show(const Term& t) { return syntax::pretty(t, display_options()); }
std::string quoted(const Term& t) { return "‹" + show(t) + "›"; }

std::string goal_text(const Goal& g, bool iff_as_eq = false) {
    PrettyOptions o = display_options(iff_as_eq);
    std::string s;
    if (!g.params.empty()) {
        s = "⋀";
        for (std::size_t i = 0; i < g.params.size(); ++i) s += (i ? " " : "") + g.params[i].name();
        s += ". ";
    }
    for (const Term& a : g.assms) s += syntax::pretty(a, o) + " ⟹ ";
    return s + syntax::pretty(g.concl, o);
}

bool is_pred_type(const Type& t) {
    if (!t.is_fun()) return false;
    Type r = t;
    while (r.is_fun()) r = r.codomain();
    return r.is_bool();
}

bool head_compatible(const Term& pattern, const Term& fact, const std::set<Term>& schematic) {
    std::vector<Term> pa, fa;
    Term ph = syntax::strip_app(pattern, pa);
    if (ph.is_free() && schematic.count(ph)) return true;
    if (ph.is_abs() || ph.is_bound()) return true;
    Term fh = syntax::strip_app(fact, fa);
    if (ph.is_const()) return fh.is_const() && fh.name() == ph.name() && fa.size() == pa.size();
    return ph == fh && fa.size() == pa.size();
}

// Schematic variables of `r` that `inst` leaves open and that occur in `t`.
std::vector<Term> undetermined(const Rule& r, const Instantiation& inst, const Term& t) {
    std::vector<Term> out;
    for (const Term& v : r.schematic())
        if (!inst.lookup(v) && syntax::occurs_free(v, syntax::instantiate(Term(v), inst.types, {})) &&
            syntax::occurs_free_name(v.name(), t))
            out.push_back(v);
    std::set<std::string> tvs;
    syntax::collect_type_vars(t, tvs);
    for (const std::string& tv : tvs)
        if (tv[0] == '?') out.push_back(Term::free("'" + tv, Type::var(tv)));
    return out;
}

struct Stripped {
    std::vector<Term> params;
    std::vector<Term> assms;
    Term concl;
};

Stripped strip(const Term& premise, const PremiseShape& shape, std::set<std::string>& avoid) {
    Stripped s{{}, {}, premise};
    for (int k = 0; k < shape.params; ++k) {
        auto arg = syntax::dest_all(s.concl);
        if (!arg) throw Error("premise " + show(premise) + " is not universally quantified");
        Term v = Term::bound(0);
        if (arg->is_abs()) {
            std::string name = syntax::variant_name(arg->name().empty() ? "x" : arg->name(), avoid);
            v = Term::free(name, arg->type());
            s.concl = syntax::normalize(syntax::subst_bound(arg->body(), v));
        } else {
            std::string name = syntax::variant_name("x", avoid);
            v = Term::free(name, syntax::type_of(*arg).domain());
            s.concl = syntax::normalize(Term::app(*arg, v));
        }
        avoid.insert(v.name());
        s.params.push_back(v);
    }
    for (int k = 0; k < shape.assms; ++k) {
        auto ab = syntax::dest_imp(s.concl);
        if (!ab) throw Error("premise " + show(premise) + " is not an implication");
        s.assms.push_back(ab->first);
        s.concl = ab->second;
    }
    return s;
}

// Backward search used by `..` and `by`.
class Justifier {
public:
    enum class Mode { DotsElim, DotsIntro, By };

    Justifier(const Theory& thy, const std::vector<Thm>& chained, const std::vector<Thm>& scope,
              std::set<std::string> avoid)
        : thy_(thy), chained_count_(chained.size()), avoid_(std::move(avoid)) {
        auto add = [&](const Thm& t) {
            for (const Thm& p : pool_)
                if (p.concl() == t.concl() && p.hyps() == t.hyps()) return;
            pool_.push_back(t);
        };
        for (const Thm& t : chained) pool_.push_back(t);
        for (const Thm& t : scope) add(t);
    }

    std::optional<Thm> fact(const Term& goal) const {
        for (const Thm& t : pool_)
            if (t.concl() == goal) return t;
        return std::nullopt;
    }

    std::optional<Thm> chained_fact(const Term& goal) const {
        for (std::size_t i = 0; i < chained_count_; ++i)
            if (pool_[i].concl() == goal) return pool_[i];
        return std::nullopt;
    }

    std::optional<Thm> dots(const Term& goal, const RuleCatalog& cat, std::string* used) {
        if (auto t = chained_fact(goal)) {
            *used = "this";
            return t;
        }
        for (Mode mode : {Mode::DotsElim, Mode::DotsIntro}) {
            if (mode == Mode::DotsElim && chained_count_ == 0) continue;
            derived::RuleKind want = mode == Mode::DotsElim ? derived::RuleKind::Elim : derived::RuleKind::Intro;
            for (const Rule& r : cat.rules()) {
                if (r.kind != want) continue;
                if (auto t = try_rule(r, goal, {}, mode)) {
                    *used = r.name;
                    return t;
                }
            }
        }
        return std::nullopt;
    }

    struct Candidate {
        std::shared_ptr<const Rule> rule;
        Instantiation seed;
    };

    std::optional<Thm> by(const Term& goal, std::vector<Candidate> rules) {
        rules_ = std::move(rules);
        used_.assign(rules_.size(), false);
        return prove(goal);
    }

    void add_fact(const Thm& t) { pool_.push_back(t); }

private:
    std::optional<Thm> prove(const Term& goal) {
        if (auto t = fact(goal)) return t;
        for (std::size_t k = 0; k < rules_.size(); ++k) {
            if (used_[k]) continue;
            used_[k] = true;
            auto t = try_rule(*rules_[k].rule, goal, rules_[k].seed, Mode::By);
            used_[k] = false;
            if (t) return t;
        }
        return std::nullopt;
    }

    std::optional<Thm> prove_premise(const Term& premise, const PremiseShape& shape) {
        Stripped s = strip(premise, shape, avoid_);
        std::size_t mark = pool_.size();
        for (const Term& a : s.assms) pool_.push_back(kernel::Kernel::assume(thy_, a));
        auto r = prove(s.concl);
        pool_.resize(mark, pool_.front());
        if (!r) return std::nullopt;
        try {
            Thm t = *r;
            for (std::size_t i = s.assms.size(); i-- > 0;) t = kernel::Kernel::imp_intro(thy_, s.assms[i], t);
            for (std::size_t i = s.params.size(); i-- > 0;) t = kernel::Kernel::all_intro(s.params[i], t);
            if (t.concl() != premise) return std::nullopt;
            return t;
        } catch (const Error&) {
            return std::nullopt;
        }
    }

    std::optional<Thm> try_rule(const Rule& r, const Term& goal, const Instantiation& seed, Mode mode) {
        std::vector<int> choice(r.premises.size(), -1);
        std::set<Term> schematic = r.schematic();
        std::optional<Thm> out;
        search(r, goal, seed, mode, schematic, choice, 0, out);
        return out;
    }

    bool search(const Rule& r, const Term& goal, const Instantiation& seed, Mode mode, const std::set<Term>& schematic,
                std::vector<int>& choice, std::size_t i, std::optional<Thm>& out) {
        if (--budget_ < 0) return false;
        if (i == choice.size()) return leaf(r, goal, seed, mode, choice, out);
        std::size_t limit = mode == Mode::DotsElim && i == 0 ? chained_count_ : pool_.size();
        for (std::size_t f = 0; f < limit; ++f) {
            if (!head_compatible(r.premises[i], pool_[f].concl(), schematic)) continue;
            choice[i] = static_cast<int>(f);
            if (search(r, goal, seed, mode, schematic, choice, i + 1, out)) return true;
        }
        if (mode == Mode::By) {
            choice[i] = -1;
            if (search(r, goal, seed, mode, schematic, choice, i + 1, out)) return true;
        }
        return false;
    }

    bool leaf(const Rule& r, const Term& goal, const Instantiation& seed, Mode mode, const std::vector<int>& choice,
              std::optional<Thm>& out) {
        if (mode != Mode::By)
            for (std::size_t c = 0; c < chained_count_; ++c)
                if (std::find(choice.begin(), choice.end(), static_cast<int>(c)) == choice.end()) return false;
        std::vector<std::pair<std::size_t, Term>> targets;
        for (std::size_t i = 0; i < choice.size(); ++i)
            if (choice[i] >= 0) targets.emplace_back(i, pool_[choice[i]].concl());
        auto inst = derived::match_rule(r, targets, goal, seed);
        if (!inst) return false;
        derived::RuleInstance ri = derived::instance_of(r, *inst);
        if (ri.concl != goal) return false;
        std::vector<Thm> facts;
        for (std::size_t i = 0; i < choice.size(); ++i) {
            if (choice[i] >= 0) {
                facts.push_back(pool_[choice[i]]);
                continue;
            }
            if (!undetermined(r, *inst, ri.premises[i]).empty()) return false;
            auto t = prove_premise(ri.premises[i], r.shapes[i]);
            if (!t) return false;
            facts.push_back(*t);
        }
        try {
            out = derived::apply_rule(thy_, r, *inst, facts);
            return true;
        } catch (const Error&) {
            return false;
        }
    }

    const Theory& thy_;
    std::vector<Thm> pool_;
    std::size_t chained_count_;
    std::set<std::string> avoid_;
    std::vector<Candidate> rules_;
    std::vector<bool> used_;
    long budget_ = 50000;
};

// Applies one command to a mutable copy of the state.
class Engine {
public:
    Engine(State& st, std::optional<GateSet> gates) : st_(st), gates_(gates) {}

    void run(const Command& c) {
        cmd_ = &c;
        try {
            dispatch(c);
        } catch (const SpannedError&) {
            throw;
        } catch (const Error& e) {
            throw SpannedError(e.what(), c.span);
        }
        st_.applied.push_back(c);
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw SpannedError(msg, cmd_->span); }

    const TheoryState& ts() const { return *st_.theory; }
    const Theory& thy() const { return st_.theory->thy; }
    Segment& seg() { return st_.blocks.back().seg; }

    void need_block() const {
        if (st_.pending) fail("finish '" + show(st_.pending->target) + "' first: expected by, .. or proof");
        if (st_.blocks.empty()) fail(std::string("'") + script::command_keyword(cmd_->kind) + "' needs an open proof block");
    }

    void dispatch(const Command& c) {
        if (!st_.theory && c.kind != Kind::Theory) fail("no theory yet: start with 'theory <name> imports <core|classical|full>'");
        if (st_.pending && st_.pending->kind == Kind::Item && opens_body(c.kind)) {
            // A lemma followed directly by proof text: the proof is a plain block.
            Command open;
            open.kind = Kind::Proof;
            open.method = Command::Method::Skip;
            open.span = c.span;
            proof(open);
            st_.applied.push_back(open);
        }
        switch (c.kind) {
        case Kind::Theory: return theory(c);
        case Kind::Item: return item(c);
        case Kind::Assume: return assume(c);
        case Kind::Fix: return fix(c);
        case Kind::Let: return let(c);
        case Kind::Have:
        case Kind::Show:
        case Kind::Obtain: return claim(c);
        case Kind::Proof: return proof(c);
        case Kind::Qed: return qed();
        case Kind::Next: return next();
        case Kind::By:
        case Kind::Dots: return terminal(c);
        }
    }

    static bool opens_body(Kind k) {
        return k == Kind::Assume || k == Kind::Fix || k == Kind::Let || k == Kind::Have || k == Kind::Show ||
               k == Kind::Obtain;
    }

    // ---- context ----

    std::map<std::string, Type> visible_fixed() const {
        std::map<std::string, Type> out;
        if (st_.item) out = st_.item->frees;
        for (const Block& b : st_.blocks)
            for (const Term& v : b.seg.fixes) out.insert_or_assign(v.name(), v.type());
        return out;
    }

    std::optional<Term> thesis() const {
        if (!st_.blocks.empty()) return st_.blocks.back().claim.target;
        if (st_.pending) return st_.pending->target;
        return std::nullopt;
    }

    script::ElabContext context() const {
        script::ElabContext ctx;
        ctx.theory = &thy();
        ctx.fixed = visible_fixed();
        for (const Block& b : st_.blocks)
            for (const auto& [n, t] : b.seg.abbrevs) ctx.abbrevs.insert_or_assign(n, t);
        if (auto t = thesis()) ctx.abbrevs.insert_or_assign("?thesis", *t);
        return ctx;
    }

    Term formula(const script::PreTermPtr& p, const script::ElabContext* ctx = nullptr) const {
        script::ElabContext local = ctx ? *ctx : context();
        return syntax::normalize(script::elaborate(*p, local, Type::boolean()));
    }

    Term term(const script::PreTermPtr& p) const { return syntax::normalize(script::elaborate(*p, context())); }

    // Facts in scope, innermost segment first, most recent first.
    std::vector<const Fact*> visible_facts() const {
        std::vector<const Fact*> out;
        for (auto b = st_.blocks.rbegin(); b != st_.blocks.rend(); ++b)
            for (auto f = b->seg.facts.rbegin(); f != b->seg.facts.rend(); ++f) out.push_back(&*f);
        return out;
    }

    std::set<std::string> names_in_use() const {
        std::set<std::string> out;
        auto add_term = [&](const Term& t) {
            for (const Term& v : syntax::free_vars(t)) out.insert(v.name());
        };
        for (const auto& [n, ty] : visible_fixed()) out.insert(n);
        for (const Fact* f : visible_facts()) {
            add_term(f->thm.concl());
            for (const Term& h : f->thm.hyps()) add_term(h);
        }
        for (const Block& b : st_.blocks) {
            add_term(b.claim.target);
            for (const Goal& g : b.goals) {
                add_term(g.premise);
                for (const Term& p : g.params) out.insert(p.name());
            }
            for (const auto& [n, t] : b.seg.abbrevs) add_term(t);
        }
        if (st_.pending) add_term(st_.pending->target);
        return out;
    }

    // Hypotheses a result inside block `b` may still carry once b's own
    // assumptions and obtains are gone.
    std::set<Term> outer_hyps(std::size_t b) const {
        std::set<Term> out;
        for (std::size_t i = 0; i < b; ++i) {
            const Segment& s = st_.blocks[i].seg;
            out.insert(s.assumed.begin(), s.assumed.end());
            for (const Obtained& o : s.obtains) out.insert(o.prop);
        }
        return out;
    }

    std::vector<Thm> resolve(const script::FactRef& f) const {
        using FK = script::FactRef::Kind;
        if (f.kind == FK::This) {
            if (st_.blocks.empty() || st_.blocks.back().seg.this_.empty())
                throw SpannedError("'this' is empty here", f.span);
            return st_.blocks.back().seg.this_;
        }
        if (f.kind == FK::Name) {
            for (const Fact* fact : visible_facts())
                if (fact->name == f.name) return {fact->thm};
            if (const ProvedTheorem* t = ts().theorem(f.name)) return {t->thm};
            throw SpannedError("unknown fact " + f.name, f.span);
        }
        Term phi = formula(f.prop);
        for (const Fact* fact : visible_facts())
            if (fact->thm.concl() == phi) return {fact->thm};
        for (const ProvedTheorem& t : ts().theorems)
            if (t.thm.concl() == phi) return {t.thm};
        throw SpannedError(quoted(phi) + " is not a fact in scope", f.span);
    }

    std::shared_ptr<const Rule> rule(const std::string& name) const {
        if (const Rule* r = ts().catalog->find(name)) return std::make_shared<Rule>(*r);
        if (const ProvedTheorem* t = ts().theorem(name))
            return std::make_shared<Rule>(derived::theorem_rule(thy(), name, t->thm));
        for (const derived::RuleInfo& info : RuleCatalog::known())
            if (info.name == name)
                fail("rule " + name + " needs gates " + info.required.to_string() + " but theory " + ts().name +
                     " has " + ts().gates.to_string());
        fail("unknown rule " + name);
    }

    Justifier::Candidate candidate(const script::RuleRef& ref) const {
        Justifier::Candidate c{rule(ref.name), {}};
        if (ref.args.empty()) return c;
        std::vector<Term> slots;
        for (const Term& v : c.rule->vars())
            if (!is_pred_type(v.type())) slots.push_back(v);
        if (ref.args.size() > slots.size())
            throw SpannedError("rule " + ref.name + " takes at most " + std::to_string(slots.size()) + " arguments",
                               ref.span);
        std::vector<std::pair<std::string, Term>> named;
        for (std::size_t i = 0; i < ref.args.size(); ++i)
            if (ref.args[i]) named.emplace_back(slots[i].name(), term(ref.args[i]));
        try {
            c.seed = derived::explicit_instantiation(thy(), *c.rule, named);
        } catch (const SpannedError&) {
            throw;
        } catch (const Error& e) {
            throw SpannedError(e.what(), ref.span);
        }
        return c;
    }

    // ---- commands ----

    void theory(const Command& c) {
        if (st_.theory) fail("the theory header is already set");
        auto gs = GateSet::parse(c.imports);
        if (!gs) fail("unknown import '" + c.imports + "': expected core, classical or full");
        auto ts = std::make_shared<TheoryState>();
        ts->name = c.name;
        ts->imports = c.imports;
        ts->gates = gates_ ? *gates_ : *gs;
        ts->thy = derived::standard_theory(ts->gates);
        ts->catalog = std::make_shared<RuleCatalog>(ts->thy);
        st_.theory = std::move(ts);
    }

    void item(const Command& c) {
        if (st_.item) fail("finish the current " + st_.item->keyword + " first");
        const script::Prop& p = c.props.at(0);
        if (p.label && ts().theorem(*p.label)) fail("a theorem named " + *p.label + " already exists");
        script::ElabContext ctx;
        ctx.theory = &thy();
        Term stmt = formula(p.term, &ctx);
        ItemState it{c.name, p.label, stmt, {}, c.span};
        for (const Term& v : syntax::free_vars(stmt)) it.frees.insert_or_assign(v.name(), v.type());
        st_.item = std::move(it);
        st_.pending = Claim{Kind::Item, c.name, p.label, stmt, {}, std::nullopt, {}, c.span};
    }

    void assume(const Command& c) {
        need_block();
        std::vector<Thm> added;
        for (const script::Prop& p : c.props) {
            Term phi = formula(p.term);
            Thm th = kernel::Kernel::assume(thy(), phi);
            seg().assumed.push_back(phi);
            seg().facts.push_back({p.label, th});
            added.push_back(th);
        }
        seg().this_ = added;
    }

    void fix(const Command& c) {
        need_block();
        Block& b = st_.blocks.back();
        std::set<std::string> used = names_in_use();
        for (const auto& v : c.vars) {
            bool auto_fixed = false;
            for (const Term& a : seg().fixes)
                if (a.name() == v.name && std::find(b.auto_fixes.begin(), b.auto_fixes.end(), a) != b.auto_fixes.end() &&
                    (!v.type || *v.type == a.type()))
                    auto_fixed = true;
            if (auto_fixed) continue;
            if (used.count(v.name) || thy().signature().has_constant(v.name))
                fail("cannot fix " + v.name + ": the name is already in use");
            Type ty = v.type ? *v.type : Type::var("a");
            if (!v.type) {
                // Take the type of the matching parameter of the first open goal.
                for (const Goal& g : b.goals) {
                    if (g.solved) continue;
                    if (seg().user_fixes < static_cast<int>(g.params.size())) ty = g.params[seg().user_fixes].type();
                    break;
                }
            }
            thy().signature().check_type(ty);
            seg().fixes.push_back(Term::free(v.name, ty));
            ++seg().user_fixes;
            used.insert(v.name);
        }
    }

    void let(const Command& c) {
        need_block();
        if (c.name == "?thesis") fail("?thesis cannot be redefined");
        seg().abbrevs.insert_or_assign(c.name, term(c.term));
    }

    std::vector<Thm> chained(const Command& c) {
        std::vector<Thm> out;
        for (const script::FactRef& f : c.facts) {
            auto ts = resolve(f);
            out.insert(out.end(), ts.begin(), ts.end());
        }
        if (c.chain == script::Chain::Then || c.chain == script::Chain::With) {
            if (seg().this_.empty()) fail("there is no previous fact to chain");
            out.insert(out.end(), seg().this_.begin(), seg().this_.end());
        }
        return out;
    }

    void claim(const Command& c) {
        need_block();
        const script::Prop& p = c.props.at(0);
        Claim cl{c.kind, script::command_keyword(c.kind), p.label, Term::bound(0), {}, std::nullopt, chained(c), c.span};
        if (c.kind != Kind::Obtain) {
            cl.target = formula(p.term);
        } else {
            std::set<std::string> used = names_in_use();
            script::ElabContext ctx = context();
            for (const auto& v : c.vars) {
                if (used.count(v.name) || ctx.fixed.count(v.name) || thy().signature().has_constant(v.name))
                    fail("cannot obtain " + v.name + ": the name is already in use");
                if (v.type) ctx.fixed.insert_or_assign(v.name, *v.type);
            }
            Term body = formula(p.term, &ctx);
            auto frees = syntax::free_vars(body);
            for (const auto& v : c.vars) {
                std::optional<Term> var;
                for (const Term& f : frees)
                    if (f.name() == v.name) var = f;
                if (!var) var = Term::free(v.name, v.type ? *v.type : Type::var("a"));
                cl.obtain_vars.push_back(*var);
            }
            Term target = body;
            for (std::size_t i = cl.obtain_vars.size(); i-- > 0;) target = syntax::normalize(syntax::mk_ex(cl.obtain_vars[i], target));
            cl.target = target;
            cl.obtain_body = body;
        }
        seg().this_.clear();
        st_.pending = std::move(cl);
    }

    void terminal(const Command& c) {
        if (!st_.pending) fail(std::string("'") + script::command_keyword(c.kind) + "' without a pending claim");
        Claim cl = *st_.pending;
        std::vector<Thm> scope;
        for (const Fact* f : visible_facts()) scope.push_back(f->thm);
        Justifier j(thy(), cl.chained, scope, names_in_use());
        std::optional<Thm> th;
        if (c.kind == Kind::Dots) {
            std::string used;
            th = j.dots(cl.target, *ts().catalog, &used);
            if (!th) fail("'..' found no single rule that proves " + quoted(cl.target) + chained_note(cl));
        } else {
            std::vector<Justifier::Candidate> rules;
            for (const script::RuleRef& r : c.rules) {
                bool local = false;
                for (const Fact* f : visible_facts())
                    if (f->name == r.name && r.args.empty()) {
                        j.add_fact(f->thm);
                        local = true;
                        break;
                    }
                if (!local) rules.push_back(candidate(r));
            }
            th = j.by(cl.target, rules);
            if (!th) {
                std::string names;
                for (const script::RuleRef& r : c.rules) names += " " + r.name;
                fail("by" + names + " does not prove " + quoted(cl.target) + chained_note(cl));
            }
        }
        st_.pending.reset();
        complete(cl, *th);
    }

    static std::string chained_note(const Claim& cl) {
        if (cl.chained.empty()) return "";
        std::string s = " from";
        for (const Thm& t : cl.chained) s += " " + quoted(t.concl());
        return s;
    }

    void proof(const Command& c) {
        if (!st_.pending) fail("'proof' must follow have, show, obtain or a lemma");
        Claim cl = *st_.pending;
        Block b;
        b.claim = cl;
        const Term& phi = cl.target;
        if (c.method == Command::Method::Skip) {
            b.method = "-";
            b.goals.push_back({{}, {}, phi, phi, 0, std::nullopt});
        } else {
            Justifier::Candidate cand;
            if (c.method == Command::Method::Rule) {
                cand = candidate(c.rules.at(0));
            } else {
                DefaultIntro d = default_intro(phi);
                if (!d.rule) fail(d.reason);
                cand.rule = rule(*d.rule);
            }
            const Rule& r = *cand.rule;
            b.method = r.name;
            if (cl.chained.size() > r.premises.size())
                fail("rule " + r.name + " has " + std::to_string(r.premises.size()) + " premises but " +
                     std::to_string(cl.chained.size()) + " facts are chained");
            std::vector<std::pair<std::size_t, Term>> targets;
            for (std::size_t i = 0; i < cl.chained.size(); ++i) targets.emplace_back(i, cl.chained[i].concl());
            auto inst = derived::match_rule(r, targets, phi, cand.seed);
            if (!inst) fail("rule " + r.name + " does not apply to " + quoted(phi) + chained_note(cl));
            derived::RuleInstance ri = derived::instance_of(r, *inst);
            if (ri.concl != phi) fail("rule " + r.name + " does not apply to " + quoted(phi));
            std::set<std::string> avoid = names_in_use();
            b.rule = cand.rule;
            b.inst = *inst;
            b.filled.resize(r.premises.size());
            for (std::size_t i = 0; i < r.premises.size(); ++i) {
                if (i < cl.chained.size()) {
                    b.filled[i] = cl.chained[i];
                    continue;
                }
                auto open = undetermined(r, *inst, ri.premises[i]);
                if (!open.empty())
                    fail("rule " + r.name + " leaves " + open[0].name() + " open; instantiate it as " + r.name + "[...]");
                Stripped s = strip(ri.premises[i], r.shapes[i], avoid);
                b.goals.push_back({s.params, s.assms, s.concl, ri.premises[i], i, std::nullopt});
                b.auto_fixes.insert(b.auto_fixes.end(), s.params.begin(), s.params.end());
            }
        }
        b.seg.fixes = b.auto_fixes;
        st_.pending.reset();
        st_.blocks.push_back(std::move(b));
    }

    void next() {
        need_block();
        Block& b = st_.blocks.back();
        b.seg = Segment{};
        b.seg.fixes = b.auto_fixes;
    }

    void qed() {
        need_block();
        Block& b = st_.blocks.back();
        std::string open;
        int n = 0;
        for (const Goal& g : b.goals)
            if (!g.solved) open += "\n  " + std::to_string(++n) + ". " + goal_text(g);
        if (n) fail("qed with " + std::to_string(n) + " open goal" + (n > 1 ? "s" : "") + ":" + open);
        Thm th = b.goals.empty() ? derived::apply_rule(thy(), *b.rule, b.inst, {}) : *b.goals[0].solved;
        if (b.rule) {
            std::vector<Thm> facts;
            for (std::size_t i = 0; i < b.filled.size(); ++i) {
                if (b.filled[i]) {
                    facts.push_back(*b.filled[i]);
                    continue;
                }
                for (const Goal& g : b.goals)
                    if (g.index == i) facts.push_back(*g.solved);
            }
            th = derived::apply_rule(thy(), *b.rule, b.inst, facts);
        }
        Claim cl = b.claim;
        st_.blocks.pop_back();
        complete(cl, th);
    }

    // ---- closing claims ----

    Thm ex_elim(const Thm& major, const Thm& minor, const Term& q) {
        const Rule& r = ts().catalog->get("Ex_E");
        auto inst = derived::match_rule(r, {{0, major.concl()}, {1, minor.concl()}}, q);
        if (!inst) fail("internal: Ex_E does not fit " + quoted(major.concl()));
        return derived::apply_rule(thy(), r, *inst, {major, minor});
    }

    Thm discharge(const Obtained& o, Thm th) {
        if (!th.has_hyp(o.prop)) return th;
        for (const Term& v : o.vars)
            if (syntax::occurs_free(v, th.concl()))
                fail("obtained " + v.name() + " occurs in " + quoted(th.concl()));
        std::vector<Term> bodies(o.vars.size() + 1, o.prop);
        for (std::size_t i = o.vars.size(); i-- > 0;) bodies[i] = syntax::normalize(syntax::mk_ex(o.vars[i], bodies[i + 1]));
        Term q = th.concl();
        for (std::size_t i = o.vars.size(); i-- > 0;) {
            Thm minor = kernel::Kernel::imp_intro(thy(), bodies[i + 1], th);
            try {
                minor = kernel::Kernel::all_intro(o.vars[i], minor);
            } catch (const KernelError&) {
                fail("obtained " + o.vars[i].name() + " still occurs in an assumption");
            }
            Thm major = i == 0 ? o.exists : kernel::Kernel::assume(thy(), bodies[i]);
            th = ex_elim(major, minor, q);
        }
        return th;
    }

    void close_goal(Thm th) {
        std::size_t bi = st_.blocks.size() - 1;
        Block& b = st_.blocks[bi];
        for (auto o = b.seg.obtains.rbegin(); o != b.seg.obtains.rend(); ++o) th = discharge(*o, th);
        const Term phi = th.concl();
        std::set<Term> allowed = outer_hyps(bi);
        std::string why;
        for (Goal& g : b.goals) {
            if (g.solved) continue;
            derived::Matcher m(std::set<Term>(g.params.begin(), g.params.end()), {});
            if (!m.add(g.concl, phi) || !m.solve()) continue;
            syntax::TermSubst sub;
            std::vector<Term> vars;
            bool ok = true;
            for (const Term& p : g.params) {
                Term v = m.result().lookup(p).value_or(p);
                if (!v.is_free() || std::find(vars.begin(), vars.end(), v) != vars.end()) ok = false;
                vars.push_back(v);
                sub.emplace_back(p, v);
            }
            if (!ok) continue;
            Thm t = th;
            try {
                for (std::size_t i = g.assms.size(); i-- > 0;)
                    t = kernel::Kernel::imp_intro(thy(), syntax::normalize(syntax::instantiate(g.assms[i], {}, sub)), t);
                for (std::size_t i = vars.size(); i-- > 0;) t = kernel::Kernel::all_intro(vars[i], t);
            } catch (const KernelError& e) {
                why = e.what();
                continue;
            }
            if (t.concl() != g.premise) continue;
            std::optional<Term> stray;
            for (const Term& h : t.hyps())
                if (!allowed.count(h)) stray = h;
            if (stray) {
                why = quoted(*stray) + " is assumed here but is not a premise of the goal";
                continue;
            }
            g.solved = t;
            return;
        }
        std::string open;
        int n = 0;
        for (const Goal& g : b.goals)
            if (!g.solved) open += "\n  " + std::to_string(++n) + ". " + goal_text(g);
        if (!why.empty()) fail("show " + quoted(phi) + ": " + why);
        if (!n) fail("show " + quoted(phi) + ": no goal is left open");
        fail("show " + quoted(phi) + " matches no open goal:" + open);
    }

    void complete(const Claim& cl, const Thm& th) {
        if (th.concl() != cl.target) fail("internal: proved " + quoted(th.concl()) + " for " + quoted(cl.target));
        switch (cl.kind) {
        case Kind::Item: {
            if (!th.hyps().empty()) fail("the theorem still depends on " + quoted(th.hyps()[0]));
            if (!th.gates().subset_of(ts().gates))
                fail("theorem uses gates " + th.gates().to_string() + " beyond " + ts().gates.to_string());
            auto next = std::make_shared<TheoryState>(ts());
            next->theorems.push_back({cl.label.value_or(""), cl.keyword, th, st_.item->span});
            st_.theory = std::move(next);
            st_.item.reset();
            return;
        }
        case Kind::Have:
            seg().facts.push_back({cl.label, th});
            seg().this_ = {th};
            return;
        case Kind::Show:
            close_goal(th);
            seg().facts.push_back({cl.label, th});
            seg().this_ = {th};
            return;
        case Kind::Obtain: {
            Thm a = kernel::Kernel::assume(thy(), *cl.obtain_body);
            seg().obtains.push_back({cl.obtain_vars, *cl.obtain_body, th});
            seg().fixes.insert(seg().fixes.end(), cl.obtain_vars.begin(), cl.obtain_vars.end());
            seg().facts.push_back({cl.label, a});
            seg().this_ = {a};
            return;
        }
        default: fail("internal: bad claim");
        }
    }

    State& st_;
    std::optional<GateSet> gates_;
    const Command* cmd_ = nullptr;
};

std::string hash_string(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

nlohmann::json thm_json(const Thm& t) {
    nlohmann::json hyps = nlohmann::json::array();
    for (const Term& h : t.hyps()) hyps.push_back(show(h));
    return {{"statement", show(t.concl())}, {"hyps", hyps}, {"gates", t.gates().names()}};
}

std::string claim_kind(Kind k, const std::string& keyword) {
    return k == Kind::Item ? keyword : script::command_keyword(k);
}

}  // namespace

const ProvedTheorem* TheoryState::theorem(const std::string& n) const {
    if (n.empty()) return nullptr;
    for (auto it = theorems.rbegin(); it != theorems.rend(); ++it)
        if (it->name == n) return &*it;
    return nullptr;
}

DefaultIntro default_intro(const Term& goal) {
    if (syntax::is_iff(goal)) return {"Iff_I", ""};
    if (syntax::dest_imp(goal)) return {"Imp_I", ""};
    if (syntax::dest_all(goal)) return {"Uni_I", ""};
    if (syntax::dest_not(goal)) return {"Neg_I", ""};
    if (syntax::dest_conj(goal)) return {"Conj_I", ""};
    if (syntax::is_const(goal, syntax::cname::kTrue)) return {"Truth_I", ""};
    if (syntax::dest_ex(goal))
        return {std::nullopt, "no default rule for an existential goal: name a witness with Ex_I[t]"};
    if (syntax::dest_disj(goal))
        return {std::nullopt, "no default rule for a disjunction: choose Disj_I1 or Disj_I2"};
    return {std::nullopt, "no introduction rule applies to " + quoted(goal) + "; use 'proof -' or 'proof (rule R)'"};
}

Session::Session(std::optional<GateSet> gates) : gates_(gates), state_(std::make_shared<State>()) {}
Session::~Session() = default;
Session::Session(const Session&) = default;
Session& Session::operator=(const Session&) = default;
Session::Session(Session&&) noexcept = default;
Session& Session::operator=(Session&&) noexcept = default;

Session Session::start(const std::string& imports, std::string_view goal, std::optional<GateSet> gates,
                       const std::string& theory_name) {
    Session s(gates);
    s.step("theory " + theory_name + " imports " + imports);
    script::Command item;
    item.kind = script::Command::Kind::Item;
    item.name = "lemma";
    SourceSpan origin{"<goal>", 1, 1, 1, 1};
    item.props.push_back({std::nullopt, script::parse_preterm(goal, origin), origin});
    item.span = origin;
    s.apply(item);
    return s;
}

void Session::step(std::string_view text, const std::string& file) {
    SessionEvent ev;
    ev.step = std::string(text);
    try {
        auto cmds = script::parse_commands(text, file);
        auto next = std::make_shared<State>(*state_);
        for (const script::Command& c : cmds) Engine(*next, gates_).run(c);
        if (!cmds.empty()) {
            history_.push_back(state_);
            state_ = std::move(next);
        }
    } catch (const Error& e) {
        ev.ok = false;
        ev.diagnostic = e.what();
        ev.state_hash = state_hash();
        log_.push_back(std::move(ev));
        throw;
    }
    ev.state_hash = state_hash();
    log_.push_back(std::move(ev));
}

void Session::apply(const script::Command& c) {
    SessionEvent ev;
    ev.step = script::pretty(c);
    auto next = std::make_shared<State>(*state_);
    try {
        Engine(*next, gates_).run(c);
    } catch (const Error& e) {
        ev.ok = false;
        ev.diagnostic = e.what();
        ev.state_hash = state_hash();
        log_.push_back(std::move(ev));
        throw;
    }
    history_.push_back(state_);
    state_ = std::move(next);
    ev.state_hash = state_hash();
    log_.push_back(std::move(ev));
}

bool Session::undo() {
    if (history_.empty()) return false;
    state_ = history_.back();
    history_.pop_back();
    log_.push_back({"undo", true, state_hash(), ""});
    return true;
}

void Session::rollback(std::size_t d) {
    while (history_.size() > d) {
        state_ = history_.back();
        history_.pop_back();
    }
}

Session Session::replay(const std::vector<SessionEvent>& log, std::optional<GateSet> gates) {
    Session s(gates);
    for (const SessionEvent& e : log) {
        if (e.step == "undo" && e.ok) {
            s.undo();
            continue;
        }
        try {
            s.step(e.step);
        } catch (const Error&) {
        }
    }
    return s;
}

bool Session::has_theory() const { return state_->theory != nullptr; }

const TheoryState& Session::theory() const {
    if (!state_->theory) throw Error("no theory has been started");
    return *state_->theory;
}

bool Session::in_proof() const { return state_->item.has_value(); }

int Session::open_goals() const {
    if (state_->blocks.empty()) return state_->pending ? 1 : 0;
    int n = 0;
    for (const Goal& g : state_->blocks.back().goals) n += g.solved ? 0 : 1;
    return n;
}

const std::vector<script::Command>& Session::commands() const { return state_->applied; }

std::string Session::export_script() const { return script::pretty(state_->applied); }

nlohmann::json Session::state() const {
    using nlohmann::json;
    const State& st = *state_;
    json out;
    if (st.theory) {
        const TheoryState& ts = *st.theory;
        json thms = json::array();
        for (const ProvedTheorem& t : ts.theorems) {
            json j = thm_json(t.thm);
            j["name"] = t.name;
            j["keyword"] = t.keyword;
            thms.push_back(std::move(j));
        }
        out["theory"] = {{"name", ts.name}, {"imports", ts.imports}, {"gates", ts.gates.names()}};
        out["theorems"] = std::move(thms);
    } else {
        out["theory"] = nullptr;
        out["theorems"] = json::array();
    }
    if (st.item)
        out["item"] = {{"keyword", st.item->keyword}, {"name", st.item->name.value_or("")}, {"statement", show(st.item->stmt)}};
    else
        out["item"] = nullptr;
    if (st.pending) {
        json chained = json::array();
        for (const Thm& t : st.pending->chained) chained.push_back(show(t.concl()));
        out["pending"] = {{"kind", claim_kind(st.pending->kind, st.pending->keyword)},
                          {"statement", show(st.pending->target)},
                          {"chained", std::move(chained)}};
    } else {
        out["pending"] = nullptr;
    }
    json blocks = json::array();
    for (const Block& b : st.blocks) {
        json goals = json::array();
        int idx = 0;
        for (const Goal& g : b.goals) {
            json fixes = json::array(), assms = json::array();
            for (const Term& p : g.params) fixes.push_back(p.name() + " :: " + syntax::pretty_type(p.type()));
            PrettyOptions o = display_options();
            for (const Term& a : g.assms) assms.push_back(syntax::pretty(a, o));
            goals.push_back({{"index", ++idx},
                             {"fixes", std::move(fixes)},
                             {"assumes", std::move(assms)},
                             {"shows", syntax::pretty(g.concl, o)},
                             {"display", goal_text(g)},
                             {"solved", g.solved.has_value()}});
        }
        json fixes = json::array(), facts = json::array(), abbrevs = json::object(), thisj = json::array();
        for (const Term& v : b.seg.fixes) fixes.push_back(v.name() + " :: " + syntax::pretty_type(v.type()));
        for (const Fact& f : b.seg.facts) {
            json j = thm_json(f.thm);
            j["name"] = f.name.value_or("");
            facts.push_back(std::move(j));
        }
        for (const auto& [n, t] : b.seg.abbrevs) abbrevs[n] = show(t);
        for (const Thm& t : b.seg.this_) thisj.push_back(show(t.concl()));
        blocks.push_back({{"claim", {{"kind", claim_kind(b.claim.kind, b.claim.keyword)}, {"statement", show(b.claim.target)}}},
                          {"method", b.method},
                          {"goals", std::move(goals)},
                          {"fixes", std::move(fixes)},
                          {"facts", std::move(facts)},
                          {"abbrevs", std::move(abbrevs)},
                          {"this", std::move(thisj)}});
    }
    out["blocks"] = std::move(blocks);
    json current = json::array();
    if (!st.blocks.empty()) {
        for (const Goal& g : st.blocks.back().goals)
            if (!g.solved) current.push_back(goal_text(g));
    } else if (st.pending) {
        current.push_back(syntax::pretty(st.pending->target, display_options()));
    }
    out["goals"] = std::move(current);
    out["open_goals"] = open_goals();
    out["steps"] = st.applied.size();
    return out;
}

std::string Session::state_hash() const { return hash_string(state().dump()); }

std::string Session::display() const {
    const State& st = *state_;
    std::ostringstream os;
    if (!st.theory) return "no theory\n";
    if (!st.item) {
        os << "theory " << st.theory->name << " (" << st.theory->gates.to_string() << "), "
           << st.theory->theorems.size() << " theorem(s)\n";
        return os.str();
    }
    if (st.pending) {
        os << "pending " << claim_kind(st.pending->kind, st.pending->keyword) << ": " << show(st.pending->target) << "\n";
        for (const Thm& t : st.pending->chained) os << "  using " << show(t.concl()) << "\n";
    }
    if (st.blocks.empty()) return os.str();
    const Block& b = st.blocks.back();
    std::vector<std::string> facts;
    for (const Block& ob : st.blocks)
        for (const Fact& f : ob.seg.facts)
            facts.push_back((f.name ? *f.name + ": " : std::string()) + show(f.thm.concl()));
    if (!facts.empty()) {
        os << "facts:\n";
        for (const auto& f : facts) os << "  " << f << "\n";
    }
    if (!b.seg.this_.empty()) {
        os << "this:\n";
        for (const Thm& t : b.seg.this_) os << "  " << show(t.concl()) << "\n";
    }
    int n = 0, total = 0;
    for (const Goal& g : b.goals) total += g.solved ? 0 : 1;
    os << "goal (" << total << " subgoal" << (total == 1 ? "" : "s") << "):\n";
    for (const Goal& g : b.goals)
        if (!g.solved) os << " " << ++n << ". " << goal_text(g) << "\n";
    return os.str();
}

bool CheckReport::ok() const {
    if (!parsed) return false;
    for (const ItemReport& r : items)
        if (!r.ok) return false;
    return true;
}

nlohmann::json CheckReport::to_json() const {
    using nlohmann::json;
    auto span_json = [](const SourceSpan& s) {
        return json{{"line", s.line}, {"column", s.column}, {"end_line", s.end_line}, {"end_column", s.end_column}};
    };
    json items_j = json::array();
    for (const ItemReport& r : items) {
        json j{{"keyword", r.keyword}, {"name", r.name}, {"statement", r.statement}, {"ok", r.ok}, {"seconds", r.seconds}};
        if (r.ok) j["gates_used"] = r.gates.names();
        else j["error"] = {{"message", r.error}, {"span", span_json(r.span)}};
        items_j.push_back(std::move(j));
    }
    json out{{"schema", "mhl-check/1"}, {"file", file}, {"ok", ok()}, {"theory", theory}, {"imports", imports},
             {"gates", gates.names()}, {"items", std::move(items_j)}, {"seconds", seconds}};
    if (!parsed) out["error"] = {{"message", error}, {"span", span_json(error_span)}};
    return out;
}

std::string CheckReport::to_text() const {
    std::ostringstream os;
    if (!parsed) {
        os << (error_span.valid() ? error_span.to_string() : file) << ": " << error << "\n";
        return os.str();
    }
    os << file << ": theory " << theory << " imports " << imports << " " << gates.to_string() << "\n";
    for (const ItemReport& r : items) {
        std::string label = r.keyword + (r.name.empty() ? "" : " " + r.name);
        if (r.ok) {
            os << "  proved   " << label << ": " << r.statement << "  gates_used " << r.gates.to_string() << "\n";
        } else {
            os << "  FAILED   " << label << ": " << r.statement << "\n";
            os << "    " << r.span.to_string() << ": " << r.error << "\n";
        }
    }
    return os.str();
}

CheckReport check_script(std::string_view text, const std::string& file, std::optional<GateSet> gates) {
    auto t0 = std::chrono::steady_clock::now();
    CheckReport rep;
    rep.file = file;
    auto finish = [&] {
        rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return rep;
    };
    script::Script ast;
    try {
        ast = script::parse_script(text, file);
    } catch (const SpannedError& e) {
        rep.error = e.message();
        rep.error_span = e.span();
        return finish();
    } catch (const Error& e) {
        rep.error = e.what();
        return finish();
    }
    rep.theory = ast.name;
    rep.imports = ast.imports;
    Session s(gates);
    try {
        script::Command header = script::flatten(ast).front();
        s.apply(header);
    } catch (const SpannedError& e) {
        rep.error = e.message();
        rep.error_span = e.span();
        return finish();
    }
    rep.parsed = true;
    rep.gates = s.theory().gates;
    for (const script::Item& item : ast.items) {
        auto ti = std::chrono::steady_clock::now();
        ItemReport ir;
        ir.keyword = item.command.name;
        ir.name = item.command.props[0].label.value_or("");
        ir.statement = script::pretty(*item.command.props[0].term);
        ir.span = item.span;
        std::size_t mark = s.depth();
        try {
            for (const script::Command& c : script::flatten(item)) s.apply(c);
            const ProvedTheorem& t = s.theory().theorems.back();
            ir.ok = true;
            ir.gates = t.thm.gates();
            ir.statement = show(t.thm.concl());
        } catch (const SpannedError& e) {
            ir.error = e.message();
            ir.span = e.span();
            s.rollback(mark);
        } catch (const Error& e) {
            ir.error = e.what();
            s.rollback(mark);
        }
        ir.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - ti).count();
        rep.items.push_back(std::move(ir));
    }
    return finish();
}

CheckReport check_file(const std::string& path, std::optional<GateSet> gates) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        CheckReport rep;
        rep.file = path;
        rep.error = "cannot read " + path;
        return rep;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return check_script(ss.str(), path, gates);
}

}  // namespace mhl::session
