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

#include "mhl/derived/rule.hpp"

#include <algorithm>

#include "mhl/error.hpp"
#include "mhl/syntax/pretty.hpp"

namespace mhl::derived {

using kernel::Kernel;

namespace {

void collect_free_ordered(const Term& t, std::vector<Term>& out) {
    if (!t.has_free_vars()) return;
    switch (t.kind()) {
        case Term::Kind::Free:
            if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
            break;
        case Term::Kind::App:
            collect_free_ordered(t.fun(), out);
            collect_free_ordered(t.arg(), out);
            break;
        case Term::Kind::Abs: collect_free_ordered(t.body(), out); break;
        default: break;
    }
}

Thm discharged(const Theory& thy, const Rule& r) {
    Thm th = r.thm;
    for (std::size_t i = r.premises.size(); i-- > 0;) th = Kernel::imp_intro(thy, r.premises[i], th);
    if (!th.hyps().empty()) throw KernelError("rule " + r.name + " has an undeclared hypothesis");
    return th;
}

}  // namespace

std::vector<Term> Rule::vars() const {
    std::vector<Term> out;
    for (const Term& p : premises) collect_free_ordered(p, out);
    collect_free_ordered(thm.concl(), out);
    return out;
}

std::set<Term> Rule::schematic() const {
    auto v = vars();
    return {v.begin(), v.end()};
}

std::string Rule::statement() const {
    syntax::PrettyOptions o;
    o.eta_expand = true;
    std::string out;
    if (!premises.empty()) {
        out = "⟦";
        for (std::size_t i = 0; i < premises.size(); ++i) out += (i ? "; " : "") + syntax::pretty(premises[i], o);
        out += "⟧ ⟹ ";
    }
    return out + syntax::pretty(thm.concl(), o);
}

Rule make_rule(const Theory& thy, std::string name, const Thm& thm, std::vector<Term> premises,
               std::vector<PremiseShape> shapes, GateSet required, RuleKind kind, std::string doc) {
    for (Term& p : premises) p = syntax::normalize(p);
    for (const Term& h : thm.hyps())
        if (std::find(premises.begin(), premises.end(), h) == premises.end())
            throw KernelError("rule " + name + ": hypothesis " + syntax::pretty(h) + " is not a premise");
    if (shapes.size() < premises.size()) shapes.resize(premises.size());
    std::set<std::string> tvs;
    for (const Term& p : premises) syntax::collect_type_vars(p, tvs);
    syntax::collect_type_vars(thm.concl(), tvs);
    syntax::TypeSubst ren;
    for (const auto& v : tvs)
        if (v.empty() || v[0] != '?') ren.emplace(v, Type::var(syntax::variant_name("?" + v, tvs)));
    Thm th = ren.empty() ? thm : Kernel::inst_thm(thy, thm, ren, {});
    if (!ren.empty())
        for (Term& p : premises) p = syntax::normalize(syntax::instantiate(p, ren, {}));
    return Rule{std::move(name), th, std::move(premises), std::move(shapes), required, kind, std::move(doc)};
}

Rule theorem_rule(const Theory& thy, const std::string& name, const Thm& thm) {
    return make_rule(thy, name, thm, thm.hyps(), {}, thm.gates(), RuleKind::Other, "theorem");
}

RuleInstance instance_of(const Rule& r, const Instantiation& inst) {
    RuleInstance out{{}, syntax::normalize(syntax::instantiate(r.concl(), inst.types, inst.terms))};
    for (const Term& p : r.premises)
        out.premises.push_back(syntax::normalize(syntax::instantiate(p, inst.types, inst.terms)));
    return out;
}

Thm apply_rule(const Theory& thy, const Rule& r, const Instantiation& inst, const std::vector<Thm>& facts) {
    if (facts.size() != r.premises.size())
        throw KernelError("rule " + r.name + " expects " + std::to_string(r.premises.size()) + " premises");
    Thm th = Kernel::inst_thm(thy, discharged(thy, r), inst.types, inst.terms);
    for (const Thm& f : facts) th = Kernel::imp_elim(th, f);
    return th;
}

Thm instantiate_rule(const Theory& thy, const Rule& r, const Instantiation& inst) {
    RuleInstance ri = instance_of(r, inst);
    std::vector<Thm> facts;
    for (const Term& p : ri.premises) facts.push_back(Kernel::assume(thy, p));
    return apply_rule(thy, r, inst, facts);
}

namespace {

constexpr char kInternal = '\x01';

Term rename_free(const Term& t, const TermSubst& s) {
    if (!t.has_free_vars()) return t;
    switch (t.kind()) {
        case Term::Kind::Free:
            for (const auto& [k, v] : s)
                if (k == t) return v;
            return t;
        case Term::Kind::App: return Term::app(rename_free(t.fun(), s), rename_free(t.arg(), s));
        case Term::Kind::Abs: return Term::abs(t.name(), t.type(), rename_free(t.body(), s));
        default: return t;
    }
}

}  // namespace

std::optional<Instantiation> match_rule(const Rule& r, const std::vector<std::pair<std::size_t, Term>>& premise_targets,
                                        const std::optional<Term>& concl_target, const Instantiation& seed) {
    // Rename type and term variables to names no target can contain.
    std::set<std::string> tvs;
    for (const Term& p : r.premises) syntax::collect_type_vars(p, tvs);
    syntax::collect_type_vars(r.concl(), tvs);
    syntax::TypeSubst tren;
    std::set<std::string> internal_types;
    for (const auto& v : tvs) {
        std::string n = std::string(1, kInternal) + v;
        tren.emplace(v, Type::var(n));
        internal_types.insert(n);
    }
    TermSubst ren;
    std::set<Term> internal_vars;
    for (const Term& v : r.vars()) {
        Term iv = Term::free(std::string(1, kInternal) + v.name(), syntax::apply(tren, v.type()));
        ren.emplace_back(v, iv);
        internal_vars.insert(iv);
    }
    // instantiate() renames the types of the variables too, so look them up
    // by their renamed-type form.
    TermSubst ren_typed;
    for (const auto& [v, iv] : ren) ren_typed.emplace_back(Term::free(v.name(), iv.type()), iv);
    auto rename_all = [&](const Term& t) { return rename_free(syntax::instantiate(t, tren, {}), ren_typed); };

    Instantiation iseed;
    for (const auto& [k, v] : seed.types) iseed.types.emplace(std::string(1, kInternal) + k, v);
    for (const auto& [k, v] : seed.terms) {
        auto it = std::find_if(ren.begin(), ren.end(), [&](const auto& e) { return e.first == k; });
        if (it == ren.end()) continue;
        iseed.terms.emplace_back(it->second, v);
        if (!syntax::match_type(it->second.type(), syntax::type_of(v), iseed.types)) return std::nullopt;
    }

    std::vector<std::pair<Term, Term>> problems;
    if (concl_target) problems.emplace_back(rename_all(r.concl()), syntax::normalize(*concl_target));
    for (const auto& [i, t] : premise_targets) {
        if (i >= r.premises.size()) return std::nullopt;
        problems.emplace_back(rename_all(r.premises[i]), syntax::normalize(t));
    }
    auto res = match_all(internal_vars, internal_types, problems, iseed);
    if (!res) return std::nullopt;

    Instantiation out;
    for (const auto& [k, v] : res->types)
        if (!k.empty() && k[0] == kInternal) out.types.emplace(k.substr(1), v);
    for (const auto& [k, v] : res->terms) {
        auto it = std::find_if(ren.begin(), ren.end(), [&](const auto& e) { return e.second == k; });
        if (it != ren.end()) out.terms.emplace_back(it->first, v);
    }
    return out;
}

Instantiation explicit_instantiation(const Theory& thy, const Rule& r,
                                     const std::vector<std::pair<std::string, Term>>& named) {
    Instantiation inst;
    auto vars = r.vars();
    for (const auto& [n, val] : named) {
        std::string want = !n.empty() && n[0] == '?' ? n : "?" + n;
        auto it = std::find_if(vars.begin(), vars.end(), [&](const Term& v) { return v.name() == want || v.name() == n; });
        if (it == vars.end()) throw Error("rule " + r.name + " has no variable " + n);
        Type ty = thy.type_of(val);
        if (!syntax::match_type(it->type(), ty, inst.types))
            throw TypeError("cannot instantiate " + it->name() + " :: " + it->type().to_string() + " with a term of type " +
                            ty.to_string());
        inst.terms.emplace_back(*it, syntax::normalize(val));
    }
    return inst;
}

}  // namespace mhl::derived
