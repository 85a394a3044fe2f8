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

// Property checks shared by the unit tests and the acceptance driver. Each
// returns an empty string on agreement and a description of the first
// disagreement otherwise.

#ifndef MHL_TESTS_SUPPORT_ORACLES_HPP
#define MHL_TESTS_SUPPORT_ORACLES_HPP

#include <string>

#include "mhl/derived/theories.hpp"
#include "mhl/script/elaborate.hpp"
#include "mhl/script/preterm.hpp"
#include "mhl/syntax/pretty.hpp"
#include "named.hpp"
#include "preterm_gen.hpp"
#include "term_gen.hpp"

namespace mhl::testing {

inline std::string show(const syntax::Term& t) {
    try {
        return syntax::pretty(t);
    } catch (const std::exception& e) {
        return std::string("<unprintable: ") + e.what() + ">";
    }
}

// subst_bound against named substitution, with u allowed to mention binders
// that enclose the redex.
inline std::string subst_bound_case(TermGen& gen) {
    NamedCalculus nc;
    std::vector<Type> outer;
    for (int i = gen.pick(3); i > 0; --i) outer.push_back(gen.any_type());
    Type a = gen.any_type();
    std::vector<Type> inner = outer;
    inner.push_back(a);
    Term body = gen.term(gen.any_type(), 4, inner);
    Term u = gen.term(a, 3, outer);
    Term got = syntax::subst_bound(body, u);

    std::vector<std::pair<std::string, Type>> env;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < outer.size(); ++i) {
        env.emplace_back("_o" + std::to_string(i), outer[i]);
        names.push_back(env.back().first);
    }
    NamedPtr nu = nc.from_term(u, env);
    env.emplace_back("_hole", a);
    NamedPtr nbody = nc.from_term(body, env);
    Term want = nc.to_term(nc.subst(nbody, "_hole", nu), names);
    if (got == want) return {};
    return "subst_bound(" + show(body) + ", " + show(u) + ") gave " + show(got) + ", reference " + show(want);
}

inline std::string normalize_case(TermGen& gen) {
    NamedCalculus nc;
    Term t = gen.term(gen.any_type(), 5);
    Term got = syntax::normalize(t);
    Term want = nc.to_term(nc.normalize(nc.from_term(t)));
    if (got == want) return {};
    return "normalize(" + show(t) + ") gave " + show(got) + ", reference " + show(want);
}

inline std::string instantiate_case(TermGen& gen) {
    NamedCalculus nc;
    Term t = gen.term(gen.any_type(), 4);
    syntax::TermSubst s;
    std::map<std::string, NamedPtr> ns;
    for (const Term& v : TermGen::frees()) {
        if (gen.pick(3) != 0) continue;
        Term r = gen.term(v.type(), 3);
        s.emplace_back(v, r);
        ns[v.name()] = nc.from_term(r);
    }
    Term got = syntax::instantiate(t, {}, s);
    Term want = nc.to_term(nc.subst_all(nc.from_term(t), ns));
    if (syntax::normalize(got) == syntax::normalize(want)) return {};
    return "instantiate(" + show(t) + ") gave " + show(got) + ", reference " + show(want);
}

// Surface syntax: parse_preterm(pretty(t)) == t.
inline std::string preterm_round_trip_case(PreTermGen& gen) {
    script::PreTermPtr t = gen.term(5);
    std::string text = script::pretty(*t);
    try {
        script::PreTermPtr back = script::parse_preterm(text);
        if (*back == *t) return {};
        return "reparse of `" + text + "` printed as `" + script::pretty(*back) + "`";
    } catch (const std::exception& e) {
        return "`" + text + "` failed to parse: " + e.what();
    }
}

// Typed terms: elaborate(parse(pretty(t))) == t with type annotations on.
inline std::string term_round_trip_case(TermGen& gen, const kernel::Theory& thy) {
    Term t = gen.term(gen.any_type(), 5);
    syntax::PrettyOptions opts;
    opts.annotate_types = true;
    std::string text = syntax::pretty(t, opts);
    try {
        script::ElabContext ctx;
        ctx.theory = &thy;
        Term back = script::parse_term(text, ctx);
        if (back == t) return {};
        return "`" + text + "` came back as `" + syntax::pretty(back, opts) + "`";
    } catch (const std::exception& e) {
        return "`" + text + "` failed: " + e.what();
    }
}

}  // namespace mhl::testing

#endif
