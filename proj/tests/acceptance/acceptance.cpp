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

// Acceptance driver: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Runs from the build tree under ctest.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "hol_eval.hpp"
#include "mhl/derived/catalog.hpp"
#include "mhl/derived/theories.hpp"
#include "mhl/fol/proof.hpp"
#include "mhl/fol/random.hpp"
#include "mhl/fol/semantics.hpp"
#include "mhl/fol/translate.hpp"
#include "mhl/imp/prover.hpp"
#include "mhl/script/ast.hpp"
#include "mhl/session/engine.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using namespace mhl;
using kernel::Gate;
using kernel::GateSet;

namespace {

const fs::path kRoot = MHL_SOURCE_DIR;

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Outcome {
    bool ok = true;
    std::string detail;
    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

double since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

// -----------------------------------------------------------------------------

Outcome corpus_replay() {
    Outcome out;
    double slowest = 0;
    for (const char* name : {"bicond.mhl", "cantor.mhl", "grandfather.mhl"}) {
        auto t0 = std::chrono::steady_clock::now();
        auto r = session::check_file((kRoot / "corpus" / name).string());
        double secs = since(t0);
        slowest = std::max(slowest, secs);
        if (!r.ok()) out.fail(std::string(name) + " does not check: " + r.to_text());
        if (secs >= 1.0) out.fail(std::string(name) + " took " + fmt(secs) + " s");
    }
    auto cantor = session::check_file((kRoot / "corpus" / "cantor.mhl").string(), GateSet::core());
    if (!cantor.ok()) out.fail("cantor fails with the core gate only");
    for (const auto& item : cantor.items)
        if (!(item.gates == GateSet::core())) out.fail("cantor used " + item.gates.to_string());

    auto gf_path = (kRoot / "corpus" / "grandfather.mhl").string();
    auto gf = session::check_file(gf_path);
    if (!GateSet::classical().subset_of(gf.gates)) out.fail("grandfather header is not classical");
    if (gf.items.empty() || !gf.items[0].gates.contains(Gate::Choice))
        out.fail("grandfather theorem does not record CHOICE");
    auto gf_core = session::check_file(gf_path, GateSet::core());
    if (gf_core.ok()) out.fail("grandfather checks without the classical gates");
    if (out.ok) out.detail = "3 scripts, slowest " + fmt(slowest) + " s; cantor {CORE}; grandfather needs classical";
    return out;
}

Outcome derived_rules() {
    Outcome out;
    const std::vector<std::string> intuitionistic = {
        "Falsity_E", "Neg_I",   "Neg_E",  "Truth_I", "Conj_I", "Conj_E1", "Conj_E2", "Disj_I1", "Disj_I2",
        "Disj_E",    "Ex_I",    "Ex_E",   "Subst",   "Subst_sym", "Refl", "Sym",   "Trans"};
    const std::vector<std::pair<std::string, GateSet>> classical = {
        {"Iff_I", GateSet::core() | Gate::Ext},
        {"Extension", GateSet::core() | Gate::Ext},
        {"Choice", GateSet::core() | Gate::Choice},
        {"Imp_C", GateSet::classical()},
        {"LEM", GateSet::classical()},
        {"classical", GateSet::classical()},
        {"ccontr", GateSet::classical()}};

    derived::RuleCatalog core(derived::standard_theory());
    derived::RuleCatalog full(derived::standard_theory(GateSet::classical()));
    testing::HolModel model(2);
    int sound = 0;
    auto semantic = [&](const std::string& name, const kernel::Thm& th) {
        try {
            if (!model.valid(th.hyps(), th.concl())) out.fail(name + " fails in a two-element model");
            ++sound;
        } catch (const testing::Unsupported&) {
        }
    };
    for (const auto& name : intuitionistic) {
        try {
            auto th = core.derive(name);
            if (!(th.gates() == GateSet::core())) out.fail(name + " used " + th.gates().to_string());
            semantic(name, th);
        } catch (const std::exception& e) {
            out.fail(name + ": " + e.what());
        }
    }
    for (const auto& [name, gates] : classical) {
        if (core.find(name)) out.fail(name + " is available with the core gate");
        try {
            bool is_classical = name == "Imp_C" || name == "LEM" || name == "classical" || name == "ccontr";
            auto th = is_classical ? full.derive_classical(name) : full.derive(name);
            if (!(th.gates() == gates)) out.fail(name + " used " + th.gates().to_string());
            semantic(name, th);
        } catch (const std::exception& e) {
            out.fail(name + ": " + e.what());
        }
    }
    if (out.ok)
        out.detail = std::to_string(intuitionistic.size()) + " core + " + std::to_string(classical.size()) +
                     " gated rules; " + std::to_string(sound) + " also valid in the 2-element model";
    return out;
}

Outcome imp_sweep() {
    Outcome out;
    imp::FormulaSpace space(7, 3);
    // Σ Catalan(k)·3^(k+1), k = 0..7
    if (space.count() != 3137844) out.fail("space has " + std::to_string(space.count()) + " formulas");
    auto report = imp::sweep(space, imp::Exec::Parallel, true);

    // Tautology count from a truth table evaluated here.
    std::uint64_t tauts = 0;
    std::function<bool(const imp::ImpFormula&, unsigned)> ev = [&](const imp::ImpFormula& f, unsigned v) {
        if (f.is_atom()) return ((v >> (f.name() == "p" ? 0 : f.name() == "q" ? 1 : 2)) & 1u) != 0;
        return !ev(f.lhs(), v) || ev(f.rhs(), v);
    };
    for (std::uint64_t i = 0; i < space.count(); ++i) {
        imp::ImpFormula f = space.at(i);
        bool t = true;
        for (unsigned v = 0; v < 8 && t; ++v) t = ev(f, v);
        tauts += t;
    }
    if (report.formulas != space.count()) out.fail("sweep visited " + std::to_string(report.formulas));
    if (report.disagreements) out.fail(std::to_string(report.disagreements) + " disagreements");
    if (report.check_failures) out.fail(std::to_string(report.check_failures) + " check failures: " +
                                        report.first_failure_detail);
    if (report.tautologies != tauts || report.proved != tauts)
        out.fail("tautologies " + std::to_string(report.tautologies) + ", proved " + std::to_string(report.proved) +
                 ", truth table " + std::to_string(tauts));
    if (out.ok)
        out.detail = std::to_string(report.formulas) + " formulas, " + std::to_string(tauts) +
                     " tautologies proved and checked, " + fmt(report.seconds) + " s";
    return out;
}

struct FolCorpus {
    std::vector<std::pair<std::string, fol::NdDocument>> nd;
    std::vector<std::pair<std::string, fol::AxDocument>> ax;
};

FolCorpus load_fol_corpus() {
    FolCorpus c;
    std::vector<fs::path> paths;
    for (const auto& e : fs::directory_iterator(kRoot / "corpus" / "fol")) paths.push_back(e.path());
    std::sort(paths.begin(), paths.end());
    for (const auto& p : paths) {
        std::string text = slurp(p);
        if (p.extension() == ".nd") c.nd.emplace_back(p.filename().string(), fol::read_nd(text, p.string()));
        if (p.extension() == ".ax") c.ax.emplace_back(p.filename().string(), fol::read_ax(text, p.string()));
    }
    return c;
}

Outcome fol_soundness() {
    Outcome out;
    FolCorpus corpus = load_fol_corpus();
    std::vector<std::pair<std::string, fol::FolSequent>> claims;
    for (const auto& [name, doc] : corpus.nd) {
        if (!fol::nd_check(doc.proof, doc.claim)) out.fail(name + " is rejected");
        claims.emplace_back(name, doc.claim);
    }
    for (const auto& [name, doc] : corpus.ax) {
        if (!fol::ax_check(doc.proof, doc.goal, doc.hyps)) out.fail(name + " is rejected");
        claims.emplace_back(name, fol::FolSequent{doc.hyps, doc.goal});
    }
    int generated = 0;
    fol::ProofGenerator gen(20240611, 4);
    for (int i = 0; i < 200; ++i) {
        auto g = gen.next();
        auto r = fol::nd_check(g.proof, g.claim);
        if (!r) {
            out.fail("generated proof " + std::to_string(i) + " rejected: " + r.diagnostic);
            continue;
        }
        claims.emplace_back("generated #" + std::to_string(i), g.claim);
        ++generated;
    }
    std::uint64_t models = 0;
    for (const auto& [name, claim] : claims) {
        fol::FolFormula closed = fol::close_sequent(claim);
        fol::FolSignature sig;
        sig.add(closed);
        for (std::uint32_t n = 1; n <= 3; ++n) {
            std::uint64_t bad = fol::count_countermodels(closed, n, fol::Exec::Parallel);
            if (bad) out.fail(name + ": " + std::to_string(bad) + " countermodels of size " + std::to_string(n));
            models += fol::ModelSpace(sig, n, 0).count();
        }
    }
    if (out.ok)
        out.detail = std::to_string(claims.size() - generated) + " corpus + " + std::to_string(generated) +
                     " generated derivations, " + std::to_string(models) + " models, no violations";
    return out;
}

Outcome translation() {
    Outcome out;
    FolCorpus corpus = load_fol_corpus();
    int n = 0;
    for (const auto& [name, doc] : corpus.nd) {
        try {
            fol::FolFormula closed = fol::close_sequent(doc.claim);
            auto ax = fol::nd_to_ax(doc.proof, doc.claim);
            if (!fol::ax_check(ax, closed)) out.fail(name + ": translated proof is rejected");
            auto open = fol::nd_to_ax_open(doc.proof, doc.claim);
            if (!fol::ax_check(open, doc.claim.goal, doc.claim.assumptions))
                out.fail(name + ": open translation is rejected");
            auto back = fol::ax_to_nd(ax, closed);
            if (!fol::nd_check(back, {{}, closed})) out.fail(name + ": round trip is rejected");
            ++n;
        } catch (const std::exception& e) {
            out.fail(name + ": " + e.what());
        }
    }
    for (const auto& [name, doc] : corpus.ax) {
        try {
            fol::FolSequent claim{doc.hyps, doc.goal};
            auto nd = fol::ax_to_nd(doc.proof, doc.goal, doc.hyps);
            if (!fol::nd_check(nd, claim)) out.fail(name + ": translated proof is rejected");
            auto back = fol::nd_to_ax_open(nd, claim);
            if (!fol::ax_check(back, doc.goal, doc.hyps)) out.fail(name + ": round trip is rejected");
            ++n;
        } catch (const std::exception& e) {
            out.fail(name + ": " + e.what());
        }
    }
    if (out.ok) out.detail = std::to_string(n) + " corpus proofs translated both ways and re-checked";
    return out;
}

Outcome substitution() {
    Outcome out;
    testing::TermGen gen(0x5eed);
    int cases = 0;
    for (int i = 0; i < 1000; ++i) {
        for (auto* check : {&testing::subst_bound_case, &testing::normalize_case, &testing::instantiate_case}) {
            std::string diff = check(gen);
            if (!diff.empty()) out.fail(diff);
            ++cases;
        }
    }
    if (out.ok) out.detail = std::to_string(cases) + " cases (subst_bound, normalize, instantiate), all agree";
    return out;
}

Outcome parser_round_trip() {
    Outcome out;
    testing::PreTermGen pgen(0xabc);
    testing::TermGen tgen(0xdef);
    auto thy = derived::standard_theory(GateSet::full());
    for (int i = 0; i < 1000; ++i) {
        std::string d1 = testing::preterm_round_trip_case(pgen);
        if (!d1.empty()) out.fail(d1);
        std::string d2 = testing::term_round_trip_case(tgen, thy);
        if (!d2.empty()) out.fail(d2);
    }
    int scripts = 0;
    for (const char* dir : {"corpus", "exercises"})
        for (const auto& e : fs::directory_iterator(kRoot / dir)) {
            if (e.path().extension() != ".mhl") continue;
            try {
                auto s = script::parse_script(slurp(e.path()), e.path().string());
                if (!(script::parse_script(script::pretty(s), "printed") == s))
                    out.fail(e.path().filename().string() + " changes under print and parse");
            } catch (const std::exception& ex) {
                out.fail(e.path().filename().string() + ": " + ex.what());
            }
            ++scripts;
        }
    if (out.ok) out.detail = "1000 surface trees, 1000 typed terms, " + std::to_string(scripts) + " scripts";
    return out;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"corpus-replay", corpus_replay},         {"derived-rules", derived_rules},
        {"imp-completeness-sweep", imp_sweep},    {"fol-soundness", fol_soundness},
        {"calculus-translation", translation},    {"substitution-oracle", substitution},
        {"parser-round-trip", parser_round_trip}};
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::cout << (o.ok ? "PASS " : "FAIL ") << name << " (" << fmt(since(t0)) << " s): " << o.detail << std::endl;
        failed += !o.ok;
    }
    return failed == 0 ? 0 : 1;
}
