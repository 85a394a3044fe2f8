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

// Serial against OpenMP timings for the two parallel kernels: the
// implicational sweep and countermodel counting. Results must agree.

#include <chrono>
#include <cstdio>
#include <iostream>

#include "CLI11.hpp"
#include "mhl/fol/parse.hpp"
#include "mhl/fol/semantics.hpp"
#include "mhl/imp/prover.hpp"

#ifdef MHL_HAVE_OPENMP
#include <omp.h>
#endif

namespace {

template <class F>
double timed(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const std::string& what, double serial, double parallel, bool agree) {
    std::printf("%-44s %9.3f %9.3f %7.2fx  %s\n", what.c_str(), serial, parallel, serial / parallel,
                agree ? "agree" : "DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs parallel kernels"};
    std::size_t connectives = 6;
    std::size_t atoms = 3;
    std::uint32_t model_size = 3;
    bool check = true;
    app.add_option("--connectives", connectives, "sweep: maximum connectives");
    app.add_option("--atoms", atoms, "sweep: atom count");
    app.add_option("--model-size", model_size, "countermodels: domain size");
    app.add_flag("!--no-check", check, "sweep: skip proof checking");
    CLI11_PARSE(app, argc, argv);

    int threads = 1;
#ifdef MHL_HAVE_OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("threads: %d\n%-44s %9s %9s %8s\n", threads, "kernel", "serial s", "omp s", "speedup");
    bool all_agree = true;

    mhl::imp::FormulaSpace space(connectives, atoms);
    mhl::imp::SweepReport s, p;
    double ts = timed([&] { s = mhl::imp::sweep(space, mhl::imp::Exec::Serial, check); });
    double tp = timed([&] { p = mhl::imp::sweep(space, mhl::imp::Exec::Parallel, check); });
    bool agree = s.tautologies == p.tautologies && s.proved == p.proved && s.check_failures == p.check_failures;
    all_agree = all_agree && agree;
    row("imp sweep, " + std::to_string(space.count()) + " formulas", ts, tp, agree);

    for (const char* text : {"(∀x. ¬ r x ⟶ r (f x)) ⟶ (∃x. r x ∧ r (f (f x)))",
                             "(∀x. ∀y. R x y ⟶ R y x) ⟶ R a b ⟶ R b a",
                             "(∀x. P x ⟶ Q (g x x)) ⟶ P c ⟶ Q (g c c)"}) {
        auto f = mhl::fol::parse_formula(text);
        std::uint64_t cs = 0, cp = 0;
        double a = timed([&] { cs = mhl::fol::count_countermodels(f, model_size, mhl::fol::Exec::Serial); });
        double b = timed([&] { cp = mhl::fol::count_countermodels(f, model_size, mhl::fol::Exec::Parallel); });
        all_agree = all_agree && cs == cp;
        std::string label = text;
        if (label.size() > 30) label = label.substr(0, 30) + "...";
        row("models size " + std::to_string(model_size) + ": " + label, a, b, cs == cp);
    }
    return all_agree ? 0 : 1;
}
