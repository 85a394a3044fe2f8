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

#ifndef MHL_IMP_PROVER_HPP
#define MHL_IMP_PROVER_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mhl/fol/hilbert.hpp"
#include "mhl/fol/proof.hpp"

namespace mhl::imp {

// Implication-only propositional formulas.
class ImpFormula {
public:
    static ImpFormula atom(std::string name);
    static ImpFormula imp(ImpFormula lhs, ImpFormula rhs);

    bool is_atom() const;
    const std::string& name() const;
    const ImpFormula& lhs() const;
    const ImpFormula& rhs() const;
    std::size_t connectives() const;

    friend bool operator==(const ImpFormula& a, const ImpFormula& b);

private:
    struct Node;
    explicit ImpFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

std::string to_string(const ImpFormula& f);
// Accepts atoms, parentheses and -> / --> / ⟶ (right associative).
ImpFormula parse(std::string_view text);
std::vector<std::string> atoms(const ImpFormula& f);

using Valuation = std::map<std::string, bool>;
bool eval(const ImpFormula& f, const Valuation& v);
// Truth-table oracle.
bool taut(const ImpFormula& f);

fol::FolFormula to_fol(const ImpFormula& f);
// Inverse of to_fol; nullopt when the formula leaves the fragment.
std::optional<ImpFormula> from_fol(const fol::FolFormula& f);

struct ProveResult {
    fol::AxProof proof;                      // set when the formula is a tautology
    std::optional<Valuation> countervaluation;  // set otherwise
    explicit operator bool() const { return proof != nullptr; }
};

// Proof over AK, AT, MP and PR, or a falsifying valuation.
ProveResult prove(const ImpFormula& f);

// Classical sequent search behind `prove`, open to any formula of the
// fol-deep language: non-implications are opaque atoms and ⊥ on the left
// closes a branch through AX. Returns a proof of `goal` from `hyps`, or null.
fol::AxProof prove_from(const std::vector<fol::FolFormula>& hyps, const fol::FolFormula& goal);

// Re-exported for the imp-prover surface.
inline fol::AxProof deduction_theorem(const fol::AxProof& proof, const fol::FolFormula& chi) {
    return fol::deduction_theorem(proof, chi);
}

// `a=0 b=1` rendering of a countervaluation.
std::string to_string(const Valuation& v);

// ---------------------------------------------------------------------------
// Exhaustive enumeration: formulas with at most `max_connectives` implications
// over the first `atom_count` atoms p, q, r, s, ..., ordered by size.

class FormulaSpace {
public:
    FormulaSpace(std::size_t max_connectives, std::size_t atom_count);
    std::uint64_t count() const { return total_; }
    ImpFormula at(std::uint64_t index) const;

private:
    ImpFormula unrank(std::size_t n, std::uint64_t index) const;

    std::size_t max_;
    std::vector<std::string> atoms_;
    std::vector<std::uint64_t> by_size_;  // formulas with exactly n connectives
    std::uint64_t total_ = 0;
};

enum class Exec { Serial, Parallel };

struct SweepReport {
    std::uint64_t formulas = 0;
    std::uint64_t tautologies = 0;
    std::uint64_t proved = 0;
    std::uint64_t refuted = 0;
    std::uint64_t disagreements = 0;   // prove and taut differ
    std::uint64_t check_failures = 0;  // emitted proof rejected, or bad countervaluation
    std::optional<std::uint64_t> first_failure;
    std::string first_failure_detail;
    double seconds = 0;
};

// prove + ax_check against taut on every formula of the space.
SweepReport sweep(const FormulaSpace& space, Exec exec, bool check_proofs = true);

}  // namespace mhl::imp

#endif
