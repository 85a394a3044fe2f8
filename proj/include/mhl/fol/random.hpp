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

#ifndef MHL_FOL_RANDOM_HPP
#define MHL_FOL_RANDOM_HPP

#include <cstdint>
#include <random>

#include "mhl/fol/proof.hpp"

namespace mhl::fol {

struct GeneratedProof {
    FolSequent claim;
    NdProof proof;
};

// Random well-formed ND derivations, built bottom-up from rule templates so
// every rule (ImpC included) shows up. Signature: constants a b, function
// f/1, predicates P/0 Q/0 R/1 S/2; eigenconstants are e1, e2, ...
class ProofGenerator {
public:
    explicit ProofGenerator(std::uint64_t seed, int depth = 4) : rng_(seed), depth_(depth) {}
    GeneratedProof next();

private:
    struct Result {
        FolFormula goal;
        NdProof proof;
    };
    Result gen(int depth, const std::vector<FolFormula>& ctx);
    FolFormula random_formula(int depth);
    FolTerm random_term(int depth);
    int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

    std::mt19937_64 rng_;
    int depth_;
    int eigen_counter_ = 0;
    std::vector<std::string> eigen_;
};

}  // namespace mhl::fol

#endif
