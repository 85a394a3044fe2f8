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

#ifndef MHL_FOL_SEMANTICS_HPP
#define MHL_FOL_SEMANTICS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mhl/fol/formula.hpp"

namespace mhl::fol {

// Tables are indexed in mixed radix over the argument values, first argument
// most significant.
struct FunctionTable {
    std::size_t arity = 0;
    std::vector<std::uint32_t> values;
};

struct PredicateTable {
    std::size_t arity = 0;
    std::vector<bool> values;
};

struct Model {
    std::uint32_t size = 1;
    std::map<std::string, FunctionTable> functions;
    std::map<std::string, PredicateTable> predicates;
    // Values of loose indices: env[0] interprets #0.
    std::vector<std::uint32_t> env;

    std::string to_string() const;
};

// Tarski semantics. Throws Error on a missing symbol, an arity mismatch or an
// index outside the environment.
bool eval(const Model& m, const FolFormula& p);
std::uint32_t eval(const Model& m, const FolTerm& t, const std::vector<std::uint32_t>& env);

enum class Exec { Serial, Parallel };

// All models over a signature with a fixed domain size and environment
// length, numbered 0..count()-1.
class ModelSpace {
public:
    ModelSpace(FolSignature sig, std::uint32_t size, std::size_t env_len);

    std::uint64_t count() const { return count_; }
    Model decode(std::uint64_t index) const;

private:
    FolSignature sig_;
    std::uint32_t size_;
    std::size_t env_len_;
    std::uint64_t count_ = 1;
};

// Smallest-numbered model in which `p` is false, trying sizes 1..max_size in
// order. Both execution modes return the same model.
std::optional<Model> countermodel(const FolFormula& p, std::uint32_t max_size, Exec exec = Exec::Parallel);

// Number of models of the given size in which `p` is false (benchmarks and
// cross-checks).
std::uint64_t count_countermodels(const FolFormula& p, std::uint32_t size, Exec exec);

// z1 ⟶ ... ⟶ zk ⟶ p
FolFormula close_sequent(const FolSequent& s);

}  // namespace mhl::fol

#endif
