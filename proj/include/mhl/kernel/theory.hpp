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

#ifndef MHL_KERNEL_THEORY_HPP
#define MHL_KERNEL_THEORY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mhl/kernel/gates.hpp"
#include "mhl/syntax/signature.hpp"

namespace mhl::kernel {

using syntax::Signature;
using syntax::Term;
using syntax::Type;

// Signature, definitions and enabled gates. Extension never mutates an
// existing Theory: every extending operation returns a new value.
class Theory {
public:
    // `imp`, `All`, `undefined` and Leibniz `eq`; CORE enabled. Equality is
    // fixed here because the EXT and COMPREHENSION axioms are stated with it.
    static Theory bootstrap();

    const Signature& signature() const { return sig_; }
    GateSet gates() const { return gates_; }
    bool enabled(Gate g) const { return gates_.contains(g); }

    bool is_defined(const std::string& name) const { return defs_.count(name) != 0; }
    std::optional<Term> definition(const std::string& name) const;
    const std::vector<std::string>& definition_order() const { return def_order_; }

    // Enabling a gate also declares the constants its axioms talk about.
    Theory with_gate(Gate g) const;
    Theory with_gates(GateSet gs) const;

    // Replace every defined constant by its (type-instantiated) definiens,
    // repeatedly. Definitions are acyclic, so this terminates.
    Term unfold_all(const Term& t) const;

    // Type of a closed or free-variable term; throws TypeError.
    Type type_of(const Term& t) const { return syntax::infer_type(sig_, t); }

private:
    friend class Kernel;
    Signature sig_;
    std::map<std::string, Term> defs_;
    std::vector<std::string> def_order_;
    GateSet gates_ = GateSet::core();
};

}  // namespace mhl::kernel

#endif
