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

#ifndef MHL_SYNTAX_SIGNATURE_HPP
#define MHL_SYNTAX_SIGNATURE_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mhl/syntax/term.hpp"
#include "mhl/syntax/type.hpp"

namespace mhl::syntax {

// Constant and type-constructor declarations. A constant is stored at its
// most general type; every occurrence must be an instance of it.
class Signature {
public:
    Signature();

    // Throws TypeError on a duplicate name.
    void add_constant(const std::string& name, Type type);
    void add_type_constructor(const std::string& name, std::size_t arity);

    bool has_constant(const std::string& name) const { return constants_.count(name) != 0; }
    bool has_type_constructor(const std::string& name) const { return tycons_.count(name) != 0; }
    std::optional<Type> constant_type(const std::string& name) const;
    std::optional<std::size_t> arity(const std::string& name) const;

    const std::map<std::string, Type>& constants() const { return constants_; }
    const std::map<std::string, std::size_t>& type_constructors() const { return tycons_; }

    // Type well-formedness: every constructor declared with the right arity.
    void check_type(const Type& t) const;

private:
    std::map<std::string, Type> constants_;
    std::map<std::string, std::size_t> tycons_;
};

// Unique type of `t` in binder context `ctx` (innermost last), checking every
// constant against `sig`. The error message names the offending subterm.
Type infer_type(const Signature& sig, std::span<const Type> ctx, const Term& t);
inline Type infer_type(const Signature& sig, const Term& t) { return infer_type(sig, {}, t); }

}  // namespace mhl::syntax

#endif
