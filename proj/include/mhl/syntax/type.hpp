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

#ifndef MHL_SYNTAX_TYPE_HPP
#define MHL_SYNTAX_TYPE_HPP

#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace mhl::syntax {

inline constexpr const char* kBoolName = "bool";
inline constexpr const char* kIndName = "ind";
inline constexpr const char* kFunName = "fun";

// Simple types: schematic type variables ('a) and applied type constructors.
// `bool`, `ind` and `fun` are the built-in constructors; everything else is
// declared in a Signature. Values are immutable and cheap to copy.
class Type {
public:
    enum class Kind : unsigned char { Var, Con };

    static Type var(std::string name);
    static Type con(std::string name, std::vector<Type> args = {});
    static Type boolean();
    static Type ind();
    static Type fun(Type domain, Type codomain);
    // a1 => a2 => ... => result
    static Type fun(std::span<const Type> domains, Type result);

    Kind kind() const;
    bool is_var() const { return kind() == Kind::Var; }
    bool is_con() const { return kind() == Kind::Con; }
    bool is_fun() const;
    bool is_bool() const;

    // Variable name (without quote) or constructor name.
    const std::string& name() const;
    std::span<const Type> args() const;
    Type domain() const;    // requires is_fun()
    Type codomain() const;  // requires is_fun()

    std::size_t hash() const;
    friend bool operator==(const Type& a, const Type& b);
    friend bool operator<(const Type& a, const Type& b);

    std::string to_string() const;

private:
    struct Node;
    explicit Type(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

using TypeSubst = std::map<std::string, Type>;

Type apply(const TypeSubst& s, const Type& t);
void collect_type_vars(const Type& t, std::set<std::string>& out);

// One-way matching: extends `s` so that apply(s, pattern) == actual.
bool match_type(const Type& pattern, const Type& actual, TypeSubst& s);

struct TypeHash {
    std::size_t operator()(const Type& t) const { return t.hash(); }
};

}  // namespace mhl::syntax

#endif
