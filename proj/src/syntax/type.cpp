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

#include "mhl/syntax/type.hpp"

#include <cassert>
#include <functional>

#include "mhl/error.hpp"

namespace mhl::syntax {

struct Type::Node {
    Kind kind;
    std::string name;
    std::vector<Type> args;
    std::size_t hash;
};

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

Type Type::var(std::string name) {
    std::size_t h = mix(0x51, std::hash<std::string>{}(name));
    return Type(std::make_shared<const Node>(Node{Kind::Var, std::move(name), {}, h}));
}

Type Type::con(std::string name, std::vector<Type> args) {
    std::size_t h = mix(0xc0, std::hash<std::string>{}(name));
    for (const Type& a : args) h = mix(h, a.hash());
    return Type(std::make_shared<const Node>(Node{Kind::Con, std::move(name), std::move(args), h}));
}

Type Type::boolean() {
    static const Type t = con(kBoolName);
    return t;
}

Type Type::ind() {
    static const Type t = con(kIndName);
    return t;
}

Type Type::fun(Type domain, Type codomain) {
    return con(kFunName, {std::move(domain), std::move(codomain)});
}

Type Type::fun(std::span<const Type> domains, Type result) {
    Type t = std::move(result);
    for (auto it = domains.rbegin(); it != domains.rend(); ++it) t = fun(*it, t);
    return t;
}

Type::Kind Type::kind() const { return node_->kind; }
bool Type::is_fun() const { return node_->kind == Kind::Con && node_->name == kFunName && node_->args.size() == 2; }
bool Type::is_bool() const { return node_->kind == Kind::Con && node_->name == kBoolName && node_->args.empty(); }
const std::string& Type::name() const { return node_->name; }
std::span<const Type> Type::args() const { return node_->args; }

Type Type::domain() const {
    if (!is_fun()) throw TypeError("not a function type: " + to_string());
    return node_->args[0];
}

Type Type::codomain() const {
    if (!is_fun()) throw TypeError("not a function type: " + to_string());
    return node_->args[1];
}

std::size_t Type::hash() const { return node_->hash; }

bool operator==(const Type& a, const Type& b) {
    if (a.node_ == b.node_) return true;
    if (a.node_->hash != b.node_->hash || a.node_->kind != b.node_->kind || a.node_->name != b.node_->name) return false;
    return a.node_->args == b.node_->args;
}

bool operator<(const Type& a, const Type& b) {
    if (a.node_ == b.node_) return false;
    if (a.node_->kind != b.node_->kind) return a.node_->kind < b.node_->kind;
    if (a.node_->name != b.node_->name) return a.node_->name < b.node_->name;
    return a.node_->args < b.node_->args;
}

std::string Type::to_string() const {
    if (is_var()) return "'" + name();
    if (is_fun()) {
        std::string dom = domain().to_string();
        if (domain().is_fun()) dom = "(" + dom + ")";
        return dom + " => " + codomain().to_string();
    }
    if (args().empty()) return name();
    std::string out;
    if (args().size() == 1) {
        out = args()[0].to_string();
        if (args()[0].is_fun()) out = "(" + out + ")";
    } else {
        out = "(";
        for (std::size_t i = 0; i < args().size(); ++i) {
            if (i) out += ", ";
            out += args()[i].to_string();
        }
        out += ")";
    }
    return out + " " + name();
}

Type apply(const TypeSubst& s, const Type& t) {
    if (s.empty()) return t;
    if (t.is_var()) {
        auto it = s.find(t.name());
        return it == s.end() ? t : it->second;
    }
    if (t.args().empty()) return t;
    std::vector<Type> args;
    args.reserve(t.args().size());
    bool changed = false;
    for (const Type& a : t.args()) {
        args.push_back(apply(s, a));
        changed = changed || !(args.back() == a);
    }
    return changed ? Type::con(t.name(), std::move(args)) : t;
}

void collect_type_vars(const Type& t, std::set<std::string>& out) {
    if (t.is_var()) {
        out.insert(t.name());
        return;
    }
    for (const Type& a : t.args()) collect_type_vars(a, out);
}

bool match_type(const Type& pattern, const Type& actual, TypeSubst& s) {
    if (pattern.is_var()) {
        auto [it, inserted] = s.emplace(pattern.name(), actual);
        return inserted || it->second == actual;
    }
    if (!actual.is_con() || actual.name() != pattern.name() || actual.args().size() != pattern.args().size()) return false;
    for (std::size_t i = 0; i < pattern.args().size(); ++i)
        if (!match_type(pattern.args()[i], actual.args()[i], s)) return false;
    return true;
}

}  // namespace mhl::syntax
