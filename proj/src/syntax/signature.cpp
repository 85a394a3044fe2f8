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

#include "mhl/syntax/signature.hpp"

#include <vector>

#include "mhl/error.hpp"
#include "mhl/syntax/pretty.hpp"

namespace mhl::syntax {

Signature::Signature() {
    tycons_[kBoolName] = 0;
    tycons_[kIndName] = 0;
    tycons_[kFunName] = 2;
}

void Signature::add_constant(const std::string& name, Type type) {
    if (constants_.count(name)) throw TypeError("constant " + name + " is already declared");
    check_type(type);
    constants_.emplace(name, std::move(type));
}

void Signature::add_type_constructor(const std::string& name, std::size_t arity) {
    if (tycons_.count(name)) throw TypeError("type constructor " + name + " is already declared");
    tycons_.emplace(name, arity);
}

std::optional<Type> Signature::constant_type(const std::string& name) const {
    auto it = constants_.find(name);
    if (it == constants_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> Signature::arity(const std::string& name) const {
    auto it = tycons_.find(name);
    if (it == tycons_.end()) return std::nullopt;
    return it->second;
}

void Signature::check_type(const Type& t) const {
    if (t.is_var()) return;
    auto a = arity(t.name());
    if (!a) throw TypeError("unknown type constructor " + t.name());
    if (*a != t.args().size())
        throw TypeError("type constructor " + t.name() + " expects " + std::to_string(*a) + " arguments");
    for (const Type& x : t.args()) check_type(x);
}

namespace {

struct Inferrer {
    const Signature& sig;
    std::vector<Type> stack;

    [[noreturn]] void fail(const std::string& what, const Term& at) const {
        std::string shown;
        try {
            shown = pretty(at);
        } catch (const Error&) {
            shown = "<unprintable>";
        }
        throw TypeError(what + " in subterm " + shown);
    }

    Type go(const Term& t) {
        switch (t.kind()) {
            case Term::Kind::Free:
                sig.check_type(t.type());
                return t.type();
            case Term::Kind::Const: {
                auto decl = sig.constant_type(t.name());
                if (!decl) fail("undeclared constant " + t.name(), t);
                TypeSubst s;
                if (!match_type(*decl, t.type(), s))
                    fail("constant " + t.name() + " used at " + t.type().to_string() + " but declared at " +
                             decl->to_string(),
                         t);
                return t.type();
            }
            case Term::Kind::Bound:
                if (t.index() >= stack.size()) fail("unbound index " + std::to_string(t.index()), t);
                return stack[stack.size() - 1 - t.index()];
            case Term::Kind::App: {
                Type f = go(t.fun());
                Type a = go(t.arg());
                if (!f.is_fun()) fail("applying a non-function of type " + f.to_string(), t);
                if (!(f.domain() == a))
                    fail("argument of type " + a.to_string() + " where " + f.domain().to_string() + " is expected",
                         t.arg());
                return f.codomain();
            }
            case Term::Kind::Abs: {
                sig.check_type(t.type());
                stack.push_back(t.type());
                Type b = go(t.body());
                stack.pop_back();
                return Type::fun(t.type(), b);
            }
        }
        fail("malformed term", t);
    }
};

}  // namespace

Type infer_type(const Signature& sig, std::span<const Type> ctx, const Term& t) {
    Inferrer inf{sig, std::vector<Type>(ctx.begin(), ctx.end())};
    return inf.go(t);
}

}  // namespace mhl::syntax
