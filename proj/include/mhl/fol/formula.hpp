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

#ifndef MHL_FOL_FORMULA_HPP
#define MHL_FOL_FORMULA_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace mhl::fol {

// First-order terms over de Bruijn variables. Constants are 0-ary functions.
class FolTerm {
public:
    static FolTerm var(std::uint32_t index);
    static FolTerm fun(std::string name, std::vector<FolTerm> args = {});

    bool is_var() const;
    std::uint32_t index() const;
    const std::string& name() const;
    std::span<const FolTerm> args() const;
    std::size_t hash() const;

    friend bool operator==(const FolTerm& a, const FolTerm& b);
    friend bool operator!=(const FolTerm& a, const FolTerm& b) { return !(a == b); }

private:
    struct Node;
    explicit FolTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

// Formulas with exactly the connectives ⊥, ⟶ and ∀.
class FolFormula {
public:
    enum class Kind : unsigned char { Falsity, Pre, Imp, Uni };

    static FolFormula falsity();
    static FolFormula pre(std::string name, std::vector<FolTerm> args = {});
    static FolFormula imp(FolFormula lhs, FolFormula rhs);
    static FolFormula uni(FolFormula body);

    Kind kind() const;
    bool is_falsity() const { return kind() == Kind::Falsity; }
    bool is_pre() const { return kind() == Kind::Pre; }
    bool is_imp() const { return kind() == Kind::Imp; }
    bool is_uni() const { return kind() == Kind::Uni; }

    const std::string& name() const;
    std::span<const FolTerm> args() const;
    const FolFormula& lhs() const;
    const FolFormula& rhs() const;
    const FolFormula& body() const;  // Uni
    std::size_t hash() const;
    std::size_t size() const;  // number of connectives and atoms
    const void* identity() const { return node_.get(); }

    friend bool operator==(const FolFormula& a, const FolFormula& b);
    friend bool operator!=(const FolFormula& a, const FolFormula& b) { return !(a == b); }
    friend bool operator<(const FolFormula& a, const FolFormula& b);

private:
    struct Node;
    explicit FolFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

struct FolFormulaHash {
    std::size_t operator()(const FolFormula& f) const { return f.hash(); }
};

// Assumption list z and goal p of a judgment z ⇝ p.
struct FolSequent {
    std::vector<FolFormula> assumptions;
    FolFormula goal;
};

// Increment every variable index (moving a term under one more binder).
FolTerm lift(const FolTerm& t);
FolFormula lift(const FolFormula& p);
// Replace variable v by s, decrementing the variables above v.
FolTerm sub_term(std::uint32_t v, const FolTerm& s, const FolTerm& t);
FolFormula sub(std::uint32_t v, const FolTerm& s, const FolFormula& p);
// ⟨t⟩p: instantiate the outermost binder of a universal's body.
inline FolFormula inst(const FolTerm& t, const FolFormula& body) { return sub(0, t, body); }
// Inverse of sub(v, c, ·) for a constant c that does not occur in the result.
FolFormula abstract_const(std::uint32_t v, const std::string& c, const FolFormula& p);

// Rename a function symbol (used for eigenconstants).
FolTerm rename_const(const FolTerm& t, const std::string& from, const std::string& to);
FolFormula rename_const(const FolFormula& p, const std::string& from, const std::string& to);
void collect_functions(const FolFormula& p, std::set<std::string>& out);

bool occurs_in(const std::string& name, const FolTerm& t);
bool occurs_in(const std::string& name, const FolFormula& p);
bool occurs_in(const std::string& name, std::span<const FolFormula> z);

// One more than the largest loose variable index (0 for closed formulas).
std::uint32_t loose_bound(const FolFormula& p);
std::uint32_t loose_bound(const FolTerm& t);

// Symbols with their arities; throws on inconsistent use.
struct FolSignature {
    std::map<std::string, std::size_t> functions;
    std::map<std::string, std::size_t> predicates;

    void add(const FolFormula& p);
    void add(const FolTerm& t);
};

// Derived connectives in terms of ⊥ ⟶ ∀.
FolFormula neg(const FolFormula& p);
FolFormula conj(const FolFormula& p, const FolFormula& q);
FolFormula disj(const FolFormula& p, const FolFormula& q);
FolFormula exists(const FolFormula& body);
FolFormula truth();

// Concrete syntax of the FOL profile. Bound variables print as x, y, z, ...;
// loose indices as #n.
std::string pretty(const FolFormula& p);
std::string pretty(const FolTerm& t);
std::string pretty(const FolSequent& s);

}  // namespace mhl::fol

#endif
