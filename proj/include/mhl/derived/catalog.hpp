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

#ifndef MHL_DERIVED_CATALOG_HPP
#define MHL_DERIVED_CATALOG_HPP

#include <map>
#include <string>
#include <vector>

#include "mhl/derived/rule.hpp"

namespace mhl::derived {

// Static description of a catalog rule, independent of any theory.
struct RuleInfo {
    std::string name;
    GateSet required;
    RuleKind kind;
    bool classical;  // one of Imp_C, LEM, classical, ccontr
};

struct CatalogEntry {
    std::string name;
    std::string statement;  // empty when the rule is unavailable
    std::vector<std::string> gates;
    bool available;
    std::string kind;
};

// Every derived rule, produced through kernel operations for one theory.
// Rules whose gates the theory lacks are known but unavailable.
class RuleCatalog {
public:
    explicit RuleCatalog(const Theory& thy);

    const Theory& theory() const { return thy_; }

    // nullptr if unknown or unavailable.
    const Rule* find(const std::string& name) const;
    // Throws GateError when the theory lacks a required gate, Error when the
    // name is unknown.
    const Rule& get(const std::string& name) const;

    Thm derive(const std::string& name) const { return get(name).thm; }
    // Restricted to Imp_C, LEM, classical and ccontr.
    Thm derive_classical(const std::string& name) const;

    // Available rules in catalog order.
    const std::vector<Rule>& rules() const { return rules_; }
    std::vector<CatalogEntry> listing() const;

    static const std::vector<RuleInfo>& known();

private:
    Theory thy_;
    std::vector<Rule> rules_;
    std::map<std::string, std::size_t> index_;
};

}  // namespace mhl::derived

#endif
