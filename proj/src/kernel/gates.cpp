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

#include "mhl/kernel/gates.hpp"

#include <algorithm>
#include <cctype>

namespace mhl::kernel {

std::string_view gate_name(Gate g) {
    switch (g) {
        case Gate::Core: return "CORE";
        case Gate::Ext: return "EXT";
        case Gate::Choice: return "CHOICE";
        case Gate::Infinity: return "INFINITY";
        case Gate::Comprehension: return "COMPREHENSION";
    }
    return "?";
}

std::optional<Gate> parse_gate(std::string_view name) {
    std::string up(name);
    std::transform(up.begin(), up.end(), up.begin(), [](unsigned char c) { return std::toupper(c); });
    for (Gate g : kAllGates)
        if (gate_name(g) == up) return g;
    return std::nullopt;
}

GateSet GateSet::full() {
    GateSet s;
    for (Gate g : kAllGates) s |= g;
    return s;
}

std::optional<GateSet> GateSet::parse(std::string_view text) {
    if (text == "core") return core();
    if (text == "classical") return classical();
    if (text == "full") return full();
    GateSet s = core();
    std::size_t i = 0;
    while (i <= text.size()) {
        std::size_t j = text.find_first_of(",+", i);
        if (j == std::string_view::npos) j = text.size();
        std::string_view item = text.substr(i, j - i);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        if (!item.empty()) {
            auto g = parse_gate(item);
            if (!g) return std::nullopt;
            s |= *g;
        }
        i = j + 1;
    }
    return s;
}

std::vector<std::string> GateSet::names() const {
    std::vector<std::string> out;
    for (Gate g : kAllGates)
        if (contains(g)) out.emplace_back(gate_name(g));
    return out;
}

std::string GateSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for (const auto& n : names()) {
        if (!first) out += ", ";
        out += n;
        first = false;
    }
    return out + "}";
}

}  // namespace mhl::kernel
