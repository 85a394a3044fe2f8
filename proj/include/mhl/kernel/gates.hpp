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

#ifndef MHL_KERNEL_GATES_HPP
#define MHL_KERNEL_GATES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mhl::kernel {

// Axiom groups a theory may enable and a theorem records having used.
enum class Gate : std::uint8_t {
    Core = 1,
    Ext = 2,
    Choice = 4,
    Infinity = 8,
    Comprehension = 16,
};

inline constexpr Gate kAllGates[] = {Gate::Core, Gate::Ext, Gate::Choice, Gate::Infinity, Gate::Comprehension};

std::string_view gate_name(Gate g);
std::optional<Gate> parse_gate(std::string_view name);

class GateSet {
public:
    constexpr GateSet() = default;
    constexpr GateSet(Gate g) : bits_(static_cast<std::uint8_t>(g)) {}

    static GateSet core() { return GateSet(Gate::Core); }
    static GateSet classical() { return GateSet(Gate::Core) | Gate::Ext | Gate::Choice; }
    static GateSet full();
    // "core", "classical", "full" or a comma/plus separated gate list.
    static std::optional<GateSet> parse(std::string_view text);

    bool contains(Gate g) const { return (bits_ & static_cast<std::uint8_t>(g)) != 0; }
    bool subset_of(GateSet o) const { return (bits_ & ~o.bits_) == 0; }
    bool empty() const { return bits_ == 0; }
    std::uint8_t bits() const { return bits_; }

    friend GateSet operator|(GateSet a, GateSet b) { return from_bits(a.bits_ | b.bits_); }
    friend GateSet operator|(GateSet a, Gate b) { return a | GateSet(b); }
    GateSet& operator|=(GateSet o) {
        bits_ |= o.bits_;
        return *this;
    }
    friend bool operator==(GateSet a, GateSet b) { return a.bits_ == b.bits_; }

    std::vector<std::string> names() const;
    // "{CORE, EXT}"
    std::string to_string() const;

private:
    static GateSet from_bits(unsigned b) {
        GateSet g;
        g.bits_ = static_cast<std::uint8_t>(b);
        return g;
    }
    std::uint8_t bits_ = 0;
};

}  // namespace mhl::kernel

#endif
