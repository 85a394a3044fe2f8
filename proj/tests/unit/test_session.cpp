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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "mhl/error.hpp"
#include "mhl/script/ast.hpp"
#include "mhl/session/engine.hpp"
#include "mhl/syntax/logic.hpp"

using namespace mhl;
using namespace mhl::session;
using kernel::Gate;
namespace fs = std::filesystem;

namespace {

const fs::path kRoot = MHL_SOURCE_DIR;

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const char* kBicond = "(p ⟷ q) ⟷ (q ⟷ p)";

// The body of the bicond proof, one command per string.
const std::vector<std::string> kBicondSteps = {
    "proof",         "assume \"p ⟷ q\"",  "show \"q ⟷ p\"", "proof", "assume q", "with ‹p ⟷ q› show p ..",
    "next",          "assume p",          "with ‹p ⟷ q› show q ..", "qed", "next", "assume \"q ⟷ p\"",
    "show \"p ⟷ q\"", "proof",            "assume p", "with ‹q ⟷ p› show q ..", "next", "assume q",
    "with ‹q ⟷ p› show p ..", "qed",       "qed"};

std::vector<std::string> goals(const Session& s) {
    std::vector<std::string> out;
    nlohmann::json st = s.state();
    for (const auto& g : st["goals"]) out.push_back(g.get<std::string>());
    return out;
}

}  // namespace

TEST_CASE("start") {
    auto s = Session::start("classical", kBicond);
    CHECK(s.open_goals() == 1);
    CHECK(goals(s) == std::vector<std::string>{"(p ⟷ q) ⟷ q ⟷ p"});
    CHECK(s.in_proof());
    CHECK_THROWS_AS(Session::start("core", "λx. x"), SpannedError);
    CHECK_THROWS(Session::start("core", "p ⟶"));
    CHECK_THROWS(Session::start("nonsense", "p"));
}

TEST_CASE("default introduction") {
    auto s = Session::start("classical", kBicond);
    s.step("proof");
    CHECK(goals(s) == std::vector<std::string>{"p ⟷ q ⟹ q ⟷ p", "q ⟷ p ⟹ p ⟷ q"});

    auto c = Session::start("core", "¬ (∃f :: 'a ⇒ 'a ⇒ bool. ∀s. ∃x. s = f x)");
    c.step("proof");
    CHECK(goals(c) == std::vector<std::string>{"∃f. ∀s. ∃x. s = f x ⟹ ⊥"});

    auto a = Session::start("core", "p");
    std::string before = a.state_hash();
    CHECK_THROWS_WITH_AS(a.step("proof"), doctest::Contains("no introduction rule"), SpannedError);
    CHECK(a.state_hash() == before);

    // Bi-implication introduction needs EXT.
    auto core = Session::start("core", kBicond);
    CHECK_THROWS(core.step("proof"));
}

TEST_CASE("default intro table") {
    syntax::Term p = syntax::Term::free("p", syntax::Type::boolean());
    syntax::Term q = syntax::Term::free("q", syntax::Type::boolean());
    CHECK(default_intro(syntax::mk_eq(p, q)).rule == "Iff_I");
    CHECK(default_intro(syntax::mk_imp(p, q)).rule == "Imp_I");
    CHECK(default_intro(syntax::mk_not(p)).rule == "Neg_I");
    CHECK(default_intro(syntax::mk_conj(p, q)).rule == "Conj_I");
    CHECK(default_intro(syntax::mk_true()).rule == "Truth_I");
    CHECK(!default_intro(syntax::mk_disj(p, q)).rule);
    CHECK(!default_intro(p).rule);
}

TEST_CASE("bicond replay leaves a closed theorem") {
    auto s = Session::start("classical", kBicond);
    for (const auto& cmd : kBicondSteps) s.step(cmd);
    CHECK(!s.in_proof());
    REQUIRE(s.theory().theorems.size() == 1);
    const auto& th = s.theory().theorems[0].thm;
    CHECK(th.hyps().empty());
    CHECK(syntax::is_iff(th.concl()));
    CHECK(th.gates() == (kernel::GateSet::core() | Gate::Ext));
}

TEST_CASE("qed reports open goals") {
    auto s = Session::start("classical", kBicond);
    s.step("proof");
    s.step("assume \"p ⟷ q\"");
    try {
        s.step("qed");
        FAIL("qed should fail");
    } catch (const SpannedError& e) {
        std::string msg = e.message();
        CHECK(msg.find("2 open goals") != std::string::npos);
        CHECK(msg.find("p ⟷ q ⟹ q ⟷ p") != std::string::npos);
        CHECK(msg.find("q ⟷ p ⟹ p ⟷ q") != std::string::npos);
    }
}

TEST_CASE("next starts from a clean context") {
    auto s = Session::start("classical", kBicond);
    for (std::size_t i = 0; i < 11; ++i) s.step(kBicondSteps[i]);  // through the first `next`
    s.step("assume \"q ⟷ p\"");
    CHECK_THROWS(s.step("with ‹p ⟷ q› show \"p ⟷ q\" .."));
    CHECK_THROWS(s.step("from ‹q› have q by Imp_E"));
    // The state is unchanged by the failures and the branch still closes.
    for (std::size_t i = 12; i < kBicondSteps.size(); ++i) s.step(kBicondSteps[i]);
    CHECK(s.theory().theorems.size() == 1);
}

TEST_CASE("wrong show is rejected with a span") {
    auto s = Session::start("classical", kBicond);
    s.step("proof");
    s.step("assume \"p ⟷ q\"");
    try {
        s.step("show \"p ⟷ p\" by Sym", "input.mhl");
        FAIL("show should fail");
    } catch (const SpannedError& e) {
        CHECK(e.span().file == "input.mhl");
        CHECK(e.span().line == 1);
    }
}

TEST_CASE("replay reproduces the same states") {
    auto s = Session::start("classical", kBicond);
    for (const auto& cmd : kBicondSteps) s.step(cmd);
    auto again = Session::replay(s.log());
    CHECK(again.state_hash() == s.state_hash());
    CHECK(again.export_script() == s.export_script());
    for (std::size_t i = 0; i < s.log().size(); ++i) CHECK(again.log()[i].state_hash == s.log()[i].state_hash);

    // Failed steps are logged but do not change the state.
    auto t = Session::start("classical", kBicond);
    CHECK_THROWS(t.step("show q by Sym"));
    CHECK(!t.log().back().ok);
    auto t2 = Session::replay(t.log());
    CHECK(t2.state_hash() == t.state_hash());
}

TEST_CASE("undo restores earlier states") {
    std::string text = slurp(kRoot / "corpus" / "cantor.mhl");
    auto cmds = script::parse_commands(text, "cantor.mhl");
    Session s;
    std::vector<std::string> hashes;
    bool saw_obtain = false;
    for (const auto& c : cmds) {
        hashes.push_back(s.state_hash());
        s.apply(c);
        if (c.kind == script::Command::Kind::Obtain && !saw_obtain) {
            saw_obtain = true;
            std::string after = s.state_hash();
            CHECK(s.undo());
            CHECK(s.state_hash() == hashes.back());
            s.apply(c);
            CHECK(s.state_hash() == after);
        }
    }
    CHECK(saw_obtain);
    REQUIRE(s.theory().theorems.size() == 1);
    while (s.undo()) {
    }
    CHECK(s.state_hash() == hashes.front());
    CHECK(s.depth() == 0);
}

TEST_CASE("rollback") {
    auto s = Session::start("classical", kBicond);
    std::size_t d = s.depth();
    std::string h = s.state_hash();
    s.step("proof");
    s.step("assume \"p ⟷ q\"");
    s.rollback(d);
    CHECK(s.state_hash() == h);
}

TEST_CASE("export is checkable") {
    auto s = Session::start("classical", kBicond);
    for (const auto& cmd : kBicondSteps) s.step(cmd);
    std::string text = s.export_script();
    auto report = check_script(text, "export.mhl");
    CHECK(report.ok());
    REQUIRE(report.items.size() == 1);
    CHECK(report.items[0].gates == s.theory().theorems[0].thm.gates());
}

TEST_CASE("corpus scripts check") {
    for (const char* dir : {"corpus", "exercises"})
        for (const auto& e : fs::directory_iterator(kRoot / dir)) {
            if (e.path().extension() != ".mhl") continue;
            INFO(e.path().filename().string());
            auto r = check_file(e.path().string());
            CHECK(r.ok());
            for (const auto& item : r.items) {
                CHECK(item.ok);
                CHECK(item.gates.subset_of(r.gates));
                CHECK(item.gates.contains(Gate::Core));
            }
        }
}

TEST_CASE("cantor needs only the core gate") {
    auto r = check_file((kRoot / "corpus" / "cantor.mhl").string(), kernel::GateSet::core());
    CHECK(r.ok());
    REQUIRE(r.items.size() == 1);
    CHECK(r.items[0].gates == kernel::GateSet::core());
    auto json = r.to_json();
    CHECK(json["schema"] == "mhl-check/1");
}

TEST_CASE("grandfather needs the classical gates") {
    auto path = (kRoot / "corpus" / "grandfather.mhl").string();
    auto classical = check_file(path);
    CHECK(classical.ok());
    REQUIRE(classical.items.size() >= 2);
    CHECK(classical.items[0].gates.contains(Gate::Choice));
    // The corollaries reuse the theorem.
    for (std::size_t i = 1; i < classical.items.size(); ++i) {
        CHECK(classical.items[i].ok);
        CHECK(classical.items[i].gates.contains(Gate::Ext));
    }

    auto core = check_file(path, kernel::GateSet::core());
    CHECK(!core.ok());
    REQUIRE(!core.items.empty());
    CHECK(!core.items[0].ok);
    CHECK(core.items[0].span.valid());
}

TEST_CASE("a wrong show fails the check with a location") {
    std::string text = "theory W imports core\nbegin\nlemma \"p ⟶ p\"\nproof\n  assume p\n  show q ..\nqed\nend\n";
    auto r = check_script(text, "wrong.mhl");
    CHECK(!r.ok());
    REQUIRE(r.items.size() == 1);
    CHECK(r.items[0].span.line == 6);
    CHECK(r.to_text().find("wrong.mhl:6") != std::string::npos);
}
