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
#include "mhl/derived/theories.hpp"
#include "mhl/error.hpp"
#include "mhl/script/ast.hpp"
#include "mhl/script/elaborate.hpp"
#include "mhl/script/preterm.hpp"
#include "mhl/syntax/logic.hpp"
#include "nlohmann/json.hpp"
#include "oracles.hpp"

using namespace mhl;
using namespace mhl::script;
namespace fs = std::filesystem;

namespace {

const fs::path kRoot = MHL_SOURCE_DIR;

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<fs::path> all_scripts() {
    std::vector<fs::path> out;
    for (const char* dir : {"corpus", "exercises"})
        for (const auto& e : fs::directory_iterator(kRoot / dir))
            if (e.path().extension() == ".mhl") out.push_back(e.path());
    std::sort(out.begin(), out.end());
    return out;
}

bool same_tree(std::string_view a, std::string_view b) { return *parse_preterm(a) == *parse_preterm(b); }

}  // namespace

TEST_CASE("precedence") {
    CHECK(same_tree("p ⟶ q ⟶ r", "p ⟶ (q ⟶ r)"));
    CHECK(!same_tree("p ⟶ q ⟶ r", "(p ⟶ q) ⟶ r"));
    CHECK(same_tree("p ⟷ q ⟷ r", "p ⟷ (q ⟷ r)"));
    CHECK(same_tree("p ⟷ q ⟶ r", "p ⟷ (q ⟶ r)"));
    CHECK(same_tree("p ⟶ q ∨ r", "p ⟶ (q ∨ r)"));
    CHECK(same_tree("p ∨ q ∧ r", "p ∨ (q ∧ r)"));
    CHECK(same_tree("¬ p ∧ q", "(¬ p) ∧ q"));
    CHECK(same_tree("¬ a = b", "¬ (a = b)"));
    CHECK(same_tree("f x = g y", "(f x) = (g y)"));
    CHECK(same_tree("∀x. P x ⟶ Q x", "∀x. (P x ⟶ Q x)"));
    CHECK(same_tree("x ∈ S ∧ y ∈ T", "(x ∈ S) ∧ (y ∈ T)"));
    CHECK_THROWS_AS(parse_preterm("a = b = c"), ParseError);
}

TEST_CASE("ASCII and Unicode spellings agree") {
    CHECK(same_tree("~(EX f. ALL s. EX x. s = f x)", "¬ (∃f. ∀s. ∃x. s = f x)"));
    CHECK(same_tree("p --> q <-> r", "p ⟶ q ⟷ r"));
    CHECK(same_tree("p -> q | r & s", "p ⟶ q ∨ r ∧ s"));
    CHECK(same_tree("%x. x : S", "λx. x ∈ S"));
    CHECK(same_tree("! x. P x", "∀x. P x"));
}

TEST_CASE("the Cantor statement elaborates") {
    auto thy = derived::standard_theory();
    ElabContext ctx;
    ctx.theory = &thy;
    syntax::Term t = parse_formula("~(EX f. ALL s. EX x. s = f x)", ctx);
    CHECK(thy.type_of(t).is_bool());
    auto ex = syntax::dest_ex(*syntax::dest_not(t));
    REQUIRE(ex);
    // Unannotated, f is as general as possible: 'x ⇒ 'y.
    syntax::Type ft = ex->type();
    REQUIRE(ft.is_fun());
    CHECK(ft.domain().is_var());
    CHECK(ft.codomain().is_var());
    CHECK(syntax::pretty(t) == "¬ (∃f. ∀s. ∃x. s = f x)");

    // With the annotation it is the set-valued instance.
    syntax::Term set = parse_formula("¬ (∃f :: 'a ⇒ 'a ⇒ bool. ∀s. ∃x. s = f x)", ctx);
    auto sex = syntax::dest_ex(*syntax::dest_not(set));
    REQUIRE(sex);
    syntax::Type a = syntax::Type::var("a");
    CHECK(sex->type() == syntax::Type::fun(a, syntax::Type::fun(a, syntax::Type::boolean())));
}

TEST_CASE("elaboration errors carry spans") {
    auto thy = derived::standard_theory();
    ElabContext ctx;
    ctx.theory = &thy;
    try {
        parse_formula("p ∧ (λx. x)", ctx, SourceSpan{"f.mhl", 3, 10, 3, 21});
        FAIL("expected a type error");
    } catch (const SpannedError& e) {
        CHECK(e.span().line == 3);
    }
    ElabContext closed = ctx;
    closed.allow_new_frees = false;
    CHECK_THROWS(parse_formula("p ⟶ p", closed));
}

TEST_CASE("surface syntax round-trips") {
    testing::PreTermGen gen(21);
    for (int i = 0; i < 300; ++i) {
        std::string diff = testing::preterm_round_trip_case(gen);
        INFO(diff);
        CHECK(diff.empty());
    }
}

TEST_CASE("unbalanced blocks name the open block") {
    const char* open = "theory T imports core begin\nlemma \"p ⟶ p\"\nproof\n  assume p\n  show p ..\n";
    try {
        parse_script(open, "t.mhl");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.message()).find("proof block opened at 3:1") != std::string::npos);
        CHECK(e.span().line == 3);
    }
    const char* extra = "theory T imports core begin\nlemma \"p ⟶ p\"\nproof\n  assume p\n  show p ..\nqed\nqed\n";
    CHECK_THROWS_AS(parse_script(extra, "t.mhl"), ParseError);
}

TEST_CASE("bicond has two layers and four terminals") {
    Script s = parse_script(slurp(kRoot / "corpus" / "bicond.mhl"), "bicond.mhl");
    REQUIRE(s.items.size() == 1);
    auto sh = shape(s.items[0]);
    CHECK(sh.depth == 2);
    CHECK(sh.terminals == 4);
    CHECK(s.imports == "classical");
}

TEST_CASE("scripts match their golden syntax trees") {
    int compared = 0;
    for (const auto& path : all_scripts()) {
        INFO(path.filename().string());
        fs::path golden = kRoot / "tests" / "golden" / (path.stem().string() + ".ast.json");
        REQUIRE(fs::exists(golden));
        auto want = nlohmann::json::parse(slurp(golden));
        CHECK(to_json(parse_script(slurp(path), path.filename().string())) == want);
        ++compared;
    }
    CHECK(compared == 30);
}

TEST_CASE("scripts survive print and parse") {
    for (const auto& path : all_scripts()) {
        INFO(path.filename().string());
        Script s = parse_script(slurp(path), path.string());
        std::string text = pretty(s);
        Script back = parse_script(text, "printed");
        CHECK(back == s);
        CHECK(flatten(back).size() == flatten(s).size());
    }
}

TEST_CASE("commands without a script header") {
    auto cmds = parse_commands("assume \"p ⟷ q\" show \"q ⟷ p\" by Sym");
    REQUIRE(cmds.size() == 3);
    CHECK(cmds[0].kind == Command::Kind::Assume);
    CHECK(cmds[1].kind == Command::Kind::Show);
    CHECK(cmds[2].kind == Command::Kind::By);
    REQUIRE(cmds[2].rules.size() == 1);
    CHECK(cmds[2].rules[0].name == "Sym");
    auto with_args = parse_commands("show \"a = a\" by Refl[_, a]");
    REQUIRE(with_args.size() == 2);
    REQUIRE(with_args[1].rules[0].args.size() == 2);
    CHECK(with_args[1].rules[0].args[0] == nullptr);
}
