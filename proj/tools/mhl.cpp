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

// mhl: check scripts, step through proofs, serve the session API, and run
// the implicational prover and the first-order tools.

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "mhl/derived/theories.hpp"
#include "mhl/fol/parse.hpp"
#include "mhl/fol/proof.hpp"
#include "mhl/fol/semantics.hpp"
#include "mhl/imp/prover.hpp"
#include "mhl/script/ast.hpp"
#include "mhl/session/api.hpp"
#include "mhl/session/engine.hpp"
#include "mhl/session/server.hpp"

namespace {

using nlohmann::json;
using mhl::kernel::GateSet;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::optional<GateSet> gate_override(const std::string& flag) {
    std::string text = flag;
    if (text.empty()) {
        const char* env = std::getenv("MHL_GATES");
        if (env) text = env;
    }
    if (text.empty()) return std::nullopt;
    auto gs = GateSet::parse(text);
    if (!gs) throw CLI::ValidationError("--gates", "unknown gate set '" + text + "'");
    return gs;
}

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw mhl::Error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int cmd_check(const std::vector<std::string>& paths, const std::string& gates, bool as_json) {
    auto override = gate_override(gates);
    std::vector<std::future<mhl::session::CheckReport>> jobs;
    for (const std::string& p : paths)
        jobs.push_back(std::async(std::launch::async, [p, gs = override] { return mhl::session::check_file(p, gs); }));
    bool ok = true;
    json files = json::array();
    for (auto& j : jobs) {
        mhl::session::CheckReport r = j.get();
        ok = ok && r.ok();
        if (as_json)
            files.push_back(r.to_json());
        else
            std::cout << r.to_text();
    }
    if (as_json) std::cout << json{{"schema", "mhl-run/1"}, {"ok", ok}, {"files", files}}.dump(2) << "\n";
    return ok ? 0 : kExitFail;
}

void print_rules(const mhl::session::Session& s, bool as_json) {
    const mhl::derived::RuleCatalog* cat = s.has_theory() ? s.theory().catalog.get() : nullptr;
    std::optional<mhl::derived::RuleCatalog> fallback;
    if (!cat) {
        fallback.emplace(mhl::derived::standard_theory(GateSet::full()));
        cat = &*fallback;
    }
    auto entries = cat->listing();
    if (as_json) {
        json out = json::array();
        for (const auto& e : entries)
            out.push_back({{"name", e.name}, {"statement", e.statement}, {"gates", e.gates}, {"available", e.available}});
        std::cout << out.dump(2) << "\n";
        return;
    }
    for (const auto& e : entries) {
        std::string tag = "[";
        for (std::size_t i = 0; i < e.gates.size(); ++i) tag += (i ? "," : "") + e.gates[i];
        tag += "]";
        std::cout << (e.available ? "  " : "- ") << e.name << " " << tag << "  "
                  << (e.available ? e.statement : "(unavailable)") << "\n";
    }
}

int cmd_repl(const std::string& imports, const std::string& gates, bool as_json) {
    using mhl::session::Session;
    Session s(gate_override(gates));
    auto show = [&] {
        if (as_json)
            std::cout << json{{"ok", true}, {"state", s.state()}, {"state_hash", s.state_hash()}}.dump() << "\n";
        else
            std::cout << s.display();
    };
    if (!imports.empty()) {
        s.step("theory Scratch imports " + imports);
        show();
    }
    bool tty_hint = !as_json && isatty(0);
    if (tty_hint) std::cout << "commands: undo, rules, state, export, quit\n";
    std::string line;
    int lineno = 0;
    while (true) {
        if (tty_hint) std::cout << "mhl> " << std::flush;
        if (!std::getline(std::cin, line)) break;
        ++lineno;
        std::string cmd = line;
        cmd.erase(0, cmd.find_first_not_of(" \t"));
        cmd.erase(cmd.find_last_not_of(" \t\r") + 1);
        if (cmd.empty()) continue;
        if (cmd == "quit" || cmd == "exit") break;
        if (cmd == "undo") {
            if (!s.undo() && !as_json) std::cout << "nothing to undo\n";
            show();
            continue;
        }
        if (cmd == "rules") {
            print_rules(s, as_json);
            continue;
        }
        if (cmd == "state") {
            show();
            continue;
        }
        if (cmd == "export") {
            std::cout << s.export_script();
            continue;
        }
        try {
            s.step(line, "<repl:" + std::to_string(lineno) + ">");
            show();
        } catch (const mhl::SpannedError& e) {
            if (as_json)
                std::cout << mhl::session::error_body(e.message(), &e.span()).dump() << "\n";
            else
                std::cout << "error: " << e.what() << "\n";
        } catch (const mhl::Error& e) {
            if (as_json)
                std::cout << mhl::session::error_body(e.what()).dump() << "\n";
            else
                std::cout << "error: " << e.what() << "\n";
        }
    }
    return 0;
}

int cmd_parse(const std::string& path, bool as_json) {
    std::string text = slurp(path);
    mhl::script::Script ast = mhl::script::parse_script(text, path == "-" ? "<stdin>" : path);
    if (as_json)
        std::cout << mhl::script::to_json(ast).dump(2) << "\n";
    else
        std::cout << mhl::script::pretty(ast);
    return 0;
}

int cmd_serve(const std::string& host, int port, const std::string& gates) {
    mhl::session::SessionManager mgr(gate_override(gates));
    mhl::session::HttpServer server(mgr);
    bool ok = server.listen(host, port, [&](int bound) {
        std::cout << "mhl session API on http://" << host << ":" << bound << "/api (sessions are in memory)" << std::endl;
    });
    if (!ok) {
        std::cerr << "cannot listen on " << host << ":" << port << "\n";
        return kExitFail;
    }
    return 0;
}

int cmd_imp(const std::string& text, bool as_json) {
    mhl::imp::ImpFormula f = mhl::imp::parse(text);
    mhl::imp::ProveResult r = mhl::imp::prove(f);
    mhl::fol::FolFormula goal = mhl::imp::to_fol(f);
    if (as_json) {
        json out{{"formula", mhl::imp::to_string(f)}, {"valid", static_cast<bool>(r)}};
        if (r)
            out["proof"] = mhl::fol::write_ax(r.proof, goal);
        else
            out["countervaluation"] = mhl::imp::to_string(*r.countervaluation);
        std::cout << out.dump(2) << "\n";
    } else if (r) {
        std::cout << mhl::fol::write_ax(r.proof, goal);
    } else {
        std::cout << mhl::imp::to_string(*r.countervaluation) << "\n";
    }
    return r ? 0 : kExitFail;
}

int cmd_fol_check(const std::string& path, bool as_json) {
    std::string text = slurp(path);
    std::string file = path == "-" ? "<stdin>" : path;
    std::string calculus = mhl::fol::document_calculus(text);
    mhl::fol::CheckResult r;
    std::string claim;
    if (calculus == "nd") {
        auto doc = mhl::fol::read_nd(text, file);
        r = mhl::fol::nd_check(doc.proof, doc.claim);
        claim = mhl::fol::pretty(doc.claim);
    } else {
        auto doc = mhl::fol::read_ax(text, file);
        r = mhl::fol::ax_check(doc.proof, doc.goal, doc.hyps);
        claim = mhl::fol::pretty(mhl::fol::FolSequent{doc.hyps, doc.goal});
    }
    if (as_json) {
        json out{{"file", file}, {"calculus", calculus}, {"claim", claim}, {"accepted", r.ok}};
        if (!r.ok) out["diagnostic"] = r.diagnostic;
        std::cout << out.dump(2) << "\n";
    } else if (r.ok) {
        std::cout << "accept " << calculus << ": " << claim << "\n";
    } else {
        std::cout << "reject " << calculus << ": " << r.diagnostic << "\n";
    }
    return r.ok ? 0 : kExitFail;
}

int cmd_fol_countermodel(const std::string& text, unsigned max_size, bool as_json) {
    mhl::fol::FolFormula p = mhl::fol::parse_formula(text);
    auto m = mhl::fol::countermodel(p, max_size);
    if (as_json) {
        json out{{"formula", mhl::fol::pretty(p)}, {"max_size", max_size}, {"found", m.has_value()}};
        if (m) {
            out["size"] = m->size;
            out["model"] = m->to_string();
        }
        std::cout << out.dump(2) << "\n";
    } else if (m) {
        std::cout << "countermodel of size " << m->size << ":\n" << m->to_string() << "\n";
    } else {
        std::cout << "no countermodel up to size " << max_size << "\n";
    }
    return m ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mhl: a small LCF-style proof assistant for higher-order logic"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Machine-readable output");

    std::string gates;
    std::vector<std::string> paths;
    auto* check = app.add_subcommand("check", "Check .mhl scripts");
    check->add_option("paths", paths, "Script files")->required();
    check->add_option("--gates", gates, "Override the gates of every theory (core, classical, full or a list)");
    check->add_flag("--json", as_json);

    std::string imports;
    auto* repl = app.add_subcommand("repl", "Step through a proof line by line");
    repl->add_option("--imports", imports, "Start with 'theory Scratch imports <core|classical|full>'");
    repl->add_option("--gates", gates);
    repl->add_flag("--json", as_json);

    std::string parse_path;
    auto* parse = app.add_subcommand("parse", "Parse a script and print it back (or its AST with --json)");
    parse->add_option("file", parse_path)->required();
    parse->add_flag("--json", as_json);

    std::string host = "127.0.0.1";
    int port = 8080;
    auto* serve = app.add_subcommand("serve", "Serve the session API as JSON over HTTP");
    serve->add_option("--host", host);
    serve->add_option("--port", port, "0 picks a free port");
    serve->add_option("--gates", gates);

    std::string formula;
    auto* imp = app.add_subcommand("imp", "Prove an implicational formula or print a countervaluation");
    imp->add_option("formula", formula)->required();
    imp->add_flag("--json", as_json);

    auto* fol = app.add_subcommand("fol", "First-order proof checking and countermodels");
    fol->require_subcommand(1);
    std::string fol_path;
    auto* fol_check = fol->add_subcommand("check", "Check a .nd or .ax proof file ('-' reads stdin)");
    fol_check->add_option("file", fol_path)->required();
    fol_check->add_flag("--json", as_json);
    unsigned max_size = 3;
    auto* fol_cm = fol->add_subcommand("countermodel", "Search models up to a domain size");
    fol_cm->add_option("formula", formula)->required();
    fol_cm->add_option("max_size", max_size)->check(CLI::Range(1u, 6u));
    fol_cm->add_flag("--json", as_json);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*check) return cmd_check(paths, gates, as_json);
        if (*repl) return cmd_repl(imports, gates, as_json);
        if (*parse) return cmd_parse(parse_path, as_json);
        if (*serve) return cmd_serve(host, port, gates);
        if (*imp) return cmd_imp(formula, as_json);
        if (*fol_check) return cmd_fol_check(fol_path, as_json);
        if (*fol_cm) return cmd_fol_countermodel(formula, max_size, as_json);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const mhl::Error& e) {
        if (as_json)
            std::cout << mhl::session::error_body(e.what()).dump(2) << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
