// Batch front end: parses a session file, runs its statements, and emits the
// JSON-lines record stream plus a human-readable summary table.
#include "CLI11.hpp"
#include "embedded_sessions.hpp"
#include "idealclose/report.hpp"
#include "idealclose/session.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace idealclose;

// "e_max=6,n_max=8" over the keys of Budget.
Budget budget_from_arg(const std::string& arg) {
    Budget b;
    if (arg.empty()) return b;
    std::istringstream in(arg);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t eq = item.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--budget", "expected key=value, got '" + item + "'");
        std::string key = item.substr(0, eq);
        std::uint64_t value = 0;
        try {
            value = std::stoull(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--budget", "bad number in '" + item + "'");
        }
        if (key == "e_max")
            b.e_max = static_cast<std::uint32_t>(value);
        else if (key == "n_max")
            b.n_max = static_cast<std::uint32_t>(value);
        else if (key == "word_max")
            b.word_max = static_cast<std::uint32_t>(value);
        else if (key == "mono_max")
            b.mono_max = value;
        else
            throw CLI::ValidationError("--budget", "unknown key '" + key + "'");
    }
    try {
        b.validate();
    } catch (const std::exception& e) {
        throw CLI::ValidationError("--budget", e.what());
    }
    return b;
}

struct RunOutcome {
    bool parsed = false;
    bool ok = false;
    CheckReport report;
};

RunOutcome run_text(const std::string& label, const std::string& text, const Budget& budget,
                    bool strict) {
    RunOutcome out;
    Session session;
    try {
        session = parse_session(text);
    } catch (const session_parse_error& e) {
        std::cerr << label << ": " << e.what() << "\n";
        return out;
    }
    out.parsed = true;
    SessionResult res = run_session(session, budget, strict);
    out.ok = res.ok;
    out.report = std::move(res.report);
    return out;
}

int cmd_run(const std::string& path, const Budget& budget, bool strict,
            const std::string& json_path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "idealclose: cannot open " << path << "\n";
        return 2;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    RunOutcome out = run_text(path, buffer.str(), budget, strict);
    if (!out.parsed) return 2;
    if (json_path.empty()) {
        write_json_lines(std::cout, out.report);
        std::cout << "\n";
    } else {
        std::ofstream json(json_path);
        if (!json) {
            std::cerr << "idealclose: cannot write " << json_path << "\n";
            return 2;
        }
        write_json_lines(json, out.report);
    }
    write_table(std::cout, out.report);
    return out.ok ? 0 : 1;
}

int cmd_selftest(const Budget& budget, bool strict, const std::string& json_path) {
    std::optional<std::ofstream> json;
    if (!json_path.empty()) {
        json.emplace(json_path);
        if (!*json) {
            std::cerr << "idealclose: cannot write " << json_path << "\n";
            return 2;
        }
    }
    std::vector<std::string> failed;
    for (const auto& [name, text] : embedded_sessions()) {
        std::cout << "== " << name << "\n";
        RunOutcome out = run_text(name, text, budget, strict);
        if (!out.parsed) {
            failed.push_back(name);
            continue;
        }
        if (json) write_json_lines(*json, out.report);
        write_table(std::cout, out.report);
        std::cout << (out.ok ? "ok" : "FAILED") << "\n\n";
        if (!out.ok) failed.push_back(name);
    }
    if (failed.empty()) {
        std::cout << "selftest: " << embedded_sessions().size() << " sessions passed\n";
        return 0;
    }
    std::cout << "selftest: " << failed.size() << " of " << embedded_sessions().size()
              << " sessions failed:";
    for (const std::string& name : failed) std::cout << " " << name;
    std::cout << "\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"closure operations on ideals of commutative rings"};
    app.require_subcommand(1);

    std::string budget_arg;
    std::string json_path;
    bool strict = false;

    std::string session_path;
    CLI::App* run = app.add_subcommand("run", "execute a session file");
    run->add_option("file", session_path, "session file")->required();
    run->add_option("--budget", budget_arg, "search bounds, e.g. e_max=6,n_max=8");
    run->add_option("--json", json_path, "write the JSON-lines report here");
    run->add_flag("--strict", strict, "unknown verdicts fail every check");

    CLI::App* selftest = app.add_subcommand("selftest", "run the embedded sessions");
    selftest->add_option("--budget", budget_arg, "search bounds, e.g. e_max=6,n_max=8");
    selftest->add_option("--json", json_path, "write the JSON-lines report here");
    selftest->add_flag("--strict", strict, "unknown verdicts fail every check");

    try {
        app.parse(argc, argv);
        idealclose::Budget budget = budget_from_arg(budget_arg);
        if (run->parsed()) return cmd_run(session_path, budget, strict, json_path);
        return cmd_selftest(budget, strict, json_path);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
}
