#include "rankdens/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

const char* const kParams[] = {"q", "n", "m", "k", "d", "N", "l", "rho", "i", "j", "r", "s", "kind", "case"};

std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) out += (out.empty() ? "" : ", ") + s;
    return out;
}

} // namespace

int main(int argc, char** argv) {
    using namespace rankdens;

    CLI::App app{"Exact densities of rank-metric codes, semifields and the critical problem"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Help for every subcommand");

    std::string name, budget_s, format_s = "text", out_path;
    unsigned jobs = 1, precision = 6;
    bool timing = false;
    std::map<std::string, std::string> raw;

    struct Sub {
        const char* cmd;
        const char* help;
        std::vector<std::string> names;
    };
    const Sub subs[] = {
        {"formula", "Evaluate a closed-form expression", cli::formula_names()},
        {"verify", "Run formula-vs-enumeration checks", cli::verify_suites()},
        {"table", "Reproduce a table as CSV", cli::table_names()},
        {"density", "Brute-force density of codes", {}},
    };
    for (const auto& s : subs) {
        auto* sc = app.add_subcommand(s.cmd, s.help);
        if (!s.names.empty()) sc->add_option("name", name, "One of: " + join(s.names))->required();
        for (const char* p : kParams) {
            sc->add_option_function<std::string>(
                std::string("--") + p, [&raw, p](const std::string& v) { raw[p] = v; }, "");
        }
        sc->add_option("--budget", budget_s, "Maximum enumeration steps (default 1e9 or RANKDENS_BUDGET)");
        sc->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
        sc->add_option("--format", format_s, "text, json or csv");
        sc->add_option("--out", out_path, "Write output to this file");
        sc->add_option("--precision", precision, "Significant digits for floats")->check(CLI::Range(1u, 30u));
        sc->add_flag("--timing", timing, "Include timings (output is then not reproducible)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    cli::RunConfig cfg;
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.name = name;
    cfg.params = raw;
    cfg.jobs = jobs;
    cfg.precision = precision;
    cfg.timing = timing;
    try {
        cfg.format = cli::parse_format(format_s);
        if (!budget_s.empty()) {
            cfg.budget.limit = cli::parse_count(budget_s);
            if (cfg.budget.limit == 0) throw cli::usage_error("--budget must be positive");
        }
    } catch (const cli::usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    if (out_path.empty()) return cli::run(cfg, std::cout, std::cerr);
    std::ostringstream buf;
    int rc = cli::run(cfg, buf, std::cerr);
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return 2;
    }
    f << buf.str();
    return rc;
}
