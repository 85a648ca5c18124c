#pragma once

#include "rankdens/numeric.hpp"

#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace rankdens::cli {

/// Bad subcommand, name or parameter. Maps to exit code 2.
struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Format { text, json, csv };

struct RunConfig {
    std::string command; // formula | verify | table | density
    std::string name;    // formula name, suite or table
    std::map<std::string, std::string> params;
    Budget budget = default_budget();
    unsigned jobs = 1;
    Format format = Format::text;
    unsigned precision = 6;
    bool timing = false;
};

Format parse_format(const std::string& s);
/// Accepts integers and forms like 1e9.
std::uint64_t parse_count(const std::string& s);

std::vector<std::string> formula_names();
std::vector<std::string> verify_suites();
std::vector<std::string> table_names();

/// Each returns the process exit code: 0 ok, 1 failed check, 2 usage error.
int cmd_formula(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);
int cmd_table(const RunConfig& cfg, std::ostream& out);
int cmd_density(const RunConfig& cfg, std::ostream& out);

/// Dispatch on cfg.command, turning usage errors into exit code 2.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

} // namespace rankdens::cli
