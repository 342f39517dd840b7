#pragma once

#include "orbicat/orbifold.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace orbicat {

enum class OutputFormat { Human, Tsv };

struct RunConfig {
    std::vector<std::string> command; // {"check-o"}, {"ds", "check"}, ...
    std::string input;
    long d_max = 24;
    bool d_max_given = false;
    std::int64_t height = 60;
    bool height_given = false;
    EtaSign eta_sign = EtaSign::S41;
    int seeds = 64;
    std::uint64_t seed = 0;
    double tol = 1e-9;
    OutputFormat format = OutputFormat::Human;

    /// Throws InputError on nonpositive bounds or an unknown command.
    void validate() const;
};

struct RunOutcome {
    int status = 0; // 0 decision computed, 2 input error
    std::string report;
    std::string error;
};

RunOutcome run(const RunConfig& config);

/// argv front end; writes the report to `out`, diagnostics to `err`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace orbicat
