#pragma once

#include "stabwall/config.hpp"
#include "stabwall/report.hpp"

namespace stabwall {

// Subcommand implementations shared by the CLI and the test suites. Each one
// validates the config, runs the corresponding library operation, and fills a
// Report whose byte encoding is deterministic (independent of worker count).
Report cmd_pair(const JobConfig& cfg);
Report cmd_charge(const JobConfig& cfg);
Report cmd_wall(const JobConfig& cfg);
Report cmd_walls(const JobConfig& cfg, int workers);
Report cmd_gieseker(const JobConfig& cfg);
Report cmd_envelope(const JobConfig& cfg);
Report cmd_decompose(const JobConfig& cfg);
Report cmd_transform(const JobConfig& cfg);
Report cmd_wordsearch(const JobConfig& cfg);
Report cmd_example_suite(const JobConfig& cfg);
std::string cmd_plot(const JobConfig& cfg, int workers);

}  // namespace stabwall
