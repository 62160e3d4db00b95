#pragma once

#include <string>
#include <vector>

#include "cli/config.hpp"
#include "cli/report.hpp"

namespace rbx {

/// Models a suite runs on under model=auto, and the selectors it accepts.
struct SuiteInfo
{
	std::string name;
	std::vector<std::string> compatible;
	std::vector<std::string> defaults;
};

const std::vector<SuiteInfo> &suite_catalog();

/// Runs the configured suite. Throws ConfigError when an explicitly selected
/// model does not fit a single named suite, and Error subclasses on
/// precondition or domain failures.
Report run_suite(const SuiteConfig &cfg);

} // namespace rbx
