#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "algebra/check_result.hpp"

namespace rbx {

struct Report
{
	std::string suite;
	/// Resolved parameters in a fixed order, values already rendered.
	std::vector<std::pair<std::string, std::string>> params;
	std::vector<CheckResult> checks;
	std::int64_t elapsed_ms = 0;

	int passed() const;
	int failed() const;
};

/// Name as it appears in reports: "atkinson[matrix]".
std::string report_name(const CheckResult &c);

std::string render_text(const Report &r);
std::string render_json(const Report &r);
std::string render_report(const Report &r, const std::string &format);

/// Writes to `path`, or standard output when empty. Throws Error on I/O
/// failure.
void emit_report(const Report &r, const std::string &format,
                 const std::string &path);

} // namespace rbx
