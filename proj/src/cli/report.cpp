#include "cli/report.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "exact/errors.hpp"

namespace rbx {

int Report::passed() const
{
	return static_cast<int>(std::count_if(checks.begin(), checks.end(),
	                                      [](const auto &c) { return c.passed; }));
}

int Report::failed() const
{
	return static_cast<int>(checks.size()) - passed();
}

std::string report_name(const CheckResult &c)
{
	return c.name + "[" + c.model + "]";
}

std::string render_text(const Report &r)
{
	std::size_t width = 4;
	for (const auto &c : r.checks)
		width = std::max(width, report_name(c).size());
	std::ostringstream os;
	os << "suite " << r.suite << "\n";
	for (const auto &[k, v] : r.params)
		os << "  " << k << " = " << v << "\n";
	os << "\n";
	for (const auto &c : r.checks)
	{
		auto name = report_name(c);
		os << (c.passed ? "PASS  " : "FAIL  ") << name
		   << std::string(width - name.size() + 2, ' ') << c.anchor << "  ("
		   << c.parameters << "; " << c.cases << " cases)\n";
		if (c.counterexample)
			os << "      counterexample: " << *c.counterexample << "\n";
	}
	os << "\n" << r.passed() << " passed, " << r.failed() << " failed, "
	   << r.elapsed_ms << " ms\n";
	return os.str();
}

std::string render_json(const Report &r)
{
	using nlohmann::ordered_json;
	ordered_json params = ordered_json::object();
	for (const auto &[k, v] : r.params)
		params[k] = v;
	ordered_json checks = ordered_json::array();
	for (const auto &c : r.checks)
		checks.push_back({{"name", report_name(c)},
		                  {"status", c.passed ? "pass" : "fail"},
		                  {"anchor", c.anchor},
		                  {"counterexample", c.counterexample
		                                         ? ordered_json(*c.counterexample)
		                                         : ordered_json(nullptr)}});
	ordered_json out{{"suite", r.suite},       {"params", params},
	                 {"checks", checks},       {"passed", r.passed()},
	                 {"failed", r.failed()},   {"elapsed_ms", r.elapsed_ms}};
	return out.dump(2) + "\n";
}

std::string render_report(const Report &r, const std::string &format)
{
	if (format == "json")
		return render_json(r);
	if (format == "text")
		return render_text(r);
	throw ConfigError("unknown report format '" + format + "'");
}

void emit_report(const Report &r, const std::string &format,
                 const std::string &path)
{
	const auto text = render_report(r, format);
	if (path.empty())
	{
		std::cout << text << std::flush;
		if (!std::cout)
			throw IoError("failed writing report to standard output");
		return;
	}
	std::ofstream out(path, std::ios::binary);
	if (!out)
		throw IoError("cannot open report file '" + path + "'");
	out << text;
	out.close();
	if (!out)
		throw IoError("failed writing report file '" + path + "'");
}

} // namespace rbx
