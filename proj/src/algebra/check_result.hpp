#pragma once

#include <optional>
#include <string>

namespace rbx {

/// Outcome of one identity verification. A failure always carries a
/// rendered counterexample.
struct CheckResult
{
	std::string name;
	std::string anchor; // the identity this check instantiates
	std::string model;
	std::string parameters;
	bool passed = true;
	int cases = 0;
	std::optional<std::string> counterexample;

	static CheckResult pass(std::string name, std::string anchor,
	                        std::string model, std::string parameters,
	                        int cases)
	{
		return {std::move(name), std::move(anchor), std::move(model),
		        std::move(parameters), true, cases, std::nullopt};
	}
	static CheckResult fail(std::string name, std::string anchor,
	                        std::string model, std::string parameters,
	                        int cases, std::string counterexample)
	{
		return {std::move(name), std::move(anchor),
		        std::move(model), std::move(parameters),
		        false, cases,
		        std::move(counterexample)};
	}
};

} // namespace rbx
