#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "exact/errors.hpp"
#include "exact/rational.hpp"

namespace rbx {

/// Bad flags or arguments; maps to exit code 2 like ConfigError.
struct UsageError : ConfigError
{
	using ConfigError::ConfigError;
};

/// --help was requested; what() holds the help text.
struct HelpRequested : Error
{
	using Error::Error;
};

struct SuiteConfig
{
	std::string suite = "all";
	std::string model = "auto";
	int order = 6;
	int window = 10;
	int dim = 3;
	std::optional<Rational> weight;
	int alphabet = 3;
	int bs_arity = 5;
	int trials = 200;
	std::uint64_t seed = 42;
	int cap = 8;
	std::string format = "text";
	std::string output;
	std::string fault = "none";

	/// Throws ConfigError on out-of-range values or unknown names.
	void validate() const;
};

const std::vector<std::string> &suite_names();
const std::vector<std::string> &model_names();

/// Parses `verify` arguments (args[0] is the program or subcommand name).
/// Flags override --config file values, which override defaults.
SuiteConfig parse_config(const std::vector<std::string> &args);

/// Sets one key as it would appear in a config file ("bs-arity", "weight").
void set_config_value(SuiteConfig &cfg, const std::string &key,
                      const std::string &value);

} // namespace rbx
