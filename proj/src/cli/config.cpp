#include "cli/config.hpp"

#include <algorithm>
#include <charconv>

#include <CLI11.hpp>

namespace rbx {

namespace {

bool contains(const std::vector<std::string> &names, const std::string &s)
{
	return std::find(names.begin(), names.end(), s) != names.end();
}

void require_range(const char *what, long long v, long long lo, long long hi)
{
	if (v < lo || v > hi)
		throw ConfigError(std::string(what) + " must be in " +
		                  std::to_string(lo) + ".." + std::to_string(hi) +
		                  ", got " + std::to_string(v));
}

template <class Int> Int parse_int(const std::string &key, const std::string &v)
{
	Int out{};
	auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
	if (ec != std::errc() || p != v.data() + v.size())
		throw ConfigError("invalid integer for " + key + ": '" + v + "'");
	return out;
}

} // namespace

const std::vector<std::string> &suite_names()
{
	static const std::vector<std::string> names{
	    "rb-laws",     "shuffle",    "quasi-shuffle",       "dendriform",
	    "prelie",      "spitzer",    "nc-spitzer",          "magnus",
	    "bohnenblust-spitzer",       "atkinson",            "bogoliubov",
	    "flows-bch",   "yang-baxter", "standard-symmetric", "all"};
	return names;
}

const std::vector<std::string> &model_names()
{
	static const std::vector<std::string> names{
	    "auto",   "standard-comm", "standard-nc", "laurent",
	    "matrix", "integration",   "summation",   "words"};
	return names;
}

void SuiteConfig::validate() const
{
	if (!contains(suite_names(), suite))
		throw ConfigError("unknown suite '" + suite + "'");
	if (!contains(model_names(), model))
		throw ConfigError("unknown model '" + model + "'");
	if (format != "text" && format != "json")
		throw ConfigError("format must be text or json, got '" + format + "'");
	if (fault != "none" && fault != "subdiagonal")
		throw ConfigError("fault must be none or subdiagonal, got '" + fault + "'");
	require_range("order", order, 1, 8);
	require_range("window", window, 2, 16);
	require_range("dim", dim, 2, 8);
	require_range("alphabet", alphabet, 1, 9);
	require_range("bs-arity", bs_arity, 1, 6);
	require_range("trials", trials, 1, 100000);
	require_range("cap", cap, 1, 16);
	if (fault == "subdiagonal" && dim < 3)
		throw ConfigError("fault=subdiagonal needs dim >= 3");
}

void set_config_value(SuiteConfig &cfg, const std::string &key,
                      const std::string &value)
{
	if (key == "suite")
		cfg.suite = value;
	else if (key == "model")
		cfg.model = value;
	else if (key == "order")
		cfg.order = parse_int<int>(key, value);
	else if (key == "window")
		cfg.window = parse_int<int>(key, value);
	else if (key == "dim")
		cfg.dim = parse_int<int>(key, value);
	else if (key == "weight")
		cfg.weight = Rational::parse(value);
	else if (key == "alphabet")
		cfg.alphabet = parse_int<int>(key, value);
	else if (key == "bs-arity")
		cfg.bs_arity = parse_int<int>(key, value);
	else if (key == "trials")
		cfg.trials = parse_int<int>(key, value);
	else if (key == "seed")
		cfg.seed = parse_int<std::uint64_t>(key, value);
	else if (key == "cap")
		cfg.cap = parse_int<int>(key, value);
	else if (key == "format")
		cfg.format = value;
	else if (key == "output")
		cfg.output = value;
	else if (key == "fault")
		cfg.fault = value;
	else
		throw ConfigError("unknown config key '" + key + "'");
}

SuiteConfig parse_config(const std::vector<std::string> &args)
{
	static const char *keys[] = {"suite", "model",    "order", "window",
	                             "dim",   "weight",   "alphabet", "bs-arity",
	                             "trials", "seed",    "cap",   "format",
	                             "output", "fault"};
	static const char *help[] = {
	    "suite to run",
	    "model selector (auto runs each suite on its standard models)",
	    "lambda order N",
	    "sequence window W",
	    "matrix dimension",
	    "weight override p/q (R' = (p/q)/theta R)",
	    "alphabet size",
	    "Bohnenblust-Spitzer arity",
	    "random trials per sampled check",
	    "random seed",
	    "polynomial degree cap",
	    "text or json",
	    "report path (default stdout)",
	    "negative control: none or subdiagonal"};

	CLI::App app{"Verify Rota-Baxter identities by exact computation", "verify"};
	app.set_config("--config", "", "flat key=value file mirroring flag names");
	app.allow_config_extras(CLI::config_extras_mode::error);
	std::vector<std::string> values(std::size(keys));
	for (std::size_t i = 0; i < std::size(keys); ++i)
		app.add_option(std::string("--") + keys[i], values[i], help[i]);

	std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1),
	                              args.end());
	std::reverse(rest.begin(), rest.end());
	try
	{
		app.parse(rest);
	}
	catch (const CLI::CallForHelp &)
	{
		throw HelpRequested(app.help());
	}
	catch (const CLI::ParseError &e)
	{
		throw UsageError(e.what());
	}

	SuiteConfig cfg;
	for (std::size_t i = 0; i < std::size(keys); ++i)
		if (app.count(std::string("--") + keys[i]) > 0)
			set_config_value(cfg, keys[i], values[i]);
	cfg.validate();
	return cfg;
}

} // namespace rbx
