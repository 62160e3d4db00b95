#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include <json.hpp>

#include "cli/config.hpp"
#include "cli/report.hpp"
#include "cli/suites.hpp"
#include "rbx/rbx.h"

using namespace rbx;
using nlohmann::json;

namespace {

SuiteConfig parse(std::vector<std::string> args)
{
	args.insert(args.begin(), "verify");
	return parse_config(args);
}

std::filesystem::path temp_file(const std::string &name,
                                const std::string &content)
{
	const auto path = std::filesystem::temp_directory_path() / name;
	std::ofstream(path) << content;
	return path;
}

struct Run
{
	int exit_code;
	std::string out;
};

Run run_cli(const std::string &args)
{
	const std::string cmd = std::string(RBX_CLI_PATH) + " " + args + " 2>/dev/null";
	FILE *p = popen(cmd.c_str(), "r");
	std::string out;
	char buf[4096];
	std::size_t n;
	while ((n = fread(buf, 1, sizeof buf, p)) > 0)
		out.append(buf, n);
	const int status = pclose(p);
	return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Report sample_report(bool with_failure)
{
	Report r{"fixture", {{"seed", "1"}}, {}, 3};
	r.checks.push_back(
	    CheckResult::pass("rb-law", "Rota-Baxter relation", "matrix", "", 4));
	if (with_failure)
		r.checks.push_back(CheckResult::fail("rb-law", "Rota-Baxter relation",
		                                     "broken", "", 1, "x = 1, y = 2"));
	return r;
}

} // namespace

// ---- configuration ----------------------------------------------------------

TEST(Config, Defaults)
{
	const auto c = parse({});
	EXPECT_EQ(c.suite, "all");
	EXPECT_EQ(c.model, "auto");
	EXPECT_EQ(c.order, 6);
	EXPECT_EQ(c.window, 10);
	EXPECT_EQ(c.dim, 3);
	EXPECT_FALSE(c.weight.has_value());
	EXPECT_EQ(c.bs_arity, 5);
	EXPECT_EQ(c.trials, 200);
	EXPECT_EQ(c.seed, 42u);
	EXPECT_EQ(c.format, "text");
}

TEST(Config, FlagsParse)
{
	const auto c = parse({"--suite", "spitzer", "--model", "laurent", "--order",
	                      "4", "--weight", "-2/6", "--bs-arity", "3",
	                      "--format", "json", "--seed", "7"});
	EXPECT_EQ(c.suite, "spitzer");
	EXPECT_EQ(c.model, "laurent");
	EXPECT_EQ(c.order, 4);
	ASSERT_TRUE(c.weight.has_value());
	EXPECT_EQ(*c.weight, Rational(-1, 3));
	EXPECT_EQ(c.bs_arity, 3);
	EXPECT_EQ(c.format, "json");
	EXPECT_EQ(c.seed, 7u);
}

TEST(Config, FileValuesApplyAndFlagsOverride)
{
	const auto path =
	    temp_file("rbx_cfg_test.cfg", "trials=7\nseed = 9\norder=3\n");
	const auto c = parse({"--config", path.string(), "--seed", "5"});
	EXPECT_EQ(c.trials, 7);
	EXPECT_EQ(c.order, 3);
	EXPECT_EQ(c.seed, 5u);
}

TEST(Config, UnknownKeysAndFlagsAreRejected)
{
	const auto path = temp_file("rbx_cfg_bad.cfg", "bogus=1\n");
	EXPECT_THROW(parse({"--config", path.string()}), ConfigError);
	EXPECT_THROW(parse({"--nope"}), UsageError);
	EXPECT_THROW(parse({"--config", "/nonexistent/rbx.cfg"}), ConfigError);
	SuiteConfig c;
	EXPECT_THROW(set_config_value(c, "colour", "red"), ConfigError);
}

TEST(Config, BadValuesAreConfigErrors)
{
	EXPECT_THROW(parse({"--weight", "1/0"}), ConfigError);
	EXPECT_THROW(parse({"--weight", "half"}), ConfigError);
	EXPECT_THROW(parse({"--order", "0"}), ConfigError);
	EXPECT_THROW(parse({"--order", "six"}), ConfigError);
	EXPECT_THROW(parse({"--bs-arity", "7"}), ConfigError);
	EXPECT_THROW(parse({"--suite", "nonsense"}), ConfigError);
	EXPECT_THROW(parse({"--model", "nonsense"}), ConfigError);
	EXPECT_THROW(parse({"--format", "xml"}), ConfigError);
	EXPECT_THROW(parse({"--fault", "subdiagonal", "--dim", "2"}), ConfigError);
}

TEST(Config, HelpIsNotAnError)
{
	try
	{
		parse({"--help"});
		FAIL() << "expected HelpRequested";
	}
	catch (const HelpRequested &h)
	{
		EXPECT_NE(std::string(h.what()).find("--bs-arity"), std::string::npos);
	}
}

// ---- reports ----------------------------------------------------------------

TEST(Report, EmptyReportIsValid)
{
	Report r{"none", {}, {}, 0};
	const auto j = json::parse(render_json(r));
	EXPECT_EQ(j["checks"].size(), 0u);
	EXPECT_EQ(j["passed"], 0);
	EXPECT_EQ(j["failed"], 0);
}

TEST(Report, JsonSchema)
{
	const auto j = json::parse(render_json(sample_report(false)));
	EXPECT_EQ(j["suite"], "fixture");
	EXPECT_EQ(j["params"]["seed"], "1");
	EXPECT_EQ(j["passed"], 1);
	EXPECT_EQ(j["failed"], 0);
	EXPECT_EQ(j["elapsed_ms"], 3);
	const auto &c = j["checks"][0];
	EXPECT_EQ(c["name"], "rb-law[matrix]");
	EXPECT_EQ(c["status"], "pass");
	EXPECT_EQ(c["anchor"], "Rota-Baxter relation");
	EXPECT_TRUE(c["counterexample"].is_null());
}

TEST(Report, FailureCarriesCounterexample)
{
	const auto r = sample_report(true);
	const auto j = json::parse(render_json(r));
	EXPECT_EQ(j["failed"], 1);
	EXPECT_EQ(j["checks"][1]["status"], "fail");
	EXPECT_EQ(j["checks"][1]["counterexample"], "x = 1, y = 2");
	const auto text = render_text(r);
	EXPECT_NE(text.find("FAIL"), std::string::npos);
	EXPECT_NE(text.find("x = 1, y = 2"), std::string::npos);
	EXPECT_THROW(render_report(r, "xml"), ConfigError);
}

// ---- suite dispatch ---------------------------------------------------------

TEST(Suites, CatalogCoversEverySuiteName)
{
	for (const auto &name : suite_names())
	{
		if (name == "all")
			continue;
		const auto &cat = suite_catalog();
		EXPECT_TRUE(std::any_of(cat.begin(), cat.end(), [&](const auto &s) {
			return s.name == name;
		})) << name;
	}
}

TEST(Suites, EveryCheckCarriesAnAnchor)
{
	const auto r = run_suite(parse({"--suite", "rb-laws", "--trials", "5"}));
	ASSERT_FALSE(r.checks.empty());
	for (const auto &c : r.checks)
		EXPECT_FALSE(c.anchor.empty()) << c.name;
}

TEST(Suites, IncompatibleModelIsConfigError)
{
	EXPECT_THROW(run_suite(parse({"--suite", "spitzer", "--model", "matrix"})),
	             ConfigError);
	EXPECT_THROW(run_suite(parse({"--suite", "bogoliubov", "--model", "words"})),
	             ConfigError);
}

TEST(Suites, AllWithExplicitModelRunsOnlyCompatibleSuites)
{
	const auto r = run_suite(parse({"--model", "laurent", "--trials", "5",
	                                "--order", "3", "--bs-arity", "3"}));
	EXPECT_EQ(r.failed(), 0);
	for (const auto &c : r.checks)
		EXPECT_EQ(c.model.rfind("laurent", 0), 0u) << report_name(c);
}

TEST(Suites, WeightOverrideRescales)
{
	const auto r = run_suite(parse({"--suite", "rb-laws", "--model", "summation",
	                                "--weight", "2/3", "--trials", "20"}));
	EXPECT_EQ(r.failed(), 0);
	EXPECT_EQ(r.checks.front().model, "summation*(2/3)");
	EXPECT_THROW(run_suite(parse({"--suite", "rb-laws", "--model",
	                              "integration", "--weight", "1"})),
	             ConfigError);
}

TEST(Suites, FaultBreaksRbLaws)
{
	const auto r = run_suite(parse({"--suite", "rb-laws", "--model", "matrix",
	                                "--fault", "subdiagonal", "--trials", "20"}));
	EXPECT_GT(r.failed(), 0);
	for (const auto &c : r.checks)
		if (!c.passed)
			EXPECT_TRUE(c.counterexample && !c.counterexample->empty());
}

TEST(Suites, ContentIsAPureFunctionOfConfig)
{
	const auto cfg = parse({"--suite", "atkinson", "--order", "4", "--trials", "10"});
	auto a = run_suite(cfg), b = run_suite(cfg);
	a.elapsed_ms = b.elapsed_ms = 0;
	EXPECT_EQ(render_json(a), render_json(b));
}

// ---- C API ------------------------------------------------------------------

TEST(CApi, RunAndInspect)
{
	rbx_config *cfg = rbx_config_new();
	ASSERT_NE(cfg, nullptr);
	ASSERT_EQ(rbx_config_set(cfg, "suite", "magnus"), RBX_OK);
	rbx_report *rep = nullptr;
	ASSERT_EQ(rbx_run(cfg, &rep), RBX_OK);
	ASSERT_NE(rep, nullptr);
	EXPECT_GT(rbx_report_check_count(rep), 0u);
	EXPECT_EQ(rbx_report_failed(rep), 0);
	EXPECT_EQ(rbx_report_passed(rep),
	          static_cast<int>(rbx_report_check_count(rep)));
	EXPECT_STREQ(rbx_report_check_name(rep, 0),
	             "magnus-lambda1/generator[standard-nc]");
	EXPECT_EQ(rbx_report_check_passed(rep, 0), 1);
	EXPECT_EQ(rbx_report_check_counterexample(rep, 0), nullptr);
	EXPECT_EQ(rbx_report_check_name(rep, 10000), nullptr);
	EXPECT_EQ(rbx_report_check_passed(rep, 10000), -1);

	char *text = nullptr;
	ASSERT_EQ(rbx_report_render(rep, "json", &text), RBX_OK);
	EXPECT_EQ(json::parse(text)["suite"], "magnus");
	rbx_string_free(text);
	EXPECT_EQ(rbx_report_render(rep, "yaml", &text), RBX_CONFIG_ERROR);
	EXPECT_EQ(text, nullptr);
	rbx_report_free(rep);
	rbx_config_free(cfg);
}

TEST(CApi, FailuresAndErrors)
{
	rbx_config *cfg = rbx_config_new();
	EXPECT_EQ(rbx_config_set(cfg, "weight", "1/0"), RBX_CONFIG_ERROR);
	EXPECT_NE(std::string(rbx_last_error()).find("1/0"), std::string::npos);
	EXPECT_EQ(rbx_config_set(cfg, "colour", "red"), RBX_CONFIG_ERROR);
	EXPECT_EQ(rbx_config_set(nullptr, "suite", "all"), RBX_INVALID_ARGUMENT);

	const char *argv[] = {"verify", "--suite", "rb-laws", "--model", "matrix",
	                      "--fault", "subdiagonal", "--trials", "10"};
	ASSERT_EQ(rbx_config_parse_args(cfg, 9, argv), RBX_OK);
	rbx_report *rep = nullptr;
	EXPECT_EQ(rbx_run(cfg, &rep), RBX_CHECK_FAILED);
	ASSERT_NE(rep, nullptr);
	EXPECT_GT(rbx_report_failed(rep), 0);
	bool found = false;
	for (size_t i = 0; i < rbx_report_check_count(rep); ++i)
		if (rbx_report_check_passed(rep, i) == 0)
			found = rbx_report_check_counterexample(rep, i) != nullptr;
	EXPECT_TRUE(found);
	rbx_report_free(rep);

	const char *help[] = {"verify", "--help"};
	EXPECT_EQ(rbx_config_parse_args(cfg, 2, help), RBX_HELP);
	const char *bad[] = {"verify", "--suite", "spitzer", "--model", "matrix"};
	ASSERT_EQ(rbx_config_parse_args(cfg, 5, bad), RBX_OK);
	EXPECT_EQ(rbx_run(cfg, &rep), RBX_CONFIG_ERROR);
	EXPECT_EQ(rep, nullptr);
	EXPECT_EQ(rbx_run(nullptr, &rep), RBX_INVALID_ARGUMENT);
	EXPECT_EQ(rbx_report_passed(nullptr), -1);
	rbx_config_free(cfg);
}

TEST(CApi, WriteFailureIsIoError)
{
	rbx_config *cfg = rbx_config_new();
	rbx_config_set(cfg, "suite", "magnus");
	rbx_config_set(cfg, "output", "/nonexistent/dir/report.json");
	rbx_report *rep = nullptr;
	ASSERT_EQ(rbx_run(cfg, &rep), RBX_OK);
	EXPECT_EQ(rbx_report_write(rep, cfg), RBX_IO_ERROR);
	rbx_report_free(rep);
	rbx_config_free(cfg);
}

// ---- command line -----------------------------------------------------------

TEST(Cli, ExitCodes)
{
	EXPECT_EQ(run_cli("verify --suite magnus").exit_code, 0);
	EXPECT_EQ(run_cli("verify --suite rb-laws --model matrix --fault subdiagonal "
	                  "--trials 10")
	              .exit_code,
	          1);
	EXPECT_EQ(run_cli("verify --weight 1/0").exit_code, 2);
	EXPECT_EQ(run_cli("verify --nope").exit_code, 2);
	EXPECT_EQ(run_cli("verify --suite spitzer --model matrix").exit_code, 2);
	EXPECT_EQ(run_cli("").exit_code, 2);
	EXPECT_EQ(run_cli("frobnicate").exit_code, 2);
	EXPECT_EQ(run_cli("verify --suite magnus --output /nonexistent/x.json")
	              .exit_code,
	          2);
	const auto help = run_cli("verify --help");
	EXPECT_EQ(help.exit_code, 0);
	EXPECT_NE(help.out.find("--seed"), std::string::npos);
}

TEST(Cli, WritesReportFile)
{
	const auto path = std::filesystem::temp_directory_path() / "rbx_cli.json";
	std::filesystem::remove(path);
	ASSERT_EQ(run_cli("verify --suite magnus --format json --output " +
	                  path.string())
	              .exit_code,
	          0);
	std::ifstream in(path);
	const auto j = json::parse(in);
	EXPECT_EQ(j["failed"], 0);
	EXPECT_GT(j["passed"], 0);
}

TEST(Cli, JsonIsDeterministicModuloElapsed)
{
	const std::string args =
	    "verify --suite yang-baxter --seed 42 --format json";
	auto a = json::parse(run_cli(args).out);
	auto b = json::parse(run_cli(args).out);
	a.erase("elapsed_ms");
	b.erase("elapsed_ms");
	EXPECT_EQ(a.dump(), b.dump());
}
