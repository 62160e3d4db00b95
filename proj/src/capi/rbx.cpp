#include "rbx/rbx.h"

#include <cstdlib>
#include <cstring>
#include <new>

#include "cli/config.hpp"
#include "cli/report.hpp"
#include "cli/suites.hpp"

struct rbx_config
{
	rbx::SuiteConfig cfg;
};

struct rbx_report
{
	rbx::Report report;
	std::vector<std::string> names;
};

namespace {

thread_local std::string last_error;

rbx_status fail(rbx_status s, std::string message)
{
	last_error = std::move(message);
	return s;
}

/// Maps exceptions to status codes; must be called inside a catch block.
rbx_status translate()
{
	try
	{
		throw;
	}
	catch (const rbx::HelpRequested &e)
	{
		return fail(RBX_HELP, e.what());
	}
	catch (const rbx::ConfigError &e)
	{
		return fail(RBX_CONFIG_ERROR, e.what());
	}
	catch (const rbx::IoError &e)
	{
		return fail(RBX_IO_ERROR, e.what());
	}
	catch (const std::bad_alloc &)
	{
		return fail(RBX_RUNTIME_ERROR, "out of memory");
	}
	catch (const std::exception &e)
	{
		return fail(RBX_RUNTIME_ERROR, e.what());
	}
	catch (...)
	{
		return fail(RBX_RUNTIME_ERROR, "unknown error");
	}
}

template <class F> rbx_status guarded(F &&f)
{
	try
	{
		last_error.clear();
		return f();
	}
	catch (...)
	{
		return translate();
	}
}

bool valid(const rbx_report *r, std::size_t i)
{
	return r != nullptr && i < r->report.checks.size();
}

} // namespace

extern "C" {

const char *rbx_version(void) { return RBX_VERSION_STRING; }

const char *rbx_last_error(void) { return last_error.c_str(); }

rbx_config *rbx_config_new(void)
{
	return new (std::nothrow) rbx_config{};
}

void rbx_config_free(rbx_config *cfg) { delete cfg; }

rbx_status rbx_config_parse_args(rbx_config *cfg, int argc,
                                 const char *const *argv)
{
	if (cfg == nullptr || argc < 1 || argv == nullptr)
		return fail(RBX_INVALID_ARGUMENT, "null config or empty argv");
	return guarded([&] {
		std::vector<std::string> args(argv, argv + argc);
		cfg->cfg = rbx::parse_config(args);
		return RBX_OK;
	});
}

rbx_status rbx_config_set(rbx_config *cfg, const char *key, const char *value)
{
	if (cfg == nullptr || key == nullptr || value == nullptr)
		return fail(RBX_INVALID_ARGUMENT, "null argument");
	return guarded([&] {
		auto next = cfg->cfg;
		rbx::set_config_value(next, key, value);
		next.validate();
		cfg->cfg = std::move(next);
		return RBX_OK;
	});
}

rbx_status rbx_run(const rbx_config *cfg, rbx_report **out)
{
	if (out != nullptr)
		*out = nullptr;
	if (cfg == nullptr || out == nullptr)
		return fail(RBX_INVALID_ARGUMENT, "null argument");
	return guarded([&] {
		auto *r = new rbx_report{rbx::run_suite(cfg->cfg), {}};
		for (const auto &c : r->report.checks)
			r->names.push_back(rbx::report_name(c));
		*out = r;
		return r->report.failed() > 0 ? RBX_CHECK_FAILED : RBX_OK;
	});
}

void rbx_report_free(rbx_report *report) { delete report; }

int rbx_report_passed(const rbx_report *report)
{
	return report ? report->report.passed() : -1;
}

int rbx_report_failed(const rbx_report *report)
{
	return report ? report->report.failed() : -1;
}

int64_t rbx_report_elapsed_ms(const rbx_report *report)
{
	return report ? report->report.elapsed_ms : -1;
}

size_t rbx_report_check_count(const rbx_report *report)
{
	return report ? report->report.checks.size() : 0;
}

const char *rbx_report_check_name(const rbx_report *report, size_t index)
{
	return valid(report, index) ? report->names[index].c_str() : nullptr;
}

int rbx_report_check_passed(const rbx_report *report, size_t index)
{
	return valid(report, index) ? (report->report.checks[index].passed ? 1 : 0)
	                            : -1;
}

const char *rbx_report_check_counterexample(const rbx_report *report,
                                            size_t index)
{
	if (!valid(report, index))
		return nullptr;
	const auto &c = report->report.checks[index].counterexample;
	return c ? c->c_str() : nullptr;
}

rbx_status rbx_report_render(const rbx_report *report, const char *format,
                             char **out)
{
	if (out != nullptr)
		*out = nullptr;
	if (report == nullptr || format == nullptr || out == nullptr)
		return fail(RBX_INVALID_ARGUMENT, "null argument");
	return guarded([&] {
		const auto text = rbx::render_report(report->report, format);
		char *buf = static_cast<char *>(std::malloc(text.size() + 1));
		if (buf == nullptr)
			throw std::bad_alloc();
		std::memcpy(buf, text.c_str(), text.size() + 1);
		*out = buf;
		return RBX_OK;
	});
}

void rbx_string_free(char *s) { std::free(s); }

rbx_status rbx_report_write(const rbx_report *report, const rbx_config *cfg)
{
	if (report == nullptr || cfg == nullptr)
		return fail(RBX_INVALID_ARGUMENT, "null argument");
	return guarded([&] {
		rbx::emit_report(report->report, cfg->cfg.format, cfg->cfg.output);
		return RBX_OK;
	});
}

} // extern "C"
