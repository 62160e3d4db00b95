#include <stdio.h>
#include <string.h>

#include "rbx/rbx.h"

static const char *usage =
    "usage: rbx verify [options]\n"
    "       rbx --version\n"
    "Run 'rbx verify --help' for the options.\n";

static int exit_code(rbx_status s)
{
	switch (s)
	{
	case RBX_OK:
	case RBX_HELP:
		return 0;
	case RBX_CHECK_FAILED:
		return 1;
	default:
		return 2;
	}
}

static int report_error(rbx_status s)
{
	fprintf(stderr, "rbx: %s\n", rbx_last_error());
	return exit_code(s);
}

int main(int argc, char **argv)
{
	if (argc < 2)
	{
		fputs(usage, stderr);
		return 2;
	}
	if (strcmp(argv[1], "--help") == 0 || strcmp(argv[1], "-h") == 0)
	{
		fputs(usage, stdout);
		return 0;
	}
	if (strcmp(argv[1], "--version") == 0)
	{
		printf("rbx %s\n", rbx_version());
		return 0;
	}
	if (strcmp(argv[1], "verify") != 0)
	{
		fprintf(stderr, "rbx: unknown command '%s'\n%s", argv[1], usage);
		return 2;
	}

	rbx_config *cfg = rbx_config_new();
	if (cfg == NULL)
	{
		fputs("rbx: out of memory\n", stderr);
		return 2;
	}
	rbx_status s =
	    rbx_config_parse_args(cfg, argc - 1, (const char *const *)(argv + 1));
	if (s == RBX_HELP)
	{
		fputs(rbx_last_error(), stdout);
		rbx_config_free(cfg);
		return 0;
	}
	if (s != RBX_OK)
	{
		rbx_config_free(cfg);
		return report_error(s);
	}

	rbx_report *report = NULL;
	s = rbx_run(cfg, &report);
	if (report == NULL)
	{
		rbx_config_free(cfg);
		return report_error(s);
	}
	rbx_status w = rbx_report_write(report, cfg);
	rbx_report_free(report);
	rbx_config_free(cfg);
	if (w != RBX_OK)
		return report_error(w);
	return exit_code(s);
}
