#include "cli/suites.hpp"

#include <chrono>
#include <functional>
#include <map>

#include "algebra/laws.hpp"
#include "combinatorics/word_checks.hpp"
#include "identities/atkinson.hpp"
#include "identities/bohnenblust_spitzer.hpp"
#include "identities/flows.hpp"
#include "identities/magnus.hpp"
#include "identities/shuffle_identity.hpp"
#include "identities/spitzer.hpp"
#include "models/models.hpp"
#include "models/symmetric.hpp"
#include "models/vector_field.hpp"
#include "yang_baxter/dendriform.hpp"
#include "yang_baxter/tensor.hpp"
#include "yang_baxter/ybe.hpp"

namespace rbx {

namespace {

const std::vector<std::string> all_models{"standard-comm", "standard-nc",
                                          "summation",     "laurent",
                                          "matrix",        "integration"};

struct Context
{
	const SuiteConfig &cfg;
	bool auto_models;
	std::vector<CheckResult> checks;

	SamplePlan random() const
	{
		return SamplePlan::random(cfg.trials, cfg.seed);
	}
	SamplePlan exhaustive() const { return SamplePlan::exhaustive(); }
	void add(CheckResult r, const std::string &tag = "")
	{
		if (!tag.empty())
			r.name += "/" + tag;
		checks.push_back(std::move(r));
	}
};

// ---- models ---------------------------------------------------------------

template <class C>
RBAlgebra<C> with_weight(RBAlgebra<C> alg, const SuiteConfig &cfg)
{
	if (!cfg.weight || *cfg.weight == alg.weight)
		return alg;
	if (alg.weight.is_zero())
		throw ConfigError("model " + alg.label +
		                  " has weight 0 and cannot be rescaled to weight " +
		                  cfg.weight->str());
	return rescaled(alg, *cfg.weight / alg.weight);
}

StandardCommAlgebra std_comm(const SuiteConfig &c)
{
	return with_weight(make_standard_comm(c.window, c.cap, c.alphabet), c);
}
StandardNCAlgebra std_nc(const SuiteConfig &c)
{
	return with_weight(make_standard_nc(c.window, c.cap, c.alphabet), c);
}
SummationAlgebra summation(const SuiteConfig &c)
{
	return with_weight(make_summation(c.window), c);
}
LaurentAlgebra laurent(const SuiteConfig &c)
{
	return with_weight(make_laurent(), c);
}
MatrixAlgebra matrix(const SuiteConfig &c)
{
	return with_weight(c.fault == "subdiagonal" ? make_corrupted_matrix(c.dim)
	                                            : make_matrix(c.dim),
	                   c);
}
IntegrationAlgebra integration(const SuiteConfig &c)
{
	return with_weight(make_integration(), c);
}

/// Calls f with the algebra named `model`.
template <class F>
void with_model(const std::string &model, const SuiteConfig &cfg, F &&f)
{
	if (model == "standard-comm")
		f(std_comm(cfg));
	else if (model == "standard-nc")
		f(std_nc(cfg));
	else if (model == "summation")
		f(summation(cfg));
	else if (model == "laurent")
		f(laurent(cfg));
	else if (model == "matrix")
		f(matrix(cfg));
	else if (model == "integration")
		f(integration(cfg));
	else
		throw ConfigError("model '" + model + "' is not an operator model");
}

// Fixed sources for series identities.
template <bool Comm>
SeqElement<Polynomial<Comm>> canonical(const RBAlgebra<StandardCarrier<Comm>> &a)
{
	return a.carrier.generator();
}
ScalarSeq canonical(const SummationAlgebra &a)
{
	auto s = a.zero();
	for (std::size_t k = 0; k < s.window(); ++k)
		s[k] = Rational(static_cast<std::int64_t>(k));
	return s;
}
LaurentElement canonical(const LaurentAlgebra &a)
{
	return a.carrier.monomial(-1, Rational(1)) + a.one() +
	       a.carrier.monomial(1, Rational(2));
}
RatMatrix canonical(const MatrixAlgebra &a)
{
	const int n = a.carrier.dim;
	return RatMatrix::unit(n, 1, 2) + RatMatrix::unit(n, 2, 1);
}
PolyFunction canonical(const IntegrationAlgebra &)
{
	return PolyFunction::monomial(1);
}

/// Random source for series identities. Standard-algebra sources are
/// homogeneous of degree one so that grade n stays in degree n; a constant
/// term would fill every word up to the cap.
template <class C>
typename C::Element series_source(const RBAlgebra<C> &alg, Rng &rng)
{
	if constexpr (std::is_same_v<C, StandardCommCarrier> ||
	              std::is_same_v<C, StandardNCCarrier>)
	{
		using Poly = typename C::Poly;
		const auto &c = alg.carrier;
		auto s = c.zero();
		for (int k = 0; k < c.window; ++k)
		{
			Poly p = Poly::letter(draw(rng, 1, c.alphabet), c.cap,
			                      draw_rational(rng));
			p += Poly::letter(draw(rng, 1, c.alphabet), c.cap, draw_rational(rng));
			s[k] = p;
		}
		return s;
	}
	else
		return alg.carrier.random(rng);
}

/// Seeded random sources; the standard algebras get fewer since their
/// products grow fastest.
template <class C>
std::vector<typename C::Element> random_sources(const RBAlgebra<C> &alg,
                                                const SuiteConfig &cfg,
                                                std::uint64_t salt)
{
	const bool heavy = std::is_same_v<C, StandardCommCarrier> ||
	                   std::is_same_v<C, StandardNCCarrier>;
	const int count = std::min(cfg.trials, heavy ? 2 : 20);
	Rng rng(cfg.seed + salt);
	std::vector<typename C::Element> out;
	for (int i = 0; i < count; ++i)
		out.push_back(series_source(alg, rng));
	return out;
}

/// Folds per-source results into one: the first failure, or a pass counting
/// every case.
template <class S, class F>
CheckResult over_sources(const std::vector<S> &sources, F &&run)
{
	std::optional<CheckResult> first;
	int cases = 0;
	for (std::size_t i = 0; i < sources.size(); ++i)
	{
		auto r = run(sources[i]);
		cases += r.cases;
		if (!r.passed)
		{
			r.cases = cases;
			r.counterexample = "source " + std::to_string(i + 1) + ": " +
			                   r.parameters + "; " + *r.counterexample;
			return r;
		}
		if (!first)
			first = r;
	}
	if (!first)
		throw ConfigError("no sources to check");
	first->cases = cases;
	first->parameters = std::to_string(sources.size()) + " sources";
	return *first;
}

int capped_order(const SuiteConfig &cfg, int limit)
{
	return std::min(cfg.order, limit);
}

/// Series order for a model. On the noncommutative standard algebra the
/// generator's grade n spans (W-1)^n words, so order is held at 5.
template <class C> int series_order(const RBAlgebra<C> &, const SuiteConfig &cfg)
{
	if constexpr (std::is_same_v<C, StandardNCCarrier>)
		return capped_order(cfg, 5);
	else
		return cfg.order;
}

/// Word-model triples are sampled more sparsely; each product expands the
/// full quasi-shuffle.
SamplePlan word_plan(const Context &ctx)
{
	return SamplePlan::random(std::min(ctx.cfg.trials, 50), ctx.cfg.seed);
}

// ---- suites ---------------------------------------------------------------

void rb_laws(Context &ctx, const std::string &model)
{
	with_model(model, ctx.cfg, [&](const auto &alg) {
		ctx.add(check_rb_law(alg, ctx.exhaustive()), "basis");
		ctx.add(check_rb_law(alg, ctx.random()), "random");
		ctx.add(check_linearity(alg, ctx.random()));
		ctx.add(check_carrier_axioms(alg, ctx.random()));
		ctx.add(check_double_assoc_and_hom(alg, ctx.random()));
		ctx.add(check_tilde_rb(alg, ctx.random()));
		ctx.add(check_weight_rescale(alg, Rational(2, 3), ctx.random()));
		ctx.add(check_half_shuffle_sum(alg, ctx.random()));
		ctx.add(check_b_rewrite(alg, ctx.random()));
		// Structural facts of the unscaled operators only: beta R is neither
		// idempotent nor inverse to the difference operator.
		using C = typename std::decay_t<decltype(alg)>::Element;
		if constexpr (std::is_same_v<C, RatMatrix> ||
		              std::is_same_v<C, LaurentElement>)
			if (alg.weight == Rational(-1))
				ctx.add(check_projector(alg, ctx.random()));
		if constexpr (std::is_same_v<C, ScalarSeq>)
			if (alg.weight == Rational(1))
				ctx.add(check_summation_inverse(alg, ctx.random()));
	});
}

void shuffle_suite(Context &ctx, const std::string &model)
{
	if (model == "words")
	{
		ctx.add(check_word_half_products(ctx.cfg.alphabet, Rational(0),
		                                 word_plan(ctx)));
		return;
	}
	auto alg = integration(ctx.cfg);
	ctx.add(check_commutative_half_shuffles(alg, ctx.random()));
	auto plan = ctx.random();
	plan.trials = std::min(plan.trials, 20);
	for (auto [n, m] : {std::pair{1, 1}, {2, 1}, {2, 2}, {3, 2}})
		ctx.add(check_iterated_shuffle(alg, n, m, plan),
		        std::to_string(n) + "x" + std::to_string(m));
}

void quasi_shuffle_suite(Context &ctx, const std::string &model)
{
	if (model == "words")
	{
		ctx.add(check_word_half_products(ctx.cfg.alphabet, Rational(1),
		                                 word_plan(ctx)));
		ctx.add(check_quasi_shuffle_letters(ctx.cfg.alphabet));
		return;
	}
	with_model(model, ctx.cfg, [&](const auto &alg) {
		ctx.add(check_commutative_half_shuffles(alg, ctx.random()));
		ctx.add(check_quasi_shuffle_expansions(alg, ctx.random()));
	});
}

TensorR e12_tensor(int dim)
{
	return TensorR{dim,
	               {{RatMatrix::unit(dim, 1, 2), RatMatrix::unit(dim, 1, 2)}}};
}

void dendriform_suite(Context &ctx, const std::string &model)
{
	if (model == "words")
	{
		ctx.add(check_word_half_products(ctx.cfg.alphabet, Rational(0),
		                                 word_plan(ctx)));
		return;
	}
	if (model == "matrix")
	{
		auto alg = with_weight(rb_from_tensor(e12_tensor(ctx.cfg.dim)), ctx.cfg);
		ctx.add(check_dendriform(alg, ctx.exhaustive()), "basis");
		ctx.add(check_dendriform(alg, ctx.random()), "random");
		return;
	}
	ctx.add(check_dendriform(integration(ctx.cfg), ctx.random()));
}

void prelie_suite(Context &ctx, const std::string &model)
{
	with_model(model, ctx.cfg, [&](const auto &alg) {
		// Triple products on window polynomials are the costliest samples.
		auto plan = ctx.random();
		if (model == "standard-comm" || model == "standard-nc")
			plan.trials = std::min(plan.trials, 50);
		ctx.add(check_prelie_axiom(alg, plan));
	});
}

void spitzer_suite(Context &ctx, const std::string &model)
{
	const int n = ctx.cfg.order;
	with_model(model, ctx.cfg, [&](const auto &alg) {
		if (!alg.commutative())
			throw ConfigError("spitzer needs a commutative model, got " + model);
		ctx.add(spitzer_check_commutative(alg, canonical(alg), n), "canonical");
		ctx.add(over_sources(random_sources(alg, ctx.cfg, 1),
		                     [&](const auto &x) {
			                     return spitzer_check_commutative(alg, x, n);
		                     }),
		        "random");
	});
}

void nc_spitzer_suite(Context &ctx, const std::string &model)
{
	auto run = [&](const auto &alg) {
		const int n = series_order(alg, ctx.cfg);
		ctx.add(check_nc_spitzer(alg, canonical(alg), n), "canonical");
		ctx.add(over_sources(random_sources(alg, ctx.cfg, 2),
		                     [&](const auto &x) {
			                     return check_nc_spitzer(alg, x, n);
		                     }),
		        "random");
	};
	with_model(model, ctx.cfg, run);
	if (model == "standard-nc" && ctx.auto_models && !ctx.cfg.weight)
		run(rescaled(std_nc(ctx.cfg), Rational(2, 3)));
}

template <class C>
void magnus_checks(Context &ctx, const RBAlgebra<C> &alg,
                   const typename C::Element &x, const std::string &tag)
{
	const auto om = prelie_magnus(alg, x, 4).omega;
	const auto t = magnus_terms(alg, x);
	const std::string params = "x = " + alg.render(x);
	auto check = [&](const std::string &name, int k, const auto &expected,
	                 const std::string &what) {
		if (om[k] == expected)
			return CheckResult::pass(name, "pre-Lie Magnus expansion", alg.label,
			                         params, 1);
		return CheckResult::fail(name, "pre-Lie Magnus expansion", alg.label,
		                         params, 1,
		                         "lambda^" + std::to_string(k) + " coefficient " +
		                             alg.render(om[k]) + " != " + what + " = " +
		                             alg.render(expected));
	};
	ctx.add(check("magnus-lambda1", 1, x, "x"), tag);
	ctx.add(check("magnus-lambda2", 2, t.lambda2(), "1/2 x|>x"), tag);
	ctx.add(check("magnus-lambda3", 3, t.lambda3(),
	              "1/4 (x|>x)|>x + 1/12 x|>(x|>x)"),
	        tag);
	ctx.add(check("magnus-lambda4", 4, t.lambda4_terms(+1),
	              "1/8 ((x|>x)|>x)|>x + 1/24 [(x|>(x|>x))|>x + x|>((x|>x)|>x) + "
	              "(x|>x)|>(x|>x)]"),
	        tag);
	ctx.add(check("magnus-lambda4-reduced", 4, t.lambda4_reduced(+1),
	              "1/6 ((x|>x)|>x)|>x + 1/12 x|>((x|>x)|>x)"),
	        tag);
}

void magnus_suite(Context &ctx, const std::string &model)
{
	if (model == "matrix")
	{
		auto alg = matrix(ctx.cfg);
		magnus_checks(ctx, alg, canonical(alg), "canonical");
		Rng rng(ctx.cfg.seed + 3);
		magnus_checks(ctx, alg, alg.carrier.random(rng), "random");
		return;
	}
	auto alg = std_nc(ctx.cfg);
	if (alg.carrier.cap < 4)
		throw ConfigError("magnus needs a degree cap of at least 4");
	magnus_checks(ctx, alg, canonical(alg), "generator");
}

void bs_suite(Context &ctx, const std::string &model)
{
	const int max_n = ctx.cfg.bs_arity;
	auto run = [&](const auto &alg) {
		using C = std::decay_t<decltype(alg.carrier)>;
		Rng rng(ctx.cfg.seed + 4);
		for (int n = std::min(2, max_n); n <= max_n; ++n)
		{
			BSOperands<C> ops;
			for (int j = 0; j < n; ++j)
				ops.F.push_back(alg.carrier.random(rng));
			const std::string tag = "n=" + std::to_string(n);
			ctx.add(check_bohnenblust_spitzer(alg, ops, BSForm::cycles_prelie), tag);
			if (alg.commutative())
				ctx.add(check_bohnenblust_spitzer(alg, ops,
				                                  BSForm::commutative_partitions),
				        tag);
			if (alg.commutative() && alg.weight.is_zero())
				ctx.add(check_bohnenblust_spitzer(alg, ops, BSForm::weight_zero),
				        tag);
		}
	};
	with_model(model, ctx.cfg, run);
	if (model == "standard-nc" && ctx.auto_models && !ctx.cfg.weight)
		run(rescaled(std_nc(ctx.cfg), Rational(2, 3)));
}

void atkinson_suite(Context &ctx, const std::string &model)
{
	with_model(model, ctx.cfg, [&](const auto &alg) {
		const int n = series_order(alg, ctx.cfg);
		ctx.add(check_atkinson(alg, canonical(alg), n), "canonical");
		ctx.add(over_sources(random_sources(alg, ctx.cfg, 5),
		                     [&](const auto &x) {
			                     return check_atkinson(alg, x, n);
		                     }),
		        "random");
		ctx.add(check_atkinson_lemma(alg, ctx.random()));
	});
}

void bogoliubov_suite(Context &ctx, const std::string &)
{
	auto alg = laurent(ctx.cfg);
	const int n = ctx.cfg.order;
	auto single = zero_series(alg, n);
	single[1] = alg.carrier.monomial(-1, Rational(1)) + alg.one();
	ctx.add(check_bogoliubov(alg, single), "single-grade");

	Rng rng(ctx.cfg.seed + 6);
	std::vector<SeriesOf<LaurentCarrier>> inputs;
	for (int t = 0; t < std::min(ctx.cfg.trials, 20); ++t)
	{
		auto x = zero_series(alg, n);
		for (int j = 1; j <= n; ++j)
			for (int k = -2; k <= 1; ++k)
				x[j] = x[j] + alg.carrier.monomial(k, draw_rational(rng));
		inputs.push_back(std::move(x));
	}
	ctx.add(over_sources(inputs, [&](const auto &x) {
		        return check_bogoliubov(alg, x);
	        }),
	        "random");
}

void flows_suite(Context &ctx, const std::string &model)
{
	const int bch_order = capped_order(ctx.cfg, 4);
	const int product_order = capped_order(ctx.cfg, max_bch_order);
	with_model(model, ctx.cfg, [&](const auto &alg) {
		using E = typename std::decay_t<decltype(alg)>::Element;
		std::vector<std::pair<E, E>> pairs;
		if constexpr (std::is_same_v<E, RatMatrix>)
		{
			const auto basis = alg.carrier.basis();
			std::vector<std::pair<E, E>> units;
			for (const auto &a : basis)
				for (const auto &b : basis)
					units.emplace_back(a, b);
			const int unit_order = std::min(bch_order, 3);
			ctx.add(over_sources(units, [&](const auto &p) {
				        return check_flows_bch(alg, p.first, p.second, unit_order);
			        }),
			        "units");
			ctx.add(over_sources(units, [&](const auto &p) {
				        return check_flows_product(alg, p.first, p.second,
				                                   std::min(product_order, 4));
			        }),
			        "units");
		}
		else
			pairs.emplace_back(canonical(alg), alg.R(canonical(alg)));
		auto xs = random_sources(alg, ctx.cfg, 7);
		auto ys = random_sources(alg, ctx.cfg, 8);
		for (std::size_t i = 0; i < xs.size(); ++i)
			pairs.emplace_back(xs[i], ys[i]);
		ctx.add(over_sources(pairs, [&](const auto &p) {
			        return check_flows_bch(alg, p.first, p.second, bch_order);
		        }),
		        "random");
		ctx.add(over_sources(pairs, [&](const auto &p) {
			        return check_flows_product(alg, p.first, p.second,
			                                   product_order);
		        }),
		        "random");
	});
}

void yang_baxter_suite(Context &ctx, const std::string &model)
{
	if (model == "matrix")
	{
		const auto r = e12_tensor(2);
		ctx.add(aybe_check(r, AYBEForm::printed));
		ctx.add(aybe_check(r, AYBEForm::conventional));
		auto induced = rb_from_tensor(r);
		ctx.add(check_rb_law(induced, ctx.exhaustive()), "tensor");
		ctx.add(check_operator_ybe(induced, ctx.exhaustive()), "tensor");
		for (int dim : {2, 3})
			ctx.add(check_aybe_implies_rb(dim, AYBEForm::conventional),
			        "dim=" + std::to_string(dim));
	}
	with_model(model, ctx.cfg, [&](const auto &alg) {
		ctx.add(check_modified_ybe(alg, ctx.random()));
		ctx.add(check_lie_rb_law(alg, ctx.random()));
		if (alg.weight.is_zero())
			ctx.add(check_operator_ybe(alg, ctx.random()));
	});
}

void symmetric_suite(Context &ctx, const std::string &model)
{
	auto run = [&](const auto &alg) {
		const int max_n = std::min(4, alg.carrier.cap);
		for (int n = 1; n <= max_n; ++n)
		{
			std::vector<int> ks;
			for (int k = 0; k < alg.carrier.window; ++k)
				ks.push_back(k);
			ctx.add(over_sources(ks, [&](int k) {
				        return elementary_symmetric_check(alg, n, k);
			        }),
			        "n=" + std::to_string(n));
		}
	};
	if (model == "standard-comm")
		run(std_comm(ctx.cfg));
	else
		run(std_nc(ctx.cfg));
}

struct SuiteEntry
{
	SuiteInfo info;
	std::function<void(Context &, const std::string &)> run;
	std::function<void(Context &)> extras; // model-free checks under auto
};

const std::vector<SuiteEntry> &entries()
{
	static const std::vector<SuiteEntry> table{
	    {{"rb-laws", all_models, all_models}, rb_laws, {}},
	    {{"shuffle", {"words", "integration"}, {"words", "integration"}},
	     shuffle_suite,
	     {}},
	    {{"quasi-shuffle",
	      {"words", "standard-comm", "summation", "laurent"},
	      {"words", "standard-comm", "summation"}},
	     quasi_shuffle_suite,
	     {}},
	    {{"dendriform",
	      {"words", "integration", "matrix"},
	      {"integration", "matrix"}},
	     dendriform_suite,
	     {}},
	    {{"prelie", all_models, all_models},
	     prelie_suite,
	     [](Context &ctx) { ctx.add(check_vector_field_prelie(4)); }},
	    {{"spitzer",
	      {"standard-comm", "integration", "summation", "laurent"},
	      {"standard-comm", "integration", "summation", "laurent"}},
	     spitzer_suite,
	     {}},
	    {{"nc-spitzer", all_models, {"matrix", "standard-nc", "standard-comm"}},
	     nc_spitzer_suite,
	     {}},
	    {{"magnus", {"words", "standard-nc", "matrix"}, {"words", "matrix"}},
	     magnus_suite,
	     {}},
	    {{"bohnenblust-spitzer", all_models, all_models}, bs_suite, {}},
	    {{"atkinson", all_models, all_models}, atkinson_suite, {}},
	    {{"bogoliubov", {"laurent"}, {"laurent"}}, bogoliubov_suite, {}},
	    {{"flows-bch",
	      all_models,
	      {"matrix", "standard-comm", "laurent", "integration"}},
	     flows_suite,
	     {}},
	    {{"yang-baxter", all_models, all_models}, yang_baxter_suite, {}},
	    {{"standard-symmetric",
	      {"standard-comm", "standard-nc"},
	      {"standard-comm", "standard-nc"}},
	     symmetric_suite,
	     {}},
	};
	return table;
}

bool accepts(const SuiteInfo &info, const std::string &model)
{
	return std::find(info.compatible.begin(), info.compatible.end(), model) !=
	       info.compatible.end();
}

void run_entry(Context &ctx, const SuiteEntry &e)
{
	if (ctx.auto_models)
	{
		for (const auto &m : e.info.defaults)
			e.run(ctx, m);
		if (e.extras)
			e.extras(ctx);
	}
	else
		e.run(ctx, ctx.cfg.model);
}

std::vector<std::pair<std::string, std::string>> resolved_params(
    const SuiteConfig &cfg)
{
	return {{"suite", cfg.suite},
	        {"model", cfg.model},
	        {"order", std::to_string(cfg.order)},
	        {"window", std::to_string(cfg.window)},
	        {"dim", std::to_string(cfg.dim)},
	        {"weight", cfg.weight ? cfg.weight->str() : "model"},
	        {"alphabet", std::to_string(cfg.alphabet)},
	        {"bs-arity", std::to_string(cfg.bs_arity)},
	        {"trials", std::to_string(cfg.trials)},
	        {"seed", std::to_string(cfg.seed)},
	        {"cap", std::to_string(cfg.cap)},
	        {"fault", cfg.fault}};
}

} // namespace

const std::vector<SuiteInfo> &suite_catalog()
{
	static const std::vector<SuiteInfo> infos = [] {
		std::vector<SuiteInfo> out;
		for (const auto &e : entries())
			out.push_back(e.info);
		return out;
	}();
	return infos;
}

Report run_suite(const SuiteConfig &cfg)
{
	cfg.validate();
	const auto start = std::chrono::steady_clock::now();
	Context ctx{cfg, cfg.model == "auto", {}};
	if (cfg.suite == "all")
	{
		for (const auto &e : entries())
			if (ctx.auto_models || accepts(e.info, cfg.model))
				run_entry(ctx, e);
	}
	else
	{
		const auto &table = entries();
		auto it = std::find_if(table.begin(), table.end(), [&](const auto &e) {
			return e.info.name == cfg.suite;
		});
		if (it == table.end())
			throw ConfigError("unknown suite '" + cfg.suite + "'");
		if (!ctx.auto_models && !accepts(it->info, cfg.model))
			throw ConfigError("suite " + cfg.suite +
			                  " does not run on model " + cfg.model);
		run_entry(ctx, *it);
	}
	Report r{cfg.suite, resolved_params(cfg), std::move(ctx.checks), 0};
	r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
	                   std::chrono::steady_clock::now() - start)
	                   .count();
	return r;
}

} // namespace rbx
