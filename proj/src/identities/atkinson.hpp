#pragma once

#include <optional>
#include <string>

#include "algebra/check_result.hpp"
#include "algebra/laws.hpp"
#include "exact/errors.hpp"
#include "identities/fixed_point.hpp"

namespace rbx {

/// f h = 1 - lambda theta f x h and 1 + lambda theta x = f^{-1} h^{-1}, for
/// f = 1 + lambda R(f x), h = 1 + lambda R~(x h).
template <class C>
CheckResult check_atkinson(const RBAlgebra<C> &alg,
                           const typename C::Element &x, int order)
{
	const std::string params =
	    "order=" + std::to_string(order) + ", x = " + alg.render(x);
	const auto sol = solve_both_fixed_points(alg, x, order);
	const auto &f = sol.f;
	const auto &h = sol.h;
	const auto lx = lambda_power(alg, x, 1, order);
	const auto one = series_unit(alg, order);

	auto fh = series_mul(alg, f, h);
	auto fxh = series_mul(alg, series_mul(alg, f, lx), h);
	auto failure = series_mismatch(alg, "fh = 1 - lambda theta f x h", fh,
	                               one - alg.weight * fxh);
	if (!failure)
		failure = series_mismatch(
		    alg, "1 + lambda theta x = f^-1 h^-1", one + alg.weight * lx,
		    series_mul(alg, series_inverse(alg, f), series_inverse(alg, h)));
	if (failure)
		return CheckResult::fail("atkinson", "Atkinson factorization", alg.label,
		                         params, 1, *failure);
	return CheckResult::pass("atkinson", "Atkinson factorization", alg.label,
	                         params, 1);
}

/// R(a)R~(b) = R(a R~(b)) + R~(R(a) b)
template <class C>
CheckResult check_atkinson_lemma(const RBAlgebra<C> &alg,
                                 const SamplePlan &plan)
{
	return check_over_samples<2>(
	    "atkinson-lemma", "mixed relation R(a)R~(b)", alg, plan,
	    [&](const auto &t) {
		    const auto &[a, b] = t;
		    const auto tb = tilde_operator(alg, b);
		    return mismatch(alg, "R(a)R~(b) = R(aR~(b)) + R~(R(a)b)",
		                    alg.R(a) * tb,
		                    alg.R(a * tb) + tilde_operator(alg, alg.R(a) * b));
	    });
}

template <class C> struct BogoliubovSplit
{
	SeriesOf<C> f;    // counterterm, f - 1 in the image of R
	SeriesOf<C> hinv; // renormalized part, in the image of R~
};

/// Solves h^{-1} = 1 - R~(f x), f = 1 + R(f x) degree by degree for a graded
/// series x with zero constant term. Requires an idempotent R of weight -1
/// with R(1) = 0.
template <class C>
BogoliubovSplit<C> bogoliubov_decompose(const RBAlgebra<C> &alg,
                                        const SeriesOf<C> &x)
{
	if (!(alg.weight == Rational(-1)))
		throw PreconditionError("Bogoliubov recursion needs weight -1");
	if (!(alg.R(alg.one()) == alg.zero()))
		throw PreconditionError("Bogoliubov recursion needs R(1) = 0");
	if (!(x[0] == alg.zero()))
		throw PreconditionError("Bogoliubov input must have zero constant term");
	for (int j = 1; j <= x.order(); ++j)
	{
		auto rx = alg.R(x[j]);
		if (!(alg.R(rx) == rx))
			throw PreconditionError("Bogoliubov recursion needs idempotent R");
	}
	auto f = zero_series(alg, x.order());
	auto hinv = zero_series(alg, x.order());
	f[0] = alg.one();
	hinv[0] = alg.one();
	for (int n = 1; n <= x.order(); ++n)
	{
		auto fx = alg.zero();
		for (int j = 1; j <= n; ++j)
			fx = fx + f[n - j] * x[j];
		f[n] = alg.R(fx);
		hinv[n] = Rational(-1) * tilde_operator(alg, fx);
	}
	return {f, hinv};
}

/// h^{-1} - 1 is killed by R at every grade, f - 1 is killed by R~, and
/// f (1 - x) h = 1 with h the series inverse of h^{-1}.
template <class C>
CheckResult check_bogoliubov(const RBAlgebra<C> &alg, const SeriesOf<C> &x)
{
	std::string params = "order=" + std::to_string(x.order()) + ", x = [";
	for (int j = 1; j <= x.order(); ++j)
		params += (j > 1 ? "; " : "") + alg.render(x[j]);
	params += "]";
	const auto split = bogoliubov_decompose(alg, x);
	const auto one = series_unit(alg, x.order());
	std::optional<std::string> failure;
	for (int n = 1; n <= x.order() && !failure; ++n)
	{
		if (!(alg.R(split.hinv[n]) == alg.zero()))
			failure = "h^-1 has a divergent part at grade " + std::to_string(n) +
			          ": " + alg.render(split.hinv[n]);
		else if (!(tilde_operator(alg, split.f[n]) == alg.zero()))
			failure = "f - 1 has a regular part at grade " + std::to_string(n) +
			          ": " + alg.render(split.f[n]);
	}
	if (!failure)
		failure = series_mismatch(alg, "f(1 - x) = h^-1",
		                          series_mul(alg, split.f, one - x), split.hinv);
	if (!failure)
		failure = series_mismatch(
		    alg, "f(1 - x)h = 1",
		    series_mul(alg, series_mul(alg, split.f, one - x),
		               series_inverse(alg, split.hinv)),
		    one);
	if (failure)
		return CheckResult::fail("bogoliubov", "Bogoliubov recursion", alg.label,
		                         params, 1, *failure);
	return CheckResult::pass("bogoliubov", "Bogoliubov recursion", alg.label,
	                         params, 1);
}

} // namespace rbx
