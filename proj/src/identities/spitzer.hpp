#pragma once

#include <optional>
#include <string>

#include "algebra/check_result.hpp"
#include "algebra/laws.hpp"
#include "exact/errors.hpp"
#include "identities/fixed_point.hpp"
#include "identities/magnus.hpp"

namespace rbx {

/// theta^{-1} log(1 + theta lambda x) = sum_n (-1)^{n+1} theta^{n-1} x^n lambda^n / n.
/// At theta = 0 only the n = 1 term survives.
template <class C>
SeriesOf<C> spitzer_log_series(const RBAlgebra<C> &alg,
                               const typename C::Element &x, int order)
{
	auto s = zero_series(alg, order);
	auto power = alg.one();
	for (int n = 1; n <= order; ++n)
	{
		power = power * x;
		Rational c = pow(alg.weight, n - 1) / Rational(n);
		s[n] = (n % 2 == 1 ? c : -c) * power;
	}
	return s;
}

/// log(1 + sum_{n>0} lambda^n R^{(n)}(x)) = R(theta^{-1} log(1 + theta lambda x))
/// in a commutative algebra, together with Omega'_theta(lambda x) =
/// theta^{-1} log(1 + theta lambda x).
template <class C>
CheckResult spitzer_check_commutative(const RBAlgebra<C> &alg,
                                      const typename C::Element &x, int order)
{
	if (!alg.commutative())
		throw PreconditionError("Spitzer's identity needs a commutative carrier");
	const std::string params =
	    "order=" + std::to_string(order) + ", x = " + alg.render(x);
	const auto f = solve_fixed_point(alg, x, FixedPointSide::left_R, order);
	const auto closed = spitzer_log_series(alg, x, order);
	auto failure = series_mismatch(alg, "log f = R(theta^-1 log(1+theta lambda x))",
	                               series_log(alg, f), apply_R(alg, closed));
	if (!failure)
		failure = series_mismatch(alg, "Omega' = theta^-1 log(1+theta lambda x)",
		                          prelie_magnus(alg, x, order).omega, closed);
	if (failure)
		return CheckResult::fail("spitzer", "Spitzer identity", alg.label, params,
		                         1, *failure);
	return CheckResult::pass("spitzer", "Spitzer identity", alg.label, params, 1);
}

/// R(Omega'(lambda x)) = log f, coefficientwise.
template <class C>
CheckResult check_nc_spitzer(const RBAlgebra<C> &alg,
                             const typename C::Element &x, int order)
{
	const std::string params =
	    "order=" + std::to_string(order) + ", x = " + alg.render(x);
	const auto f = solve_fixed_point(alg, x, FixedPointSide::left_R, order);
	const auto omega = prelie_magnus(alg, x, order).omega;
	if (auto failure = series_mismatch(alg, "R(Omega'(lambda x)) = log f",
	                                   apply_R(alg, omega), series_log(alg, f)))
		return CheckResult::fail("nc-spitzer", "noncommutative Spitzer identity",
		                         alg.label, params, 1, *failure);
	return CheckResult::pass("nc-spitzer", "noncommutative Spitzer identity",
	                         alg.label, params, 1);
}

} // namespace rbx
