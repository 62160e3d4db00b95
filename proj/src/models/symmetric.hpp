#pragma once

#include <functional>
#include <string>
#include <vector>

#include "algebra/check_result.hpp"
#include "exact/errors.hpp"
#include "models/models.hpp"

namespace rbx {

/// R^{(n)}(x) = R(R^{(n-1)}(x) x), R^{(1)}(x) = R(x).
template <class C>
typename C::Element iterated_R(const RBAlgebra<C> &alg,
                               const typename C::Element &x, int n)
{
	auto r = alg.R(x);
	for (int k = 2; k <= n; ++k)
		r = alg.R(r * x);
	return r;
}

/// sum over i_1 < ... < i_n < k (indices from 1) of x_{i_1}...x_{i_n}, by
/// direct enumeration of ordered index subsets.
template <class Poly> Poly ordered_elementary(int n, int k, int cap)
{
	Poly out(cap);
	std::vector<int> idx;
	std::function<void(int)> rec = [&](int next) {
		if (static_cast<int>(idx.size()) == n)
		{
			out.add_term(Word(idx), Rational(1));
			return;
		}
		for (int i = next; i < k; ++i)
		{
			idx.push_back(i);
			rec(i + 1);
			idx.pop_back();
		}
	};
	rec(1);
	return out;
}

/// sum_{i<k} x_i^n
template <class Poly> Poly power_sum(int n, int k, int cap)
{
	Poly out(cap);
	for (int i = 1; i < k; ++i)
		out.add_term(Word(std::vector<int>(n, i)), Rational(1));
	return out;
}

/// Entry k of R^{(n)}(x) for the generator sequence x is the elementary
/// symmetric function e_n(x_1..x_{k-1}) (ordered words in the noncommutative
/// case); in the commutative case entry k of R(x^n) is the power sum.
template <bool Comm>
CheckResult elementary_symmetric_check(const RBAlgebra<StandardCarrier<Comm>> &alg,
                                       int n, int k)
{
	using Poly = typename StandardCarrier<Comm>::Poly;
	const auto &car = alg.carrier;
	if (n < 1)
		throw ConfigError("symmetric order must be at least 1");
	if (k < 0 || k >= car.window)
		throw ConfigError("window index " + std::to_string(k) +
		                  " outside window " + std::to_string(car.window));
	if (n > car.cap)
		throw ConfigError("degree cap " + std::to_string(car.cap) +
		                  " below symmetric order " + std::to_string(n));
	const std::string params = "n=" + std::to_string(n) +
	                           ", k=" + std::to_string(k) +
	                           ", window=" + std::to_string(car.window);
	const auto x = car.generator();
	const auto e = iterated_R(alg, x, n)[k];
	const auto e_oracle = ordered_elementary<Poly>(n, k, car.cap);
	if (!(e == e_oracle))
		return CheckResult::fail("elementary-symmetric",
		                         "iterated R and elementary symmetric functions",
		                         alg.label, params, 1,
		                         "R^(n)(x)_k = " + e.str() + ", expected " +
		                             e_oracle.str());
	if constexpr (Comm)
	{
		auto xn = x;
		for (int j = 2; j <= n; ++j)
			xn = xn * x;
		const auto p = alg.R(xn)[k];
		const auto p_oracle = power_sum<Poly>(n, k, car.cap);
		if (!(p == p_oracle))
			return CheckResult::fail("elementary-symmetric",
			                         "R of powers and power sums", alg.label,
			                         params, 2,
			                         "R(x^n)_k = " + p.str() + ", expected " +
			                             p_oracle.str());
	}
	return CheckResult::pass("elementary-symmetric",
	                         "iterated R and elementary symmetric functions",
	                         alg.label, params, Comm ? 2 : 1);
}

/// Delta(R(f)) = f on the window interior.
inline CheckResult check_summation_inverse(const SummationAlgebra &alg,
                                           const SamplePlan &plan)
{
	int cases = 0;
	for (const auto &f : sample_tuples<1>(alg.carrier, plan))
	{
		++cases;
		const auto d = finite_difference(alg.R(f[0]));
		for (std::size_t n = 0; n < d.window(); ++n)
			if (!(d[n] == f[0][n]))
				return CheckResult::fail(
				    "summation-inverse", "summation inverts the difference",
				    alg.label, plan.str(), cases,
				    "f = " + f[0].str() + "; Delta(R f) = " + d.str());
	}
	return CheckResult::pass("summation-inverse",
	                         "summation inverts the difference", alg.label,
	                         plan.str(), cases);
}

} // namespace rbx
