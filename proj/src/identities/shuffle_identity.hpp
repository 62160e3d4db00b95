#pragma once

#include <string>
#include <vector>

#include "algebra/check_result.hpp"
#include "algebra/laws.hpp"
#include "combinatorics/word.hpp"
#include "exact/errors.hpp"

namespace rbx {

/// R(h_1 R(h_2 ... R(h_k)...)) for the elements h_j = pool[w_j - 1].
template <class C>
typename C::Element iterated_image(const RBAlgebra<C> &alg,
                                   const std::vector<typename C::Element> &pool,
                                   const Word &w)
{
	auto acc = alg.R(pool.at(w[w.size() - 1] - 1));
	for (std::size_t i = w.size() - 1; i-- > 0;)
		acc = alg.R(pool.at(w[i] - 1) * acc);
	return acc;
}

/// R(f_1 R(f_2 ... R(f_n)))R(g_1 R(... R(g_m))) = sum over shuffles h of
/// R(h_1 R(h_2 ... R(h_{n+m}))), in a commutative weight-0 algebra.
template <class C>
CheckResult check_iterated_shuffle(const RBAlgebra<C> &alg, int n, int m,
                                   const SamplePlan &plan)
{
	if (!alg.weight.is_zero() || !alg.commutative())
		throw PreconditionError(
		    "iterated shuffle identity needs a commutative weight-0 algebra");
	std::vector<int> fu, gv;
	for (int i = 1; i <= n; ++i)
		fu.push_back(i);
	for (int j = 1; j <= m; ++j)
		gv.push_back(n + j);
	const Word u(fu), v(gv);
	const auto shuffles = shuffle(u, v);
	const std::string params = "n=" + std::to_string(n) +
	                           ", m=" + std::to_string(m) + ", " + plan.str();
	Rng rng(plan.seed);
	const int trials = plan.mode == SamplePlan::Mode::random ? plan.trials : 1;
	for (int t = 1; t <= trials; ++t)
	{
		std::vector<typename C::Element> pool;
		for (int i = 0; i < n + m; ++i)
			pool.push_back(alg.carrier.random(rng));
		auto lhs = iterated_image(alg, pool, u) * iterated_image(alg, pool, v);
		auto rhs = alg.zero();
		for (const auto &h : shuffles)
			rhs = rhs + iterated_image(alg, pool, h);
		if (!(lhs == rhs))
		{
			std::string ops;
			for (int i = 0; i < n + m; ++i)
				ops += (i ? "; " : "") + alg.render(pool[i]);
			return CheckResult::fail("iterated-shuffle",
			                         "shuffle of iterated images", alg.label,
			                         params, t,
			                         "operands [" + ops + "]: lhs = " +
			                             alg.render(lhs) + ", rhs = " +
			                             alg.render(rhs));
		}
	}
	return CheckResult::pass("iterated-shuffle", "shuffle of iterated images",
	                         alg.label, params, trials);
}

} // namespace rbx
