#pragma once

#include <optional>
#include <string>

#include "algebra/rb_algebra.hpp"
#include "exact/series.hpp"

namespace rbx {

/// Series over the carrier of an algebra.
template <class C> using SeriesOf = LambdaSeries<typename C::Element>;

template <class C> SeriesOf<C> zero_series(const RBAlgebra<C> &alg, int order)
{
	return SeriesOf<C>::filled(alg.zero(), order);
}

/// lambda^degree x
template <class C>
SeriesOf<C> lambda_power(const RBAlgebra<C> &alg, const typename C::Element &x,
                         int degree, int order)
{
	return SeriesOf<C>::monomial(x, degree, alg.zero(), order);
}

/// R applied coefficientwise.
template <class C>
SeriesOf<C> apply_R(const RBAlgebra<C> &alg, const SeriesOf<C> &s)
{
	return s.map([&](const auto &c) { return alg.R(c); });
}

/// (A |>_theta B)_k = sum_{i+j=k} A_i |>_theta B_j
template <class C>
SeriesOf<C> series_prelie(const RBAlgebra<C> &alg, const SeriesOf<C> &a,
                          const SeriesOf<C> &b)
{
	a.check_same_order(b);
	auto out = zero_series(alg, a.order());
	for (int i = 0; i <= a.order(); ++i)
	{
		if (a[i] == alg.zero())
			continue;
		for (int j = 0; i + j <= a.order(); ++j)
			out[i + j] = out[i + j] + prelie_left(alg, a[i], b[j]);
	}
	return out;
}

/// Describes the first lambda-degree where two series differ.
template <class C>
std::optional<std::string> series_mismatch(const RBAlgebra<C> &alg,
                                           const std::string &what,
                                           const SeriesOf<C> &lhs,
                                           const SeriesOf<C> &rhs)
{
	auto k = first_difference(lhs, rhs);
	if (!k)
		return std::nullopt;
	return what + " differs at lambda^" + std::to_string(*k) +
	       ": lhs = " + alg.render(lhs[*k]) + ", rhs = " + alg.render(rhs[*k]);
}

} // namespace rbx
