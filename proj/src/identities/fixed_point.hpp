#pragma once

#include "algebra/rb_algebra.hpp"
#include "exact/errors.hpp"
#include "identities/series_ops.hpp"

namespace rbx {

enum class FixedPointSide
{
	left_R,       // f = 1 + lambda R(f x)
	right_Rtilde  // h = 1 + lambda R~(x h)
};

/// Solves f = 1 + lambda R(f x) (f_{n+1} = R(f_n x)) or
/// h = 1 + lambda R~(x h) (h_{n+1} = R~(x h_n)) to order N.
template <class C>
SeriesOf<C> solve_fixed_point(const RBAlgebra<C> &alg,
                              const typename C::Element &x, FixedPointSide side,
                              int order)
{
	if (order < 1)
		throw PreconditionError("fixed point order must be at least 1");
	auto f = zero_series(alg, order);
	f[0] = alg.one();
	for (int n = 0; n < order; ++n)
		f[n + 1] = side == FixedPointSide::left_R
		               ? alg.R(f[n] * x)
		               : tilde_operator(alg, x * f[n]);
	return f;
}

/// Solves l = 1 + R(l z) for a series z with zero constant term:
/// l_n = sum_{k=1}^{n} R(l_{n-k} z_k).
template <class C>
SeriesOf<C> solve_fixed_point_series(const RBAlgebra<C> &alg,
                                     const SeriesOf<C> &z)
{
	if (!(z[0] == alg.zero()))
		throw DomainError("fixed point source must have zero constant term");
	auto l = zero_series(alg, z.order());
	l[0] = alg.one();
	for (int n = 1; n <= z.order(); ++n)
	{
		auto acc = alg.zero();
		for (int k = 1; k <= n; ++k)
			acc = acc + l[n - k] * z[k];
		l[n] = alg.R(acc);
	}
	return l;
}

template <class C> struct FixedPointSolution
{
	SeriesOf<C> f; // f = 1 + lambda R(f x)
	SeriesOf<C> h; // h = 1 + lambda R~(x h)
	typename C::Element source;
	int order;
};

template <class C>
FixedPointSolution<C> solve_both_fixed_points(const RBAlgebra<C> &alg,
                                              const typename C::Element &x,
                                              int order)
{
	return {solve_fixed_point(alg, x, FixedPointSide::left_R, order),
	        solve_fixed_point(alg, x, FixedPointSide::right_Rtilde, order), x,
	        order};
}

} // namespace rbx
