#pragma once

#include <vector>

#include "algebra/rb_algebra.hpp"
#include "exact/bernoulli.hpp"
#include "exact/errors.hpp"
#include "identities/series_ops.hpp"

namespace rbx {

template <class C> struct MagnusExpansion
{
	SeriesOf<C> omega; // Omega'(lambda x), zero constant term
	typename C::Element source;
	Rational weight;
};

/// Coefficient (-1)^n B_n / n! of the n-th iterated left pre-Lie
/// multiplication in the pre-Lie Magnus recursion.
inline Rational magnus_coefficient(unsigned n)
{
	Rational c = bernoulli(n) / factorial(n);
	return n % 2 == 1 ? -c : c;
}

/// Omega' = a + sum_{n>0} ((-1)^n B_n / n!) l^n_{Omega' |>}(a) for a series
/// a with zero constant term, computed grade by grade: the grade-k
/// coefficient reads Omega' only in grades < k.
template <class C>
SeriesOf<C> prelie_magnus_series(const RBAlgebra<C> &alg, const SeriesOf<C> &a)
{
	if (!(a[0] == alg.zero()))
		throw DomainError("Magnus source must have zero constant term");
	const int order = a.order();
	auto omega = zero_series(alg, order);
	// powers[n][k]: grade-k part of l^n_{Omega'}(a); nonzero only for k > n.
	std::vector<SeriesOf<C>> powers(order, zero_series(alg, order));
	powers[0] = a;
	for (int k = 1; k <= order; ++k)
	{
		auto omega_k = a[k];
		for (int n = 1; n < k; ++n)
		{
			auto acc = alg.zero();
			for (int i = 1; i <= k - n; ++i)
				acc = acc + prelie_left(alg, omega[i], powers[n - 1][k - i]);
			powers[n][k] = acc;
			omega_k = omega_k + magnus_coefficient(n) * acc;
		}
		omega[k] = omega_k;
	}
	return omega;
}

/// Pre-Lie Magnus expansion Omega'(lambda x) to order N, defined by
/// R(Omega'(lambda x)) = log f for f = 1 + lambda R(f x).
template <class C>
MagnusExpansion<C> prelie_magnus(const RBAlgebra<C> &alg,
                                 const typename C::Element &x, int order)
{
	if (order < 1)
		throw PreconditionError("Magnus order must be at least 1");
	return {prelie_magnus_series(alg, lambda_power(alg, x, 1, order)), x,
	        alg.weight};
}

} // namespace rbx

namespace rbx {

/// Low-order terms of Omega'(lambda x) as iterated pre-Lie products of x.
template <class C> struct MagnusTerms
{
	using E = typename C::Element;
	E xx;       // x |> x
	E xx_x;     // (x |> x) |> x
	E x_xx;     // x |> (x |> x)
	E xx_x_x;   // ((x |> x) |> x) |> x
	E x_xx__x;  // (x |> (x |> x)) |> x
	E x_xx_x;   // x |> ((x |> x) |> x)
	E xx_xx;    // (x |> x) |> (x |> x)

	E lambda2() const { return Rational(1, 2) * xx; }
	E lambda3() const
	{
		return Rational(1, 4) * xx_x + Rational(1, 12) * x_xx;
	}
	/// The four degree-4 terms with coefficient signs `sign` (+1 is what the
	/// recursion produces).
	E lambda4_terms(int sign) const
	{
		return Rational(sign) * (Rational(1, 8) * xx_x_x +
		                         Rational(1, 24) * (x_xx__x + x_xx_x + xx_xx));
	}
	/// The same after reduction by the pre-Lie relation.
	E lambda4_reduced(int sign) const
	{
		return Rational(sign) *
		       (Rational(1, 6) * xx_x_x + Rational(1, 12) * x_xx_x);
	}
};

template <class C>
MagnusTerms<C> magnus_terms(const RBAlgebra<C> &alg, const typename C::Element &x)
{
	auto p = [&](const auto &a, const auto &b) { return prelie_left(alg, a, b); };
	MagnusTerms<C> t;
	t.xx = p(x, x);
	t.xx_x = p(t.xx, x);
	t.x_xx = p(x, t.xx);
	t.xx_x_x = p(t.xx_x, x);
	t.x_xx__x = p(t.x_xx, x);
	t.x_xx_x = p(x, t.xx_x);
	t.xx_xx = p(t.xx, t.xx);
	return t;
}

} // namespace rbx
