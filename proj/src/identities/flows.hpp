#pragma once

#include <string>

#include "algebra/check_result.hpp"
#include "algebra/laws.hpp"
#include "exact/errors.hpp"
#include "identities/fixed_point.hpp"
#include "identities/magnus.hpp"

namespace rbx {

inline constexpr int max_bch_order = 5;

enum class BCHProduct
{
	carrier, // the algebra product
	dbl      // the double product *_theta
};

/// log(exp(A) exp(B)) for series A, B with zero constant term, in any series
/// ring.
template <SeriesRing Ring>
LambdaSeries<typename Ring::Element>
bch_of_series(const Ring &ring, const LambdaSeries<typename Ring::Element> &a,
              const LambdaSeries<typename Ring::Element> &b)
{
	return series_log(ring,
	                  series_mul(ring, series_exp(ring, a), series_exp(ring, b)));
}

/// BCH of two carrier-valued series, in the carrier product or in *_theta.
template <class C>
SeriesOf<C> bch_series(const RBAlgebra<C> &alg, const SeriesOf<C> &a,
                       const SeriesOf<C> &b, BCHProduct product)
{
	if (a.order() > max_bch_order)
		throw PreconditionError("BCH order must be at most " +
		                        std::to_string(max_bch_order));
	if (product == BCHProduct::carrier)
		return bch_of_series(alg, a, b);
	DoubleProductRing<C> ring{&alg};
	auto lift = [&](const auto &e) { return ring.embed(e); };
	auto out = bch_of_series(ring, a.map(lift), b.map(lift));
	// log of a unit-constant series has zero scalar part in every grade
	return out.map([](const auto &u) { return u.part; });
}

/// log(exp(lambda a) exp(lambda b)) to order N.
template <class C>
SeriesOf<C> bch_series(const RBAlgebra<C> &alg, const typename C::Element &a,
                       const typename C::Element &b, int order,
                       BCHProduct product)
{
	return bch_series(alg, lambda_power(alg, a, 1, order),
	                  lambda_power(alg, b, 1, order), product);
}

enum class FlowsOrder
{
	composed, // y + exp(-l_{Omega'(y) |>}) x: solves l = f_x f_y
	printed   // x + exp(-l_{Omega'(x) |>}) y: solves l = f_y f_x
};

/// u + exp(-l_{Omega'(lambda u) |>})(lambda v), the exponential expanded as
/// sum_k (-1)^k l^k(lambda v) / k!, with (u, v) = (y, x) for the composed
/// order and (x, y) for the printed one.
template <class C>
SeriesOf<C> flows_product(const RBAlgebra<C> &alg, const typename C::Element &x,
                          const typename C::Element &y, int order,
                          FlowsOrder convention = FlowsOrder::composed)
{
	if (order < 1 || order > max_bch_order)
		throw PreconditionError("flows order must be in 1.." +
		                        std::to_string(max_bch_order));
	const bool composed = convention == FlowsOrder::composed;
	const auto &u = composed ? y : x;
	const auto &v = composed ? x : y;
	const auto omega = prelie_magnus(alg, u, order).omega;
	auto term = lambda_power(alg, v, 1, order);
	auto z = lambda_power(alg, u, 1, order) + term;
	// term k has lambda-degree >= k + 1, so k < order suffices
	for (int k = 1; k < order; ++k)
	{
		term = Rational(-1, k) * series_prelie(alg, omega, term);
		z += term;
	}
	return z;
}

namespace detail {

template <class C>
std::string pair_params(const RBAlgebra<C> &alg, const typename C::Element &x,
                        const typename C::Element &y, int order)
{
	return "order=" + std::to_string(order) + ", x = " + alg.render(x) +
	       ", y = " + alg.render(y);
}

} // namespace detail

/// l = 1 + R(l z) is solved by l = f_x f_y, where f_u = 1 + lambda R(f_u u).
template <class C>
CheckResult check_flows_product(const RBAlgebra<C> &alg,
                                const typename C::Element &x,
                                const typename C::Element &y, int order)
{
	const auto z = flows_product(alg, x, y, order);
	const auto l = solve_fixed_point_series(alg, z);
	const auto fx = solve_fixed_point(alg, x, FixedPointSide::left_R, order);
	const auto fy = solve_fixed_point(alg, y, FixedPointSide::left_R, order);
	const auto params = detail::pair_params(alg, x, y, order);
	if (auto failure = series_mismatch(alg, "l = f_x f_y", l,
	                                   series_mul(alg, fx, fy)))
		return CheckResult::fail("flows-product", "group of flows", alg.label,
		                         params, 1, *failure);
	return CheckResult::pass("flows-product", "group of flows", alg.label,
	                         params, 1);
}

/// Omega'(x . y) = BCH_{*theta}(Omega'(x), Omega'(y)).
template <class C>
CheckResult check_flows_bch(const RBAlgebra<C> &alg,
                            const typename C::Element &x,
                            const typename C::Element &y, int order)
{
	if (order > 4)
		throw PreconditionError("flows/BCH check order must be at most 4");
	const auto lhs = prelie_magnus_series(alg, flows_product(alg, x, y, order));
	const auto rhs = bch_series(alg, prelie_magnus(alg, x, order).omega,
	                            prelie_magnus(alg, y, order).omega,
	                            BCHProduct::dbl);
	const auto params = detail::pair_params(alg, x, y, order);
	if (auto failure =
	        series_mismatch(alg, "Omega'(x.y) = BCH*(Omega'(x), Omega'(y))", lhs,
	                        rhs))
		return CheckResult::fail("flows-bch", "flows and BCH", alg.label, params,
		                         1, *failure);
	return CheckResult::pass("flows-bch", "flows and BCH", alg.label, params, 1);
}

} // namespace rbx
