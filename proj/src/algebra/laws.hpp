#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>

#include "algebra/check_result.hpp"
#include "algebra/rb_algebra.hpp"
#include "algebra/sampling.hpp"

namespace rbx {

/// Renders "what: lhs = ..., rhs = ..." when the sides differ.
template <class C>
std::optional<std::string> mismatch(const RBAlgebra<C> &alg,
                                    const std::string &what,
                                    const typename C::Element &lhs,
                                    const typename C::Element &rhs)
{
	if (lhs == rhs)
		return std::nullopt;
	return what + ": lhs = " + alg.render(lhs) + ", rhs = " + alg.render(rhs);
}

template <class C, std::size_t K>
std::string render_tuple(const RBAlgebra<C> &alg,
                         const std::array<typename C::Element, K> &t)
{
	static constexpr const char *names[] = {"x", "y", "z", "w"};
	std::string s;
	for (std::size_t i = 0; i < K; ++i)
		s += (i ? ", " : "") + std::string(names[i % 4]) + " = " +
		     alg.render(t[i]);
	return s;
}

/// Runs `probe` on every sampled K-tuple and stops at the first failure.
/// `probe` returns a description of the violated equation, or nullopt.
template <std::size_t K, class C, class Probe>
CheckResult check_over_samples(const std::string &name,
                               const std::string &anchor,
                               const RBAlgebra<C> &alg, const SamplePlan &plan,
                               Probe &&probe)
{
	const auto tuples = sample_tuples<K>(alg.carrier, plan);
	int cases = 0;
	for (const auto &t : tuples)
	{
		++cases;
		if (auto failure = probe(t))
			return CheckResult::fail(name, anchor, alg.label, plan.str(), cases,
			                         render_tuple(alg, t) + "; " + *failure);
	}
	return CheckResult::pass(name, anchor, alg.label, plan.str(), cases);
}

/// R(x)R(y) = R(R(x)y + xR(y) + theta xy)
template <class C>
CheckResult check_rb_law(const RBAlgebra<C> &alg, const SamplePlan &plan)
{
	return check_over_samples<2>(
	    "rb-law", "Rota-Baxter relation", alg, plan, [&](const auto &t) {
		    const auto &[x, y] = t;
		    return mismatch(alg, "R(x)R(y) = R(x*y)", alg.R(x) * alg.R(y),
		                    alg.R(double_product(alg, x, y)));
	    });
}

/// R(ax + by) = aR(x) + bR(y) with seeded scalars.
template <class C>
CheckResult check_linearity(const RBAlgebra<C> &alg, const SamplePlan &plan)
{
	Rng rng(plan.seed + 1);
	const Rational a = draw_rational(rng, false), b = draw_rational(rng, false);
	return check_over_samples<2>(
	    "operator-linearity", "linearity of R", alg, plan, [&](const auto &t) {
		    const auto &[x, y] = t;
		    return mismatch(alg, "R(" + a.str() + "x + " + b.str() + "y)",
		                    alg.R(a * x + b * y), a * alg.R(x) + b * alg.R(y));
	    });
}

/// Carrier associativity and unit laws.
template <class C>
CheckResult check_carrier_axioms(const RBAlgebra<C> &alg,
                                 const SamplePlan &plan)
{
	const auto one = alg.one();
	return check_over_samples<3>(
	    "carrier-associative-unital", "unital associative algebra", alg, plan,
	    [&](const auto &t) -> std::optional<std::string> {
		    const auto &[x, y, z] = t;
		    if (auto m = mismatch(alg, "(xy)z = x(yz)", (x * y) * z, x * (y * z)))
			    return m;
		    if (auto m = mismatch(alg, "1x = x", one * x, x))
			    return m;
		    return mismatch(alg, "x1 = x", x * one, x);
	    });
}

/// The double product is associative, R is a homomorphism onto the carrier
/// product, R stays Rota-Baxter for *_theta, and R~ is an anti-homomorphism.
template <class C>
CheckResult check_double_assoc_and_hom(const RBAlgebra<C> &alg,
                                       const SamplePlan &plan)
{
	auto dp = [&](const auto &a, const auto &b) {
		return double_product(alg, a, b);
	};
	return check_over_samples<3>(
	    "double-product", "double product associativity and homomorphism",
	    alg, plan, [&](const auto &t) -> std::optional<std::string> {
		    const auto &[x, y, z] = t;
		    if (auto m = mismatch(alg, "(x*y)*z = x*(y*z)", dp(dp(x, y), z),
		                          dp(x, dp(y, z))))
			    return m;
		    const auto xy = dp(x, y);
		    if (auto m = mismatch(alg, "R(x*y) = R(x)R(y)", alg.R(xy),
		                          alg.R(x) * alg.R(y)))
			    return m;
		    const auto rx = alg.R(x), ry = alg.R(y);
		    if (auto m = mismatch(alg, "R(x)*R(y) = R(R(x)*y + x*R(y) + theta x*y)",
		                          dp(rx, ry),
		                          alg.R(dp(rx, y) + dp(x, ry) + alg.weight * xy)))
			    return m;
		    return mismatch(alg, "R~(x*y) = -R~(x)R~(y)", tilde_operator(alg, xy),
		                    Rational(-1) * (tilde_operator(alg, x) *
		                                    tilde_operator(alg, y)));
	    });
}

/// beta R satisfies the Rota-Baxter relation of weight beta theta.
template <class C>
CheckResult check_weight_rescale(const RBAlgebra<C> &alg, const Rational &beta,
                                 const SamplePlan &plan)
{
	auto r = check_rb_law(rescaled(alg, beta), plan);
	r.name = "weight-rescale(" + beta.str() + ")";
	r.anchor = "weight rescaling R' = beta R";
	return r;
}

/// R~ = -theta id - R is Rota-Baxter of the same weight.
template <class C>
CheckResult check_tilde_rb(const RBAlgebra<C> &alg, const SamplePlan &plan)
{
	auto r = check_rb_law(tilde_algebra(alg), plan);
	r.name = "tilde-rb-law";
	r.anchor = "complementary operator R~";
	return r;
}

/// Left pre-Lie law for an arbitrary bilinear product.
template <class E, class Product>
std::optional<std::string> prelie_defect(const E &x, const E &y, const E &z,
                                         Product &&p)
{
	auto lhs = p(p(x, y), z) - p(x, p(y, z));
	auto rhs = p(p(y, x), z) - p(y, p(x, z));
	if (lhs == rhs)
		return std::nullopt;
	return std::string("(x|>y)|>z - x|>(y|>z) != (y|>x)|>z - y|>(x|>z)");
}

/// Left pre-Lie law for |>_theta, right pre-Lie law for <|_theta, Jacobi for
/// the associated bracket, and equality with the *_theta commutator.
template <class C>
CheckResult check_prelie_axiom(const RBAlgebra<C> &alg, const SamplePlan &plan)
{
	auto left = [&](const auto &a, const auto &b) {
		return prelie_left(alg, a, b);
	};
	auto right = [&](const auto &a, const auto &b) {
		return prelie_right(alg, a, b);
	};
	auto bracket = [&](const auto &a, const auto &b) {
		return left(a, b) - left(b, a);
	};
	return check_over_samples<3>(
	    "prelie-axioms", "pre-Lie relation", alg, plan,
	    [&](const auto &t) -> std::optional<std::string> {
		    const auto &[x, y, z] = t;
		    if (auto m = mismatch(alg, "left pre-Lie",
		                          left(left(x, y), z) - left(x, left(y, z)),
		                          left(left(y, x), z) - left(y, left(x, z))))
			    return m;
		    if (auto m = mismatch(alg, "right pre-Lie",
		                          right(right(x, y), z) - right(x, right(y, z)),
		                          right(right(x, z), y) - right(x, right(z, y))))
			    return m;
		    if (auto m = mismatch(alg, "Jacobi for [,]_|>",
		                          bracket(x, bracket(y, z)) +
		                              bracket(y, bracket(z, x)) +
		                              bracket(z, bracket(x, y)),
		                          alg.zero()))
			    return m;
		    return mismatch(alg, "[x,y]_|> = [x,y]_*", bracket(x, y),
		                    double_product(alg, x, y) - double_product(alg, y, x));
	    });
}

/// x up y + x down y + theta xy = x *_theta y
template <class C>
CheckResult check_half_shuffle_sum(const RBAlgebra<C> &alg,
                                   const SamplePlan &plan)
{
	return check_over_samples<2>(
	    "half-shuffle-sum", "half-shuffle splitting of the double product", alg,
	    plan, [&](const auto &t) {
		    const auto &[x, y] = t;
		    auto h = half_shuffles(alg, x, y);
		    return mismatch(alg, "x^y + xvy + theta xy = x*y",
		                    h.up + h.down + alg.weight * (x * y),
		                    double_product(alg, x, y));
	    });
}

/// x *_theta y = (B(x)y + xB(y))/2
template <class C>
CheckResult check_b_rewrite(const RBAlgebra<C> &alg, const SamplePlan &plan)
{
	return check_over_samples<2>(
	    "double-product-via-B", "double product through B = R - R~", alg, plan,
	    [&](const auto &t) {
		    const auto &[x, y] = t;
		    return mismatch(alg, "x*y = (B(x)y + xB(y))/2",
		                    double_product(alg, x, y),
		                    Rational(1, 2) * (b_operator(alg, x) * y +
		                                      x * b_operator(alg, y)));
	    });
}

/// R is an idempotent projector whose image and kernel are subalgebras.
template <class C>
CheckResult check_projector(const RBAlgebra<C> &alg, const SamplePlan &plan)
{
	return check_over_samples<2>(
	    "projector", "algebra splitting by an idempotent operator", alg, plan,
	    [&](const auto &t) -> std::optional<std::string> {
		    const auto &[x, y] = t;
		    const auto rx = alg.R(x), ry = alg.R(y);
		    if (auto m = mismatch(alg, "R(R(x)) = R(x)", alg.R(rx), rx))
			    return m;
		    if (auto m = mismatch(alg, "R(x)R(y) in image", alg.R(rx * ry), rx * ry))
			    return m;
		    const auto kx = x - rx, ky = y - ry;
		    return mismatch(alg, "kernel closed", alg.R(kx * ky), alg.zero());
	    });
}

} // namespace rbx
