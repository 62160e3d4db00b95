#pragma once

#include <array>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "exact/rational.hpp"

namespace rbx {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi]; modulo reduction keeps draws identical across
/// standard library implementations.
inline int draw(Rng &rng, int lo, int hi)
{
	return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// Small random rational p/q with |p| <= 4, 1 <= q <= 3.
inline Rational draw_rational(Rng &rng, bool allow_zero = true)
{
	int p = draw(rng, -4, 4);
	if (!allow_zero && p == 0)
		p = 1;
	return Rational(p, draw(rng, 1, 3));
}

/// Which finite surrogate a law checker quantifies over: every tuple of a
/// declared generator set, or a seeded number of random tuples.
struct SamplePlan
{
	enum class Mode
	{
		exhaustive,
		random
	};

	Mode mode = Mode::random;
	int trials = 200;
	std::uint64_t seed = 42;

	static SamplePlan exhaustive() { return {Mode::exhaustive, 0, 0}; }
	static SamplePlan random(int trials, std::uint64_t seed)
	{
		return {Mode::random, trials, seed};
	}

	std::string str() const
	{
		return mode == Mode::exhaustive
		           ? "exhaustive"
		           : "random(trials=" + std::to_string(trials) +
		                 ", seed=" + std::to_string(seed) + ")";
	}
};

/// Elements of an algebra carrier together with the sampling hooks the law
/// checkers need.
template <class C>
concept Carrier = requires(const C &c, const typename C::Element &x, Rng &rng) {
	{ c.zero() } -> std::convertible_to<typename C::Element>;
	{ c.unit() } -> std::convertible_to<typename C::Element>;
	{ c.commutative() } -> std::convertible_to<bool>;
	{ c.render(x) } -> std::convertible_to<std::string>;
	{ c.basis() } -> std::convertible_to<std::vector<typename C::Element>>;
	{ c.random(rng) } -> std::convertible_to<typename C::Element>;
	{ x + x } -> std::convertible_to<typename C::Element>;
	{ x - x } -> std::convertible_to<typename C::Element>;
	{ x *x } -> std::convertible_to<typename C::Element>;
	{ Rational(1) * x } -> std::convertible_to<typename C::Element>;
	{ x == x } -> std::convertible_to<bool>;
};

/// K-tuples drawn according to the plan: the full cartesian power of the
/// basis, or `trials` random tuples.
template <std::size_t K, Carrier C>
std::vector<std::array<typename C::Element, K>>
sample_tuples(const C &carrier, const SamplePlan &plan)
{
	using E = typename C::Element;
	std::vector<std::array<E, K>> out;
	if (plan.mode == SamplePlan::Mode::exhaustive)
	{
		const auto basis = carrier.basis();
		const std::size_t b = basis.size();
		std::size_t total = 1;
		for (std::size_t i = 0; i < K; ++i)
			total *= b;
		out.reserve(total);
		for (std::size_t idx = 0; idx < total; ++idx)
		{
			std::array<E, K> t;
			std::size_t rest = idx;
			for (std::size_t i = K; i-- > 0;)
			{
				t[i] = basis[rest % b];
				rest /= b;
			}
			out.push_back(std::move(t));
		}
		return out;
	}
	Rng rng(plan.seed);
	out.reserve(plan.trials);
	for (int t = 0; t < plan.trials; ++t)
	{
		std::array<E, K> tuple;
		for (auto &e : tuple)
			e = carrier.random(rng);
		out.push_back(std::move(tuple));
	}
	return out;
}

} // namespace rbx
