#pragma once

#include <concepts>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exact/errors.hpp"
#include "exact/rational.hpp"

namespace rbx {

/// An associative product with unit on some element type. Series arithmetic
/// is parameterized by a ring so that the same code runs over the carrier
/// product and over the (unit-extended) double product.
template <class Ring>
concept SeriesRing = requires(const Ring &ring, const typename Ring::Element &a,
                              const Rational &q) {
	{ ring.zero() } -> std::convertible_to<typename Ring::Element>;
	{ ring.one() } -> std::convertible_to<typename Ring::Element>;
	{ ring.mul(a, a) } -> std::convertible_to<typename Ring::Element>;
	{ a + a } -> std::convertible_to<typename Ring::Element>;
	{ a - a } -> std::convertible_to<typename Ring::Element>;
	{ q * a } -> std::convertible_to<typename Ring::Element>;
	{ a == a } -> std::convertible_to<bool>;
};

/// Truncated formal power series sum_{k=0}^{N} lambda^k c_k with coefficients
/// in an algebra carrier. All arithmetic truncates at the order N.
template <class E> class LambdaSeries
{
  public:
	using Element = E;

	LambdaSeries() = default;
	explicit LambdaSeries(std::vector<E> coefficients)
	    : coeffs_(std::move(coefficients))
	{
		if (coeffs_.empty())
			throw StructuralError("series needs at least a constant term");
	}

	/// The series with every coefficient equal to `zero`.
	static LambdaSeries filled(const E &zero, int order)
	{
		if (order < 0)
			throw StructuralError("negative series order");
		return LambdaSeries(std::vector<E>(order + 1, zero));
	}

	/// lambda^degree * x truncated at `order`.
	static LambdaSeries monomial(const E &x, int degree, const E &zero,
	                             int order)
	{
		auto s = filled(zero, order);
		if (degree <= order)
			s.coeffs_[degree] = x;
		return s;
	}

	int order() const { return static_cast<int>(coeffs_.size()) - 1; }
	const E &operator[](int k) const { return coeffs_.at(k); }
	E &operator[](int k) { return coeffs_.at(k); }
	const std::vector<E> &coefficients() const { return coeffs_; }

	LambdaSeries &operator+=(const LambdaSeries &o)
	{
		check_same_order(o);
		for (std::size_t k = 0; k < coeffs_.size(); ++k)
			coeffs_[k] = coeffs_[k] + o.coeffs_[k];
		return *this;
	}
	LambdaSeries &operator-=(const LambdaSeries &o)
	{
		check_same_order(o);
		for (std::size_t k = 0; k < coeffs_.size(); ++k)
			coeffs_[k] = coeffs_[k] - o.coeffs_[k];
		return *this;
	}
	friend LambdaSeries operator+(LambdaSeries a, const LambdaSeries &b)
	{
		return a += b;
	}
	friend LambdaSeries operator-(LambdaSeries a, const LambdaSeries &b)
	{
		return a -= b;
	}
	friend LambdaSeries operator*(const Rational &q, LambdaSeries a)
	{
		for (auto &c : a.coeffs_)
			c = q * c;
		return a;
	}
	friend bool operator==(const LambdaSeries &a, const LambdaSeries &b)
	{
		return a.order() == b.order() && a.coeffs_ == b.coeffs_;
	}

	/// Applies a linear map to every coefficient.
	template <class F> auto map(F &&f) const
	{
		using Out = std::decay_t<decltype(f(coeffs_.front()))>;
		std::vector<Out> out;
		out.reserve(coeffs_.size());
		for (const auto &c : coeffs_)
			out.push_back(f(c));
		return LambdaSeries<Out>(std::move(out));
	}

	/// Same coefficients up to a lower order.
	LambdaSeries truncated(int order) const
	{
		if (order > this->order())
			throw StructuralError("cannot raise truncation order");
		return LambdaSeries(
		    std::vector<E>(coeffs_.begin(), coeffs_.begin() + order + 1));
	}

	void check_same_order(const LambdaSeries &o) const
	{
		if (o.order() != order())
			throw StructuralError("series order mismatch: " +
			                      std::to_string(order()) + " vs " +
			                      std::to_string(o.order()));
	}

  private:
	std::vector<E> coeffs_;
};

/// First lambda-degree where two series differ.
template <class E>
std::optional<int> first_difference(const LambdaSeries<E> &a,
                                    const LambdaSeries<E> &b)
{
	a.check_same_order(b);
	for (int k = 0; k <= a.order(); ++k)
		if (!(a[k] == b[k]))
			return k;
	return std::nullopt;
}

template <SeriesRing Ring>
LambdaSeries<typename Ring::Element> series_unit(const Ring &ring, int order)
{
	return LambdaSeries<typename Ring::Element>::monomial(ring.one(), 0,
	                                                      ring.zero(), order);
}

/// Cauchy product c_n = sum_{i+j=n} a_i b_j truncated at the common order.
template <SeriesRing Ring>
LambdaSeries<typename Ring::Element>
series_mul(const Ring &ring, const LambdaSeries<typename Ring::Element> &a,
           const LambdaSeries<typename Ring::Element> &b)
{
	a.check_same_order(b);
	const int n = a.order();
	auto c = LambdaSeries<typename Ring::Element>::filled(ring.zero(), n);
	for (int i = 0; i <= n; ++i)
		for (int j = 0; i + j <= n; ++j)
			c[i + j] = c[i + j] + ring.mul(a[i], b[j]);
	return c;
}

namespace detail {

template <SeriesRing Ring>
void require_constant(const Ring &,
                      const LambdaSeries<typename Ring::Element> &a,
                      const typename Ring::Element &expected, const char *what)
{
	if (!(a[0] == expected))
		throw DomainError(what);
}

} // namespace detail

/// log(a) = sum_{k>=1} (-1)^{k+1} (a-1)^k / k; requires a_0 = 1.
template <SeriesRing Ring>
LambdaSeries<typename Ring::Element>
series_log(const Ring &ring, const LambdaSeries<typename Ring::Element> &a)
{
	detail::require_constant(ring, a, ring.one(),
	                         "series_log: constant term is not the unit");
	const int n = a.order();
	auto u = a;
	u[0] = ring.zero();
	auto result = LambdaSeries<typename Ring::Element>::filled(ring.zero(), n);
	auto power = u;
	for (int k = 1; k <= n; ++k)
	{
		Rational c(k % 2 == 1 ? 1 : -1, k);
		result += c * power;
		power = series_mul(ring, power, u);
	}
	return result;
}

/// exp(a) = sum_k a^k / k!; requires a_0 = 0.
template <SeriesRing Ring>
LambdaSeries<typename Ring::Element>
series_exp(const Ring &ring, const LambdaSeries<typename Ring::Element> &a)
{
	detail::require_constant(ring, a, ring.zero(),
	                         "series_exp: constant term is not zero");
	const int n = a.order();
	auto result = series_unit(ring, n);
	auto term = series_unit(ring, n);
	for (int k = 1; k <= n; ++k)
	{
		term = Rational(1, k) * series_mul(ring, term, a);
		result += term;
	}
	return result;
}

/// Two-sided inverse sum_k (1-a)^k; requires a_0 = 1.
template <SeriesRing Ring>
LambdaSeries<typename Ring::Element>
series_inverse(const Ring &ring, const LambdaSeries<typename Ring::Element> &a)
{
	detail::require_constant(ring, a, ring.one(),
	                         "series_inverse: constant term is not the unit");
	const int n = a.order();
	auto v = series_unit(ring, n) - a;
	auto result = series_unit(ring, n);
	auto power = series_unit(ring, n);
	for (int k = 1; k <= n; ++k)
	{
		power = series_mul(ring, power, v);
		result += power;
	}
	return result;
}

} // namespace rbx
