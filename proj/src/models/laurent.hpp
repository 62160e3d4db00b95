#pragma once

#include <map>
#include <string>

#include "exact/rational.hpp"

namespace rbx {

/// Laurent polynomial sum_k c_k eps^k with exponents confined to
/// [-pole_bound, regular_bound]. Arithmetic is exact; an operation whose
/// result leaves the bounds throws ConfigError instead of truncating.
class LaurentElement
{
  public:
	static constexpr int default_pole_bound = 24;
	static constexpr int default_regular_bound = 24;

	LaurentElement(int pole_bound = default_pole_bound,
	               int regular_bound = default_regular_bound);

	static LaurentElement monomial(int exponent, const Rational &c,
	                               int pole_bound = default_pole_bound,
	                               int regular_bound = default_regular_bound);

	int pole_bound() const { return pole_bound_; }
	int regular_bound() const { return regular_bound_; }
	const std::map<int, Rational> &coefficients() const { return coeffs_; }
	Rational coefficient(int exponent) const;
	bool is_zero() const { return coeffs_.empty(); }
	/// Most negative exponent present, or 0 for pole-free elements.
	int pole_order() const;

	void add_term(int exponent, const Rational &c);

	LaurentElement &operator+=(const LaurentElement &o);
	LaurentElement &operator-=(const LaurentElement &o);
	friend LaurentElement operator+(LaurentElement a, const LaurentElement &b)
	{
		return a += b;
	}
	friend LaurentElement operator-(LaurentElement a, const LaurentElement &b)
	{
		return a -= b;
	}
	LaurentElement operator-() const;
	friend LaurentElement operator*(const Rational &q, const LaurentElement &a);
	friend LaurentElement operator*(const LaurentElement &a,
	                                const LaurentElement &b);
	friend bool operator==(const LaurentElement &a, const LaurentElement &b)
	{
		return a.coeffs_ == b.coeffs_;
	}

	/// "eps^-1 + 1 + 3/2*eps"
	std::string str() const;

  private:
	void check_bounds(const LaurentElement &o) const;

	std::map<int, Rational> coeffs_;
	int pole_bound_;
	int regular_bound_;
};

/// Keeps exponents < 0 (the divergent part), zeroes the rest. Idempotent
/// Rota-Baxter operator of weight -1 with R(1) = 0.
LaurentElement laurent_pole_projection(const LaurentElement &x);

/// Complementary projection onto exponents >= 0.
LaurentElement laurent_regular_projection(const LaurentElement &x);

} // namespace rbx
