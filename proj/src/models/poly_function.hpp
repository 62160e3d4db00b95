#pragma once

#include <string>
#include <vector>

#include "exact/rational.hpp"

namespace rbx {

/// Univariate polynomial function of t over the rationals with a degree cap.
/// Results above the cap throw ConfigError.
class PolyFunction
{
  public:
	static constexpr int default_cap = 40;

	explicit PolyFunction(int cap = default_cap);
	static PolyFunction constant(const Rational &c, int cap = default_cap);
	/// c * t^k
	static PolyFunction monomial(int k, const Rational &c = Rational(1),
	                             int cap = default_cap);

	int cap() const { return cap_; }
	/// -1 for the zero polynomial.
	int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
	Rational coefficient(int k) const;
	Rational evaluate(const Rational &t) const;

	PolyFunction &operator+=(const PolyFunction &o);
	PolyFunction &operator-=(const PolyFunction &o);
	friend PolyFunction operator+(PolyFunction a, const PolyFunction &b)
	{
		return a += b;
	}
	friend PolyFunction operator-(PolyFunction a, const PolyFunction &b)
	{
		return a -= b;
	}
	PolyFunction operator-() const;
	friend PolyFunction operator*(const Rational &q, const PolyFunction &a);
	friend PolyFunction operator*(const PolyFunction &a, const PolyFunction &b);
	friend bool operator==(const PolyFunction &a, const PolyFunction &b)
	{
		return a.coeffs_ == b.coeffs_;
	}

	/// "1 + 1/2*t^2"
	std::string str() const;

  private:
	friend PolyFunction riemann_integral(const PolyFunction &p);
	void set(int k, const Rational &c);
	void trim();
	void check(const PolyFunction &o) const;

	std::vector<Rational> coeffs_; // index = power of t, no trailing zeros
	int cap_;
};

/// t^n -> t^{n+1}/(n+1): the indefinite integral from 0, Rota-Baxter of
/// weight 0. Throws ConfigError if the result would exceed the cap.
PolyFunction riemann_integral(const PolyFunction &p);

} // namespace rbx
