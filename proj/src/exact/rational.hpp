#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace rbx {

/// Exact rational number in canonical form (positive denominator, reduced).
class Rational
{
  public:
	Rational() = default;
	Rational(std::int64_t n); // NOLINT: implicit by design of a scalar type
	Rational(std::int64_t num, std::int64_t den);
	explicit Rational(mpq_class v);

	/// Parses "p", "-p" or "p/q". Throws ConfigError on malformed text or q = 0.
	static Rational parse(std::string_view text);

	bool is_zero() const { return sgn(value_) == 0; }
	bool is_integer() const { return value_.get_den() == 1; }
	int sign() const { return sgn(value_); }

	std::string numerator() const { return value_.get_num().get_str(); }
	std::string denominator() const { return value_.get_den().get_str(); }
	std::string str() const;

	const mpq_class &raw() const { return value_; }

	Rational operator-() const { return Rational(mpq_class(-value_)); }
	Rational &operator+=(const Rational &o);
	Rational &operator-=(const Rational &o);
	Rational &operator*=(const Rational &o);
	Rational &operator/=(const Rational &o);

	friend Rational operator+(Rational a, const Rational &b) { return a += b; }
	friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
	friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
	friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

	friend bool operator==(const Rational &a, const Rational &b)
	{
		return a.value_ == b.value_;
	}
	friend std::strong_ordering operator<=>(const Rational &a,
	                                        const Rational &b)
	{
		int c = cmp(a.value_, b.value_);
		return c < 0 ? std::strong_ordering::less
		       : c > 0 ? std::strong_ordering::greater
		               : std::strong_ordering::equal;
	}

  private:
	mpq_class value_{0};
};

Rational pow(const Rational &base, unsigned exponent);
Rational factorial(unsigned n);
Rational binomial(unsigned n, unsigned k);

std::ostream &operator<<(std::ostream &os, const Rational &r);

} // namespace rbx
