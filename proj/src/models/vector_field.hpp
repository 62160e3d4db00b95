#pragma once

#include <map>
#include <string>

#include "algebra/check_result.hpp"
#include "algebra/laws.hpp"
#include "exact/rational.hpp"

namespace rbx {

/// Polynomial vector field sum_n c_n x^n d/dx on the line, keyed by n.
class VectorField
{
  public:
	using Terms = std::map<int, Rational>;

	VectorField() = default;
	static VectorField monomial(int n, const Rational &c = Rational(1))
	{
		VectorField v;
		v.add(n, c);
		return v;
	}

	const Terms &terms() const { return terms_; }
	void add(int n, const Rational &c)
	{
		if (c.is_zero())
			return;
		auto &slot = terms_[n];
		slot += c;
		if (slot.is_zero())
			terms_.erase(n);
	}

	friend VectorField operator+(VectorField a, const VectorField &b)
	{
		for (const auto &[n, c] : b.terms_)
			a.add(n, c);
		return a;
	}
	friend VectorField operator-(VectorField a, const VectorField &b)
	{
		for (const auto &[n, c] : b.terms_)
			a.add(n, -c);
		return a;
	}
	friend bool operator==(const VectorField &, const VectorField &) = default;

	/// "x^2 d + 3 x d"
	std::string str() const
	{
		if (terms_.empty())
			return "0";
		std::string s;
		for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
		{
			if (!s.empty())
				s += " + ";
			s += it->second.str() + "*x^" + std::to_string(it->first) + "d";
		}
		return s;
	}

  private:
	Terms terms_;
};

/// (f d) |> (g d) = f g' d, so (x^n d) |> (x^m d) = m x^{n+m-1} d.
inline VectorField vector_field_prelie(const VectorField &a, const VectorField &b)
{
	VectorField out;
	for (const auto &[n, c] : a.terms())
		for (const auto &[m, e] : b.terms())
			if (m != 0)
				out.add(n + m - 1, c * e * Rational(m));
	return out;
}

/// The pre-Lie law on all monomial triples with exponents in 0..max_exponent.
inline CheckResult check_vector_field_prelie(int max_exponent = 4)
{
	int cases = 0;
	for (int a = 0; a <= max_exponent; ++a)
		for (int b = 0; b <= max_exponent; ++b)
			for (int c = 0; c <= max_exponent; ++c)
			{
				++cases;
				auto x = VectorField::monomial(a), y = VectorField::monomial(b),
				     z = VectorField::monomial(c);
				if (auto d = prelie_defect(x, y, z, vector_field_prelie))
					return CheckResult::fail(
					    "vector-field-prelie", "pre-Lie relation", "vector-fields",
					    "exponents<=" + std::to_string(max_exponent), cases,
					    "x = " + x.str() + ", y = " + y.str() + ", z = " + z.str() +
					        "; " + *d);
			}
	return CheckResult::pass("vector-field-prelie", "pre-Lie relation",
	                         "vector-fields",
	                         "exponents<=" + std::to_string(max_exponent), cases);
}

} // namespace rbx
