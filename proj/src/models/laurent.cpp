#include "models/laurent.hpp"

#include "exact/errors.hpp"

namespace rbx {

LaurentElement::LaurentElement(int pole_bound, int regular_bound)
    : pole_bound_(pole_bound), regular_bound_(regular_bound)
{
	if (pole_bound < 0 || regular_bound < 0)
		throw ConfigError("Laurent bounds must be non-negative");
}

LaurentElement LaurentElement::monomial(int exponent, const Rational &c,
                                        int pole_bound, int regular_bound)
{
	LaurentElement e(pole_bound, regular_bound);
	e.add_term(exponent, c);
	return e;
}

Rational LaurentElement::coefficient(int exponent) const
{
	auto it = coeffs_.find(exponent);
	return it == coeffs_.end() ? Rational(0) : it->second;
}

int LaurentElement::pole_order() const
{
	if (coeffs_.empty() || coeffs_.begin()->first >= 0)
		return 0;
	return coeffs_.begin()->first;
}

void LaurentElement::add_term(int exponent, const Rational &c)
{
	if (c.is_zero())
		return;
	if (exponent < -pole_bound_ || exponent > regular_bound_)
		throw ConfigError("Laurent exponent " + std::to_string(exponent) +
		                  " outside [-" + std::to_string(pole_bound_) + ", " +
		                  std::to_string(regular_bound_) + "]");
	auto [it, inserted] = coeffs_.try_emplace(exponent, c);
	if (!inserted)
	{
		it->second += c;
		if (it->second.is_zero())
			coeffs_.erase(it);
	}
}

void LaurentElement::check_bounds(const LaurentElement &o) const
{
	if (o.pole_bound_ != pole_bound_ || o.regular_bound_ != regular_bound_)
		throw StructuralError("Laurent operands have different bounds");
}

LaurentElement &LaurentElement::operator+=(const LaurentElement &o)
{
	check_bounds(o);
	for (const auto &[k, c] : o.coeffs_)
		add_term(k, c);
	return *this;
}

LaurentElement &LaurentElement::operator-=(const LaurentElement &o)
{
	check_bounds(o);
	for (const auto &[k, c] : o.coeffs_)
		add_term(k, -c);
	return *this;
}

LaurentElement LaurentElement::operator-() const { return Rational(-1) * *this; }

LaurentElement operator*(const Rational &q, const LaurentElement &a)
{
	LaurentElement r(a.pole_bound_, a.regular_bound_);
	if (q.is_zero())
		return r;
	for (const auto &[k, c] : a.coeffs_)
		r.coeffs_.emplace(k, q * c);
	return r;
}

LaurentElement operator*(const LaurentElement &a, const LaurentElement &b)
{
	a.check_bounds(b);
	LaurentElement r(a.pole_bound_, a.regular_bound_);
	for (const auto &[i, ci] : a.coeffs_)
		for (const auto &[j, cj] : b.coeffs_)
			r.add_term(i + j, ci * cj);
	return r;
}

std::string LaurentElement::str() const
{
	if (coeffs_.empty())
		return "0";
	std::string s;
	bool first = true;
	for (const auto &[k, c] : coeffs_)
	{
		Rational mag = c.sign() < 0 ? -c : c;
		s += first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ");
		std::string mono = k == 0   ? ""
		                   : k == 1 ? "eps"
		                            : "eps^" + std::to_string(k);
		if (mono.empty())
			s += mag.str();
		else if (mag == Rational(1))
			s += mono;
		else
			s += mag.str() + "*" + mono;
		first = false;
	}
	return s;
}

LaurentElement laurent_pole_projection(const LaurentElement &x)
{
	LaurentElement r(x.pole_bound(), x.regular_bound());
	for (const auto &[k, c] : x.coefficients())
		if (k < 0)
			r.add_term(k, c);
	return r;
}

LaurentElement laurent_regular_projection(const LaurentElement &x)
{
	LaurentElement r(x.pole_bound(), x.regular_bound());
	for (const auto &[k, c] : x.coefficients())
		if (k >= 0)
			r.add_term(k, c);
	return r;
}

} // namespace rbx
