#include "models/poly_function.hpp"

#include <algorithm>

#include "exact/errors.hpp"

namespace rbx {

PolyFunction::PolyFunction(int cap) : cap_(cap)
{
	if (cap < 1)
		throw ConfigError("polynomial degree cap must be positive");
}

PolyFunction PolyFunction::constant(const Rational &c, int cap)
{
	return monomial(0, c, cap);
}

PolyFunction PolyFunction::monomial(int k, const Rational &c, int cap)
{
	PolyFunction p(cap);
	p.set(k, c);
	p.trim();
	return p;
}

Rational PolyFunction::coefficient(int k) const
{
	return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[k]
	                                                      : Rational(0);
}

Rational PolyFunction::evaluate(const Rational &t) const
{
	Rational acc(0);
	for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
		acc = acc * t + *it;
	return acc;
}

void PolyFunction::set(int k, const Rational &c)
{
	if (k > cap_)
	{
		if (c.is_zero())
			return;
		throw ConfigError("polynomial degree " + std::to_string(k) +
		                  " exceeds cap " + std::to_string(cap_));
	}
	if (k >= static_cast<int>(coeffs_.size()))
		coeffs_.resize(k + 1, Rational(0));
	coeffs_[k] = c;
}

void PolyFunction::trim()
{
	while (!coeffs_.empty() && coeffs_.back().is_zero())
		coeffs_.pop_back();
}

void PolyFunction::check(const PolyFunction &o) const
{
	if (o.cap_ != cap_)
		throw StructuralError("polynomial degree caps differ");
}

PolyFunction &PolyFunction::operator+=(const PolyFunction &o)
{
	check(o);
	if (o.coeffs_.size() > coeffs_.size())
		coeffs_.resize(o.coeffs_.size(), Rational(0));
	for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
		coeffs_[k] += o.coeffs_[k];
	trim();
	return *this;
}

PolyFunction &PolyFunction::operator-=(const PolyFunction &o)
{
	check(o);
	if (o.coeffs_.size() > coeffs_.size())
		coeffs_.resize(o.coeffs_.size(), Rational(0));
	for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
		coeffs_[k] -= o.coeffs_[k];
	trim();
	return *this;
}

PolyFunction PolyFunction::operator-() const { return Rational(-1) * *this; }

PolyFunction operator*(const Rational &q, const PolyFunction &a)
{
	PolyFunction r(a.cap_);
	if (q.is_zero())
		return r;
	r.coeffs_ = a.coeffs_;
	for (auto &c : r.coeffs_)
		c *= q;
	return r;
}

PolyFunction operator*(const PolyFunction &a, const PolyFunction &b)
{
	a.check(b);
	PolyFunction r(a.cap_);
	if (a.coeffs_.empty() || b.coeffs_.empty())
		return r;
	const int deg = a.degree() + b.degree();
	if (deg > a.cap_)
		throw ConfigError("polynomial product degree " + std::to_string(deg) +
		                  " exceeds cap " + std::to_string(a.cap_));
	r.coeffs_.assign(deg + 1, Rational(0));
	for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
		for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
			r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
	r.trim();
	return r;
}

std::string PolyFunction::str() const
{
	if (coeffs_.empty())
		return "0";
	std::string s;
	bool first = true;
	for (std::size_t k = 0; k < coeffs_.size(); ++k)
	{
		const Rational &c = coeffs_[k];
		if (c.is_zero())
			continue;
		Rational mag = c.sign() < 0 ? -c : c;
		s += first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ");
		std::string mono = k == 0 ? "" : k == 1 ? "t" : "t^" + std::to_string(k);
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

PolyFunction riemann_integral(const PolyFunction &p)
{
	PolyFunction r(p.cap());
	for (int k = p.degree(); k >= 0; --k)
		r.set(k + 1, p.coeffs_[k] / Rational(k + 1));
	r.trim();
	return r;
}

} // namespace rbx
