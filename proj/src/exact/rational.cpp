#include "exact/rational.hpp"

#include <ostream>

#include "exact/errors.hpp"

namespace rbx {

Rational::Rational(std::int64_t n) : value_(static_cast<long>(n)) {}

Rational::Rational(std::int64_t num, std::int64_t den)
{
	if (den == 0)
		throw DomainError("rational with zero denominator");
	value_ = mpq_class(mpz_class(static_cast<long>(num)),
	                   mpz_class(static_cast<long>(den)));
	value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text)
{
	auto bad = [&] {
		return ConfigError("invalid rational '" + std::string(text) +
		                   "' (expected p or p/q)");
	};
	auto is_int = [](std::string_view s) {
		if (!s.empty() && (s.front() == '-' || s.front() == '+'))
			s.remove_prefix(1);
		if (s.empty())
			return false;
		for (char c : s)
			if (c < '0' || c > '9')
				return false;
		return true;
	};
	auto slash = text.find('/');
	std::string_view num = text.substr(0, slash);
	std::string_view den =
	    slash == std::string_view::npos ? "1" : text.substr(slash + 1);
	if (!is_int(num) || !is_int(den) || den.front() == '-' ||
	    den.front() == '+')
		throw bad();
	std::string n(num), d(den);
	if (n.front() == '+')
		n.erase(0, 1);
	mpz_class zn(n, 10), zd(d, 10);
	if (zd == 0)
		throw bad();
	return Rational(mpq_class(zn, zd));
}

std::string Rational::str() const
{
	if (is_integer())
		return value_.get_num().get_str();
	return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational &Rational::operator+=(const Rational &o)
{
	value_ += o.value_;
	return *this;
}

Rational &Rational::operator-=(const Rational &o)
{
	value_ -= o.value_;
	return *this;
}

Rational &Rational::operator*=(const Rational &o)
{
	value_ *= o.value_;
	return *this;
}

Rational &Rational::operator/=(const Rational &o)
{
	if (o.is_zero())
		throw DomainError("division by zero");
	value_ /= o.value_;
	return *this;
}

Rational pow(const Rational &base, unsigned exponent)
{
	Rational r(1);
	for (unsigned i = 0; i < exponent; ++i)
		r *= base;
	return r;
}

Rational factorial(unsigned n)
{
	mpz_class f;
	mpz_fac_ui(f.get_mpz_t(), n);
	return Rational(mpq_class(f));
}

Rational binomial(unsigned n, unsigned k)
{
	mpz_class b;
	mpz_bin_uiui(b.get_mpz_t(), n, k);
	return Rational(mpq_class(b));
}

std::ostream &operator<<(std::ostream &os, const Rational &r)
{
	return os << r.str();
}

} // namespace rbx
