#pragma once

#include <algorithm>
#include <map>
#include <string>

#include "combinatorics/word.hpp"
#include "exact/errors.hpp"
#include "exact/rational.hpp"

namespace rbx {

/// Polynomial in indeterminates x1, x2, ... over the rationals, truncated at
/// total degree `cap` (the quotient by the ideal of monomials of higher
/// degree). Noncommutative monomials are words; commutative monomials are
/// words with sorted letters.
template <bool Commutative> class Polynomial
{
  public:
	using Terms = std::map<Word, Rational>;
	static constexpr bool commutative = Commutative;

	explicit Polynomial(int cap = 8) : cap_(cap) {}

	static Polynomial constant(const Rational &c, int cap)
	{
		Polynomial p(cap);
		p.add_term(Word{}, c);
		return p;
	}
	static Polynomial letter(int index, int cap, const Rational &c = Rational(1))
	{
		Polynomial p(cap);
		p.add_term(Word{index}, c);
		return p;
	}
	static Polynomial monomial(const Word &w, int cap,
	                           const Rational &c = Rational(1))
	{
		Polynomial p(cap);
		p.add_term(normalize(w), c);
		return p;
	}

	int cap() const { return cap_; }
	const Terms &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	Rational coefficient(const Word &w) const
	{
		auto it = terms_.find(normalize(w));
		return it == terms_.end() ? Rational(0) : it->second;
	}
	int degree() const
	{
		int d = -1;
		for (const auto &t : terms_)
			d = std::max(d, static_cast<int>(t.first.size()));
		return d;
	}

	void add_term(Word w, const Rational &c)
	{
		if (c.is_zero() || static_cast<int>(w.size()) > cap_)
			return;
		auto [it, inserted] = terms_.try_emplace(std::move(w), c);
		if (!inserted)
		{
			it->second += c;
			if (it->second.is_zero())
				terms_.erase(it);
		}
	}

	Polynomial &operator+=(const Polynomial &o)
	{
		check_cap(o);
		for (const auto &[w, c] : o.terms_)
			add_term(w, c);
		return *this;
	}
	Polynomial &operator-=(const Polynomial &o)
	{
		check_cap(o);
		for (const auto &[w, c] : o.terms_)
			add_term(w, -c);
		return *this;
	}
	Polynomial operator-() const { return Rational(-1) * *this; }
	friend Polynomial operator+(Polynomial a, const Polynomial &b)
	{
		return a += b;
	}
	friend Polynomial operator-(Polynomial a, const Polynomial &b)
	{
		return a -= b;
	}
	friend Polynomial operator*(const Rational &q, const Polynomial &a)
	{
		Polynomial r(a.cap_);
		if (q.is_zero())
			return r;
		for (const auto &[w, c] : a.terms_)
			r.terms_.emplace(w, q * c);
		return r;
	}
	friend Polynomial operator*(const Polynomial &a, const Polynomial &b)
	{
		a.check_cap(b);
		Polynomial r(a.cap_);
		for (const auto &[u, cu] : a.terms_)
			for (const auto &[v, cv] : b.terms_)
			{
				if (static_cast<int>(u.size() + v.size()) > a.cap_)
					continue;
				std::vector<int> l;
				l.reserve(u.size() + v.size());
				l.insert(l.end(), u.letters().begin(), u.letters().end());
				l.insert(l.end(), v.letters().begin(), v.letters().end());
				if constexpr (Commutative)
					std::sort(l.begin(), l.end());
				r.add_term(Word(std::move(l)), cu * cv);
			}
		return r;
	}
	friend bool operator==(const Polynomial &a, const Polynomial &b)
	{
		return a.cap_ == b.cap_ && a.terms_ == b.terms_;
	}

	/// Sorted monomials, "1 + 2*x1 - 1/2*x1x2"; zero renders as "0".
	std::string str() const
	{
		WordSum s;
		for (const auto &[w, c] : terms_)
			s.add_term(w, c);
		return s.str();
	}

  private:
	static Word normalize(const Word &w)
	{
		if constexpr (Commutative)
		{
			auto l = w.letters();
			std::sort(l.begin(), l.end());
			return Word(std::move(l));
		}
		else
			return w;
	}

	void check_cap(const Polynomial &o) const
	{
		if (o.cap_ != cap_)
			throw StructuralError("polynomial degree caps differ");
	}

	Terms terms_;
	int cap_;
};

using NCPoly = Polynomial<false>;
using CPoly = Polynomial<true>;

} // namespace rbx
