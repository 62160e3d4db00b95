#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "exact/errors.hpp"
#include "exact/rational.hpp"

namespace rbx {

namespace detail {

inline std::string render_entry(const Rational &r) { return r.str(); }
template <class P> std::string render_entry(const P &p) { return p.str(); }

} // namespace detail

/// Finite window (entries 0..W-1) of a sequence with values in V, under the
/// pointwise product. Identities between sequences are pointwise, and the
/// partial-sum operator reads only earlier entries, so computations on the
/// window are exact there.
template <class V> class SeqElement
{
  public:
	SeqElement() = default;
	explicit SeqElement(std::vector<V> entries) : entries_(std::move(entries))
	{
	}

	std::size_t window() const { return entries_.size(); }
	const V &operator[](std::size_t k) const { return entries_.at(k); }
	V &operator[](std::size_t k) { return entries_.at(k); }
	const std::vector<V> &entries() const { return entries_; }

	SeqElement &operator+=(const SeqElement &o)
	{
		check(o);
		for (std::size_t k = 0; k < entries_.size(); ++k)
			entries_[k] += o.entries_[k];
		return *this;
	}
	SeqElement &operator-=(const SeqElement &o)
	{
		check(o);
		for (std::size_t k = 0; k < entries_.size(); ++k)
			entries_[k] -= o.entries_[k];
		return *this;
	}
	friend SeqElement operator+(SeqElement a, const SeqElement &b)
	{
		return a += b;
	}
	friend SeqElement operator-(SeqElement a, const SeqElement &b)
	{
		return a -= b;
	}
	SeqElement operator-() const { return Rational(-1) * *this; }
	friend SeqElement operator*(const Rational &q, SeqElement a)
	{
		for (auto &e : a.entries_)
			e = q * e;
		return a;
	}
	friend SeqElement operator*(const SeqElement &a, const SeqElement &b)
	{
		a.check(b);
		std::vector<V> out;
		out.reserve(a.entries_.size());
		for (std::size_t k = 0; k < a.entries_.size(); ++k)
			out.push_back(a.entries_[k] * b.entries_[k]);
		return SeqElement(std::move(out));
	}
	friend bool operator==(const SeqElement &, const SeqElement &) = default;

	/// "(e0; e1; ...)"
	std::string str() const
	{
		std::string s = "(";
		for (std::size_t k = 0; k < entries_.size(); ++k)
			s += (k ? "; " : "") + detail::render_entry(entries_[k]);
		return s + ")";
	}

  private:
	void check(const SeqElement &o) const
	{
		if (o.entries_.size() != entries_.size())
			throw StructuralError("sequence windows differ in length");
	}

	std::vector<V> entries_;
};

/// Shifted partial sums: entry k of the result is sum_{i<k} s_i, entry 0 is
/// zero. Rota-Baxter of weight 1 on sequences with pointwise product.
template <class V> SeqElement<V> standard_sum_operator(const SeqElement<V> &s)
{
	std::vector<V> out;
	out.reserve(s.window());
	if (s.window() == 0)
		return SeqElement<V>();
	V acc = Rational(0) * s[0];
	for (std::size_t k = 0; k < s.window(); ++k)
	{
		out.push_back(acc);
		acc += s[k];
	}
	return SeqElement<V>(std::move(out));
}

using ScalarSeq = SeqElement<Rational>;

/// R(f)(n) = sum_{k<n} f(k) on scalar sequences.
inline ScalarSeq summation_operator(const ScalarSeq &f)
{
	return standard_sum_operator(f);
}

/// Delta(f)(n) = f(n+1) - f(n) on the interior of the window (length W-1).
inline ScalarSeq finite_difference(const ScalarSeq &f)
{
	std::vector<Rational> out;
	for (std::size_t n = 0; n + 1 < f.window(); ++n)
		out.push_back(f[n + 1] - f[n]);
	return ScalarSeq(std::move(out));
}

} // namespace rbx
