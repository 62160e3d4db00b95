#pragma once

#include <functional>
#include <string>
#include <utility>

#include "algebra/sampling.hpp"
#include "exact/rational.hpp"

namespace rbx {

/// A unital associative algebra carrier equipped with a linear operator R and
/// a weight theta. Whether R satisfies the Rota-Baxter relation is a claim
/// verified by check_rb_law, not an assumption.
template <Carrier C> struct RBAlgebra
{
	using Element = typename C::Element;
	using Operator = std::function<Element(const Element &)>;

	C carrier;
	Operator op;
	Rational weight;
	std::string label;

	Element R(const Element &x) const { return op(x); }

	Element zero() const { return carrier.zero(); }
	Element one() const { return carrier.unit(); }
	Element mul(const Element &a, const Element &b) const { return a * b; }
	bool commutative() const { return carrier.commutative(); }
	std::string render(const Element &x) const { return carrier.render(x); }
};

/// x *_theta y = R(x)y + xR(y) + theta xy
template <class C>
typename C::Element double_product(const RBAlgebra<C> &alg,
                                   const typename C::Element &x,
                                   const typename C::Element &y)
{
	return alg.R(x) * y + x * alg.R(y) + alg.weight * (x * y);
}

/// R~(x) = -theta x - R(x)
template <class C>
typename C::Element tilde_operator(const RBAlgebra<C> &alg,
                                   const typename C::Element &x)
{
	return Rational(-1) * (alg.weight * x + alg.R(x));
}

/// Left pre-Lie product a |>_theta b = R(a)b - bR(a) - theta ba.
template <class C>
typename C::Element prelie_left(const RBAlgebra<C> &alg,
                                const typename C::Element &a,
                                const typename C::Element &b)
{
	auto ra = alg.R(a);
	return ra * b - b * ra - alg.weight * (b * a);
}

/// Right pre-Lie product a <|_theta b = -(b |>_theta a).
template <class C>
typename C::Element prelie_right(const RBAlgebra<C> &alg,
                                 const typename C::Element &a,
                                 const typename C::Element &b)
{
	return Rational(-1) * prelie_left(alg, b, a);
}

/// B = R - R~ = 2R + theta id
template <class C>
typename C::Element b_operator(const RBAlgebra<C> &alg,
                               const typename C::Element &x)
{
	return Rational(2) * alg.R(x) + alg.weight * x;
}

template <class E> struct HalfShuffle
{
	E up;   // x R(y)
	E down; // R(x) y
};

template <class C>
HalfShuffle<typename C::Element> half_shuffles(const RBAlgebra<C> &alg,
                                               const typename C::Element &x,
                                               const typename C::Element &y)
{
	return {x * alg.R(y), alg.R(x) * y};
}

template <class E> E commutator(const E &x, const E &y) { return x * y - y * x; }

/// The same carrier with R replaced by R~ (weight unchanged).
template <class C> RBAlgebra<C> tilde_algebra(const RBAlgebra<C> &alg)
{
	auto base = alg;
	RBAlgebra<C> t = alg;
	t.op = [base](const typename C::Element &x) {
		return tilde_operator(base, x);
	};
	t.label = alg.label + "~";
	return t;
}

/// R' = beta R, of weight beta theta.
template <class C>
RBAlgebra<C> rescaled(const RBAlgebra<C> &alg, const Rational &beta)
{
	RBAlgebra<C> s = alg;
	auto op = alg.op;
	s.op = [op, beta](const typename C::Element &x) { return beta * op(x); };
	s.weight = beta * alg.weight;
	s.label = alg.label + "*(" + beta.str() + ")";
	return s;
}

template <class C>
RBAlgebra<C> with_operator(const RBAlgebra<C> &alg,
                           typename RBAlgebra<C>::Operator op, Rational weight,
                           std::string label)
{
	return RBAlgebra<C>{alg.carrier, std::move(op), std::move(weight),
	                    std::move(label)};
}

/// The carrier product as a series ring.
template <class C> using CarrierRing = RBAlgebra<C>;

/// lambda-adjoined unit for the double product, which has no unit of its
/// own: elements c*1 + e with (c,e)(d,f) = (cd, cf + de + e*f).
template <class E> struct UnitExtended
{
	Rational scalar;
	E part;

	friend UnitExtended operator+(const UnitExtended &a, const UnitExtended &b)
	{
		return {a.scalar + b.scalar, a.part + b.part};
	}
	friend UnitExtended operator-(const UnitExtended &a, const UnitExtended &b)
	{
		return {a.scalar - b.scalar, a.part - b.part};
	}
	friend UnitExtended operator*(const Rational &q, const UnitExtended &a)
	{
		return {q * a.scalar, q * a.part};
	}
	friend bool operator==(const UnitExtended &, const UnitExtended &) = default;
};

/// The double product *_theta with a formally adjoined unit, as a series ring.
template <class C> struct DoubleProductRing
{
	using Element = UnitExtended<typename C::Element>;

	const RBAlgebra<C> *alg;

	Element zero() const { return {Rational(0), alg->zero()}; }
	Element one() const { return {Rational(1), alg->zero()}; }
	Element embed(const typename C::Element &x) const { return {Rational(0), x}; }
	Element mul(const Element &a, const Element &b) const
	{
		return {a.scalar * b.scalar,
		        a.scalar * b.part + b.scalar * a.part +
		            double_product(*alg, a.part, b.part)};
	}
};

} // namespace rbx
