#pragma once

#include <string>
#include <vector>

#include "algebra/rb_algebra.hpp"
#include "algebra/sampling.hpp"
#include "models/laurent.hpp"
#include "models/matrix.hpp"
#include "models/poly_function.hpp"
#include "models/polynomial.hpp"
#include "models/sequence.hpp"

namespace rbx {

/// Rota's standard algebra: windows of sequences of (non)commutative
/// polynomials in x1, x2, ... truncated at total degree `cap`.
template <bool Commutative> struct StandardCarrier
{
	using Poly = Polynomial<Commutative>;
	using Element = SeqElement<Poly>;

	int window = 10;
	int cap = 8;
	int alphabet = 3; // letters used by random samples and the basis

	Element zero() const { return Element(std::vector<Poly>(window, Poly(cap))); }
	Element unit() const { return constant(Rational(1)); }
	bool commutative() const { return Commutative; }
	std::string render(const Element &x) const { return x.str(); }

	Element constant(const Rational &c) const
	{
		return Element(std::vector<Poly>(window, Poly::constant(c, cap)));
	}

	/// The generator sequence (0, x1, x2, ..., x_{W-1}): entry k holds x_k.
	Element generator() const
	{
		auto s = zero();
		for (int k = 1; k < window; ++k)
			s[k] = Poly::letter(k, cap);
		return s;
	}

	/// The constant sequence (x_l, x_l, ...).
	Element letter(int l) const
	{
		return Element(std::vector<Poly>(window, Poly::letter(l, cap)));
	}

	/// poly placed at entry k, zero elsewhere.
	Element delta(int k, const Poly &p) const
	{
		auto s = zero();
		s[k] = p;
		return s;
	}

	/// delta_k * {1, x1, x2} for every window index k.
	std::vector<Element> basis() const
	{
		std::vector<Element> b;
		for (int k = 0; k < window; ++k)
		{
			b.push_back(delta(k, Poly::constant(Rational(1), cap)));
			b.push_back(delta(k, Poly::letter(1, cap)));
			b.push_back(delta(k, Poly::letter(2, cap)));
		}
		return b;
	}

	/// Entries c0 + c1 x_a + c2 x_b with small random rationals and letters.
	Element random(Rng &rng) const
	{
		auto s = zero();
		for (int k = 0; k < window; ++k)
		{
			Poly p = Poly::constant(draw_rational(rng), cap);
			p += Poly::letter(draw(rng, 1, alphabet), cap, draw_rational(rng));
			p += Poly::letter(draw(rng, 1, alphabet), cap, draw_rational(rng));
			s[k] = p;
		}
		return s;
	}
};

using StandardCommCarrier = StandardCarrier<true>;
using StandardNCCarrier = StandardCarrier<false>;

/// Scalar sequences on a finite window, for the summation operator.
struct ScalarSeqCarrier
{
	using Element = ScalarSeq;

	int window = 10;

	Element zero() const { return Element(std::vector<Rational>(window, Rational(0))); }
	Element unit() const { return Element(std::vector<Rational>(window, Rational(1))); }
	bool commutative() const { return true; }
	std::string render(const Element &x) const { return x.str(); }
	std::vector<Element> basis() const
	{
		std::vector<Element> b;
		for (int k = 0; k < window; ++k)
		{
			auto e = zero();
			e[k] = Rational(1);
			b.push_back(e);
		}
		return b;
	}
	Element random(Rng &rng) const
	{
		auto e = zero();
		for (int k = 0; k < window; ++k)
			e[k] = draw_rational(rng);
		return e;
	}
};

/// Laurent polynomials in eps; samples use exponents in [sample_low, sample_high].
struct LaurentCarrier
{
	using Element = LaurentElement;

	int pole_bound = LaurentElement::default_pole_bound;
	int regular_bound = LaurentElement::default_regular_bound;
	int sample_low = -2;
	int sample_high = 3;

	Element zero() const { return Element(pole_bound, regular_bound); }
	Element unit() const { return monomial(0, Rational(1)); }
	bool commutative() const { return true; }
	std::string render(const Element &x) const { return x.str(); }
	Element monomial(int k, const Rational &c) const
	{
		return Element::monomial(k, c, pole_bound, regular_bound);
	}
	std::vector<Element> basis() const
	{
		std::vector<Element> b;
		for (int k = sample_low; k <= sample_high; ++k)
			b.push_back(monomial(k, Rational(1)));
		return b;
	}
	Element random(Rng &rng) const
	{
		auto e = zero();
		for (int k = sample_low; k <= sample_high; ++k)
			e.add_term(k, draw_rational(rng));
		return e;
	}
};

struct MatrixCarrier
{
	using Element = RatMatrix;

	int dim = 3;

	Element zero() const { return RatMatrix(dim); }
	Element unit() const { return RatMatrix::identity(dim); }
	bool commutative() const { return false; }
	std::string render(const Element &x) const { return x.str(); }
	/// Matrix units E_ij in row-major order.
	std::vector<Element> basis() const
	{
		std::vector<Element> b;
		for (int i = 1; i <= dim; ++i)
			for (int j = 1; j <= dim; ++j)
				b.push_back(RatMatrix::unit(dim, i, j));
		return b;
	}
	Element random(Rng &rng) const
	{
		RatMatrix m(dim);
		for (int i = 1; i <= dim; ++i)
			for (int j = 1; j <= dim; ++j)
				m(i, j) = draw_rational(rng);
		return m;
	}
};

/// Polynomial functions of t; samples have degree <= sample_degree, the
/// basis is t^0..t^basis_degree.
struct PolyFunctionCarrier
{
	using Element = PolyFunction;

	int cap = PolyFunction::default_cap;
	int basis_degree = 6;
	int sample_degree = 2;

	Element zero() const { return PolyFunction(cap); }
	Element unit() const { return PolyFunction::constant(Rational(1), cap); }
	bool commutative() const { return true; }
	std::string render(const Element &x) const { return x.str(); }
	std::vector<Element> basis() const
	{
		std::vector<Element> b;
		for (int k = 0; k <= basis_degree; ++k)
			b.push_back(PolyFunction::monomial(k, Rational(1), cap));
		return b;
	}
	Element random(Rng &rng) const
	{
		auto p = zero();
		for (int k = 0; k <= sample_degree; ++k)
			p += PolyFunction::monomial(k, draw_rational(rng), cap);
		return p;
	}
};

} // namespace rbx
