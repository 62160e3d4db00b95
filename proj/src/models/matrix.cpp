#include "models/matrix.hpp"

#include "exact/errors.hpp"

namespace rbx {

RatMatrix::RatMatrix(int dim) : dim_(dim), entries_(dim * dim, Rational(0))
{
	if (dim < 1)
		throw ConfigError("matrix dimension must be positive");
}

RatMatrix RatMatrix::identity(int dim)
{
	RatMatrix m(dim);
	for (int i = 1; i <= dim; ++i)
		m(i, i) = Rational(1);
	return m;
}

RatMatrix RatMatrix::unit(int dim, int row, int col)
{
	RatMatrix m(dim);
	m(row, col) = Rational(1);
	return m;
}

const Rational &RatMatrix::operator()(int row, int col) const
{
	return entries_.at((row - 1) * dim_ + (col - 1));
}

Rational &RatMatrix::operator()(int row, int col)
{
	return entries_.at((row - 1) * dim_ + (col - 1));
}

bool RatMatrix::is_zero() const
{
	for (const auto &e : entries_)
		if (!e.is_zero())
			return false;
	return true;
}

void RatMatrix::check(const RatMatrix &o) const
{
	if (o.dim_ != dim_)
		throw StructuralError("matrix dimensions differ");
}

RatMatrix &RatMatrix::operator+=(const RatMatrix &o)
{
	check(o);
	for (std::size_t i = 0; i < entries_.size(); ++i)
		entries_[i] += o.entries_[i];
	return *this;
}

RatMatrix &RatMatrix::operator-=(const RatMatrix &o)
{
	check(o);
	for (std::size_t i = 0; i < entries_.size(); ++i)
		entries_[i] -= o.entries_[i];
	return *this;
}

RatMatrix RatMatrix::operator-() const { return Rational(-1) * *this; }

RatMatrix operator*(const Rational &q, RatMatrix a)
{
	for (auto &e : a.entries_)
		e *= q;
	return a;
}

RatMatrix operator*(const RatMatrix &a, const RatMatrix &b)
{
	a.check(b);
	const int n = a.dim_;
	RatMatrix c(n);
	for (int i = 0; i < n; ++i)
		for (int k = 0; k < n; ++k)
		{
			const Rational &aik = a.entries_[i * n + k];
			if (aik.is_zero())
				continue;
			for (int j = 0; j < n; ++j)
			{
				const Rational &bkj = b.entries_[k * n + j];
				if (!bkj.is_zero())
					c.entries_[i * n + j] += aik * bkj;
			}
		}
	return c;
}

RatMatrix RatMatrix::kron(const RatMatrix &o) const
{
	const int n = dim_, m = o.dim_;
	RatMatrix r(n * m);
	for (int i = 1; i <= n; ++i)
		for (int j = 1; j <= n; ++j)
		{
			const Rational &a = (*this)(i, j);
			if (a.is_zero())
				continue;
			for (int k = 1; k <= m; ++k)
				for (int l = 1; l <= m; ++l)
					r((i - 1) * m + k, (j - 1) * m + l) = a * o(k, l);
		}
	return r;
}

std::string RatMatrix::str() const
{
	std::string s = "[";
	for (int i = 1; i <= dim_; ++i)
	{
		s += i > 1 ? ",[" : "[";
		for (int j = 1; j <= dim_; ++j)
			s += (j > 1 ? "," : "") + (*this)(i, j).str();
		s += "]";
	}
	return s + "]";
}

RatMatrix triangular_projection(const RatMatrix &m)
{
	RatMatrix r(m.dim());
	for (int i = 1; i <= m.dim(); ++i)
		for (int j = i; j <= m.dim(); ++j)
			r(i, j) = m(i, j);
	return r;
}

} // namespace rbx
