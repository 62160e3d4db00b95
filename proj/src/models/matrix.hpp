#pragma once

#include <string>
#include <vector>

#include "exact/rational.hpp"

namespace rbx {

/// Square matrix over the rationals.
class RatMatrix
{
  public:
	explicit RatMatrix(int dim = 2);
	static RatMatrix identity(int dim);
	/// Matrix unit E_{row,col} (1-based).
	static RatMatrix unit(int dim, int row, int col);

	int dim() const { return dim_; }
	/// 1-based access.
	const Rational &operator()(int row, int col) const;
	Rational &operator()(int row, int col);
	bool is_zero() const;

	RatMatrix &operator+=(const RatMatrix &o);
	RatMatrix &operator-=(const RatMatrix &o);
	friend RatMatrix operator+(RatMatrix a, const RatMatrix &b) { return a += b; }
	friend RatMatrix operator-(RatMatrix a, const RatMatrix &b) { return a -= b; }
	RatMatrix operator-() const;
	friend RatMatrix operator*(const Rational &q, RatMatrix a);
	friend RatMatrix operator*(const RatMatrix &a, const RatMatrix &b);
	friend bool operator==(const RatMatrix &, const RatMatrix &) = default;

	/// Kronecker product, dimension dim()*o.dim().
	RatMatrix kron(const RatMatrix &o) const;

	/// "[[1,0],[0,1]]"
	std::string str() const;

  private:
	void check(const RatMatrix &o) const;

	int dim_;
	std::vector<Rational> entries_;
};

/// Keeps entries with row <= col (upper triangle including the diagonal).
/// Idempotent Rota-Baxter operator of weight -1; its complement projects onto
/// the strictly lower triangular subalgebra.
RatMatrix triangular_projection(const RatMatrix &m);

} // namespace rbx
