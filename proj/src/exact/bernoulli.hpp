#pragma once

#include <vector>

#include "exact/rational.hpp"

namespace rbx {

/// Bernoulli numbers B_0..B_max in the x/(e^x - 1) convention (B_1 = -1/2),
/// generated from sum_{k=0}^{n} C(n+1,k) B_k = 0.
class BernoulliTable
{
  public:
	static constexpr unsigned default_max = 64;

	explicit BernoulliTable(unsigned max_index = default_max);

	unsigned max_index() const { return static_cast<unsigned>(values_.size()) - 1; }

	/// Throws BoundsError beyond max_index().
	const Rational &operator[](unsigned n) const;

	const std::vector<Rational> &values() const { return values_; }

  private:
	std::vector<Rational> values_;
};

/// B_n from a shared table of default size.
const Rational &bernoulli(unsigned n);

} // namespace rbx
