#include "exact/bernoulli.hpp"

#include <string>

#include "exact/errors.hpp"

namespace rbx {

BernoulliTable::BernoulliTable(unsigned max_index)
{
	values_.reserve(max_index + 1);
	values_.emplace_back(1);
	for (unsigned n = 1; n <= max_index; ++n)
	{
		// C(n+1,n) B_n = -sum_{k<n} C(n+1,k) B_k
		Rational acc(0);
		for (unsigned k = 0; k < n; ++k)
			acc += binomial(n + 1, k) * values_[k];
		values_.push_back(-acc / Rational(n + 1));
	}
}

const Rational &BernoulliTable::operator[](unsigned n) const
{
	if (n >= values_.size())
		throw BoundsError("Bernoulli index " + std::to_string(n) +
		                  " beyond table bound " +
		                  std::to_string(values_.size() - 1));
	return values_[n];
}

const Rational &bernoulli(unsigned n)
{
	static const BernoulliTable table;
	return table[n];
}

} // namespace rbx
