#include "combinatorics/set_partition.hpp"

#include <algorithm>

#include "combinatorics/permutation.hpp"
#include "exact/errors.hpp"

namespace rbx {

std::string SetPartition::str() const
{
	std::string s;
	for (const auto &b : blocks)
	{
		s += "{";
		for (std::size_t i = 0; i < b.size(); ++i)
			s += (i ? "," : "") + std::to_string(b[i]);
		s += "}";
	}
	return s;
}

namespace {

// growth[i] = block of element i+1; growth[i] <= 1 + max(growth[0..i-1])
void enumerate(int n, std::vector<int> &growth, int max_block,
               std::vector<SetPartition> &out)
{
	const int i = static_cast<int>(growth.size());
	if (i == n)
	{
		SetPartition p;
		p.blocks.resize(max_block + 1);
		for (int e = 0; e < n; ++e)
			p.blocks[growth[e]].push_back(e + 1);
		out.push_back(std::move(p));
		return;
	}
	for (int b = 0; b <= max_block + 1; ++b)
	{
		growth.push_back(b);
		enumerate(n, growth, std::max(max_block, b), out);
		growth.pop_back();
	}
}

} // namespace

std::vector<SetPartition> set_partitions(int n)
{
	if (n < 1 || n > max_enumeration_size)
		throw ConfigError("set partition size " + std::to_string(n) +
		                  " outside 1.." +
		                  std::to_string(max_enumeration_size));
	std::vector<SetPartition> out;
	std::vector<int> growth{0};
	enumerate(n, growth, 0, out);
	return out;
}

} // namespace rbx
