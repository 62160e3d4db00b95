#include "combinatorics/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "exact/errors.hpp"

namespace rbx {

namespace {

void check_size(int n)
{
	if (n < 1 || n > max_enumeration_size)
		throw ConfigError("enumeration size " + std::to_string(n) +
		                  " outside 1.." +
		                  std::to_string(max_enumeration_size));
}

std::string join_entries(const std::vector<int> &v, int n)
{
	std::string s;
	for (std::size_t i = 0; i < v.size(); ++i)
	{
		if (i > 0 && n > 9)
			s += ",";
		s += std::to_string(v[i]);
	}
	return s;
}

} // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images))
{
	const int n = size();
	std::vector<char> seen(n + 1, 0);
	for (int v : images_)
	{
		if (v < 1 || v > n || seen[v])
			throw PreconditionError("not a permutation of 1.." +
			                        std::to_string(n));
		seen[v] = 1;
	}
}

Permutation Permutation::identity(int n)
{
	std::vector<int> id(n);
	std::iota(id.begin(), id.end(), 1);
	return Permutation(std::move(id));
}

std::string Permutation::str() const
{
	return "[" + join_entries(images_, 10) + "]";
}

std::string CycleDecomposition::str() const
{
	int n = 0;
	for (const auto &c : cycles)
		n += static_cast<int>(c.size());
	std::string s;
	for (const auto &c : cycles)
		s += "(" + join_entries(c, n) + ")";
	return s;
}

CycleDecomposition canonical_cycles(const Permutation &p)
{
	const int n = p.size();
	std::vector<char> visited(n + 1, 0);
	CycleDecomposition d;
	for (int start = 1; start <= n; ++start)
	{
		if (visited[start])
			continue;
		std::vector<int> cycle;
		for (int i = start; !visited[i]; i = p(i))
		{
			visited[i] = 1;
			cycle.push_back(i);
		}
		std::rotate(cycle.begin(), std::max_element(cycle.begin(), cycle.end()),
		            cycle.end());
		d.cycles.push_back(std::move(cycle));
	}
	std::sort(d.cycles.begin(), d.cycles.end(),
	          [](const auto &a, const auto &b) { return a.front() < b.front(); });
	return d;
}

Permutation permutation_from_cycles(int n,
                                    const std::vector<std::vector<int>> &cycles)
{
	std::vector<int> images(n, 0);
	for (const auto &c : cycles)
		for (std::size_t i = 0; i < c.size(); ++i)
		{
			int from = c[i], to = c[(i + 1) % c.size()];
			if (from < 1 || from > n || images[from - 1] != 0)
				throw PreconditionError("cycles do not partition 1..n");
			images[from - 1] = to;
		}
	if (std::count(images.begin(), images.end(), 0) != 0)
		throw PreconditionError("cycles do not cover 1..n");
	return Permutation(std::move(images));
}

std::vector<Permutation> permutations(int n)
{
	check_size(n);
	std::vector<int> current(n);
	std::iota(current.begin(), current.end(), 1);
	std::vector<Permutation> all;
	do
		all.emplace_back(current);
	while (std::next_permutation(current.begin(), current.end()));
	return all;
}

} // namespace rbx
