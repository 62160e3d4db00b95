#pragma once

#include <string>
#include <vector>

namespace rbx {

/// Disjoint cover of {1..n} by nonempty blocks. Blocks are sorted
/// internally and ordered by smallest element.
struct SetPartition
{
	std::vector<std::vector<int>> blocks;

	int block_count() const { return static_cast<int>(blocks.size()); }

	friend bool operator==(const SetPartition &, const SetPartition &) = default;

	/// "{1,3}{2}"
	std::string str() const;
};

/// All partitions of {1..n} (Bell(n) of them), 1 <= n <= 8, in the
/// lexicographic order of their restricted growth strings.
std::vector<SetPartition> set_partitions(int n);

} // namespace rbx
