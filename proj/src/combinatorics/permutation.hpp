#pragma once

#include <string>
#include <vector>

namespace rbx {

inline constexpr int max_enumeration_size = 8;

/// Bijection of {1..n} in one-line notation: images()[i-1] = sigma(i).
class Permutation
{
  public:
	/// Throws PreconditionError unless `images` is a permutation of 1..n.
	explicit Permutation(std::vector<int> images);
	static Permutation identity(int n);

	int size() const { return static_cast<int>(images_.size()); }
	int operator()(int i) const { return images_[i - 1]; }
	const std::vector<int> &images() const { return images_; }

	friend bool operator==(const Permutation &, const Permutation &) = default;

	std::string str() const;

  private:
	std::vector<int> images_;
};

/// Cycles c_j = (a_j0 a_j1 ...) with sigma(a_ji) = a_j(i+1). Canonical form:
/// each cycle starts with its maximal element, cycles sorted by increasing
/// first entry.
struct CycleDecomposition
{
	std::vector<std::vector<int>> cycles;

	friend bool operator==(const CycleDecomposition &,
	                       const CycleDecomposition &) = default;

	/// "(43)(512)"; entries above 9 are comma separated.
	std::string str() const;
};

CycleDecomposition canonical_cycles(const Permutation &p);

/// Inverse of canonical_cycles; accepts cycles in any rotation and order.
Permutation permutation_from_cycles(int n,
                                    const std::vector<std::vector<int>> &cycles);

/// All n! permutations of 1..n in lexicographic order; 1 <= n <= 8.
std::vector<Permutation> permutations(int n);

} // namespace rbx
