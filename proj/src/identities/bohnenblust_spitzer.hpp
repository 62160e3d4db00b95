#pragma once

#include <optional>
#include <string>
#include <vector>

#include "algebra/check_result.hpp"
#include "algebra/laws.hpp"
#include "combinatorics/permutation.hpp"
#include "combinatorics/set_partition.hpp"
#include "exact/errors.hpp"

namespace rbx {

inline constexpr int max_bs_arity = 6;

template <class C> struct BSOperands
{
	std::vector<typename C::Element> F; // F_1..F_n stored 0-based

	int arity() const { return static_cast<int>(F.size()); }
	const typename C::Element &operator()(int j) const { return F.at(j - 1); }
};

template <class C>
void require_bs_arity(const BSOperands<C> &ops)
{
	if (ops.arity() < 1 || ops.arity() > max_bs_arity)
		throw PreconditionError("Bohnenblust-Spitzer arity must be in 1.." +
		                        std::to_string(max_bs_arity) + ", got " +
		                        std::to_string(ops.arity()));
}

/// R(...R(R(F_s1)F_s2)...)F_sn for one ordering s.
template <class C>
typename C::Element bs_nested(const RBAlgebra<C> &alg, const BSOperands<C> &ops,
                              const Permutation &sigma)
{
	auto g = ops(sigma(1));
	for (int k = 2; k <= sigma.size(); ++k)
		g = alg.R(g) * ops(sigma(k));
	return g;
}

/// Sum of bs_nested over all of S_n.
template <class C>
typename C::Element bs_lhs(const RBAlgebra<C> &alg, const BSOperands<C> &ops)
{
	require_bs_arity(ops);
	auto sum = alg.zero();
	for (const auto &sigma : permutations(ops.arity()))
		sum = sum + bs_nested(alg, ops, sigma);
	return sum;
}

enum class BSVariant
{
	associative, // chains y -> y (theta F)
	prelie       // chains y -> y |>_theta F
};

/// *_theta-product over the canonical cycles of sigma of the chain
/// F_{a0} -> r(F_{a1}) -> r(F_{a2}) ..., innermost factor first.
template <class C>
typename C::Element d_theta_sigma(const RBAlgebra<C> &alg,
                                  const BSOperands<C> &ops,
                                  const Permutation &sigma, BSVariant variant)
{
	if (sigma.size() != ops.arity())
		throw PreconditionError("permutation degree " +
		                        std::to_string(sigma.size()) +
		                        " does not match " +
		                        std::to_string(ops.arity()) + " operands");
	std::optional<typename C::Element> product;
	for (const auto &cycle : canonical_cycles(sigma).cycles)
	{
		auto v = ops(cycle[0]);
		for (std::size_t i = 1; i < cycle.size(); ++i)
			v = variant == BSVariant::associative
			        ? v * (alg.weight * ops(cycle[i]))
			        : prelie_left(alg, v, ops(cycle[i]));
		product = product ? double_product(alg, *product, v) : v;
	}
	return *product;
}

/// sum over set partitions of (-theta)^{n-|pi|} times the *_theta-product
/// of (b-1)! prod_{j in b} F_j over the blocks b.
template <class C>
typename C::Element bs_partitions_rhs(const RBAlgebra<C> &alg,
                                      const BSOperands<C> &ops)
{
	const int n = ops.arity();
	auto sum = alg.zero();
	for (const auto &pi : set_partitions(n))
	{
		std::optional<typename C::Element> product;
		for (const auto &block : pi.blocks)
		{
			auto b = ops(block[0]);
			for (std::size_t i = 1; i < block.size(); ++i)
				b = b * ops(block[i]);
			b = factorial(block.size() - 1) * b;
			product = product ? double_product(alg, *product, b) : b;
		}
		sum = sum + pow(-alg.weight, n - pi.block_count()) * *product;
	}
	return sum;
}

template <class C>
typename C::Element bs_cycles_rhs(const RBAlgebra<C> &alg,
                                  const BSOperands<C> &ops)
{
	auto sum = alg.zero();
	for (const auto &sigma : permutations(ops.arity()))
		sum = sum + d_theta_sigma(alg, ops, sigma, BSVariant::prelie);
	return sum;
}

template <class C>
typename C::Element double_product_chain(const RBAlgebra<C> &alg,
                                         const BSOperands<C> &ops)
{
	auto p = ops(1);
	for (int j = 2; j <= ops.arity(); ++j)
		p = double_product(alg, p, ops(j));
	return p;
}

enum class BSForm
{
	commutative_partitions,
	cycles_prelie,
	weight_zero
};

inline const char *bs_form_name(BSForm form)
{
	switch (form)
	{
	case BSForm::commutative_partitions: return "partitions";
	case BSForm::cycles_prelie: return "cycles-prelie";
	case BSForm::weight_zero: return "weight-zero";
	}
	return "?";
}

template <class C>
CheckResult check_bohnenblust_spitzer(const RBAlgebra<C> &alg,
                                      const BSOperands<C> &ops, BSForm form)
{
	require_bs_arity(ops);
	if (form != BSForm::cycles_prelie && !alg.commutative())
		throw PreconditionError(std::string(bs_form_name(form)) +
		                        " form needs a commutative carrier");
	if (form == BSForm::weight_zero && !alg.weight.is_zero())
		throw PreconditionError("weight-zero form needs theta = 0");

	const auto lhs = bs_lhs(alg, ops);
	typename C::Element rhs = alg.zero();
	switch (form)
	{
	case BSForm::commutative_partitions: rhs = bs_partitions_rhs(alg, ops); break;
	case BSForm::cycles_prelie: rhs = bs_cycles_rhs(alg, ops); break;
	case BSForm::weight_zero: rhs = double_product_chain(alg, ops); break;
	}

	std::string params = "n=" + std::to_string(ops.arity()) + ", form=" +
	                     bs_form_name(form) + ", F = [";
	for (int j = 1; j <= ops.arity(); ++j)
		params += (j > 1 ? "; " : "") + alg.render(ops(j));
	params += "]";
	const std::string name =
	    "bohnenblust-spitzer-" + std::string(bs_form_name(form));
	if (auto failure = mismatch(alg, "symmetrized nested sum", lhs, rhs))
		return CheckResult::fail(name, "Bohnenblust-Spitzer identity", alg.label,
		                         params, 1, *failure);
	return CheckResult::pass(name, "Bohnenblust-Spitzer identity", alg.label,
	                         params, 1);
}

} // namespace rbx
