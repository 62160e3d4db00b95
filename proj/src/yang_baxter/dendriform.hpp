#pragma once

#include <optional>
#include <string>

#include "algebra/check_result.hpp"
#include "algebra/laws.hpp"
#include "exact/errors.hpp"

namespace rbx {

/// Weight-zero half-shuffles form a dendriform algebra:
///   (a^b)^c = a^(b^c + bvc), av(b^c) = (avb)^c, av(bvc) = (a^b + avb)vc,
/// so ^ + v is associative. On a commutative carrier also avb = b^a and
/// av(bvc) = (avb + bva)vc.
template <class C>
CheckResult check_dendriform(const RBAlgebra<C> &alg, const SamplePlan &plan)
{
	if (!alg.weight.is_zero())
		throw PreconditionError("dendriform axioms need weight 0, got " +
		                        alg.weight.str());
	auto up = [&](const auto &a, const auto &b) { return a * alg.R(b); };
	auto down = [&](const auto &a, const auto &b) { return alg.R(a) * b; };
	auto sum = [&](const auto &a, const auto &b) { return up(a, b) + down(a, b); };
	return check_over_samples<3>(
	    "dendriform", "dendriform axioms", alg, plan,
	    [&](const auto &t) -> std::optional<std::string> {
		    const auto &[a, b, c] = t;
		    if (auto m = mismatch(alg, "(a^b)^c = a^(b^c + bvc)", up(up(a, b), c),
		                          up(a, sum(b, c))))
			    return m;
		    if (auto m = mismatch(alg, "av(b^c) = (avb)^c", down(a, up(b, c)),
		                          up(down(a, b), c)))
			    return m;
		    if (auto m = mismatch(alg, "av(bvc) = (a^b + avb)vc",
		                          down(a, down(b, c)), down(sum(a, b), c)))
			    return m;
		    if (auto m = mismatch(alg, "^+v associative", sum(sum(a, b), c),
		                          sum(a, sum(b, c))))
			    return m;
		    if (!alg.commutative())
			    return std::nullopt;
		    if (auto m = mismatch(alg, "avb = b^a", down(a, b), up(b, a)))
			    return m;
		    return mismatch(alg, "av(bvc) = (avb + bva)vc", down(a, down(b, c)),
		                    down(down(a, b) + down(b, a), c));
	    });
}

/// Commutative half-shuffle relations of weight theta:
///   xvy = y^x,  (x^y)^z = x^(y^z + z^y + theta yz),
/// the shuffle relations at weight 0 and the quasi-shuffle ones at weight 1.
template <class C>
CheckResult check_commutative_half_shuffles(const RBAlgebra<C> &alg,
                                            const SamplePlan &plan)
{
	if (!alg.commutative())
		throw PreconditionError("commutative half-shuffle relations need a "
		                        "commutative carrier");
	const bool shuffle = alg.weight.is_zero();
	auto up = [&](const auto &a, const auto &b) { return a * alg.R(b); };
	auto down = [&](const auto &a, const auto &b) { return alg.R(a) * b; };
	return check_over_samples<3>(
	    shuffle ? "shuffle-relations" : "quasi-shuffle-relations",
	    shuffle ? "shuffle half-products" : "quasi-shuffle half-products", alg,
	    plan, [&](const auto &t) -> std::optional<std::string> {
		    const auto &[x, y, z] = t;
		    if (auto m = mismatch(alg, "xvy = y^x", down(x, y), up(y, x)))
			    return m;
		    return mismatch(alg, "(x^y)^z = x^(y^z + z^y + theta yz)",
		                    up(up(x, y), z),
		                    up(x, up(y, z) + up(z, y) + alg.weight * (y * z)));
	    });
}

/// R(x)R(y) = [R(xR(y)) + R(yR(x))] + theta R(xy) and
/// R(x)R(yR(z)) = [R(xR(yR(z))) + R(yR(xR(z))) + R(yR(zR(x)))]
///              + theta [R(xyR(z)) + R(yR(xz))]
/// in a commutative algebra.
template <class C>
CheckResult check_quasi_shuffle_expansions(const RBAlgebra<C> &alg,
                                           const SamplePlan &plan)
{
	if (!alg.commutative())
		throw PreconditionError("quasi-shuffle expansions need a commutative "
		                        "carrier");
	const auto &t = alg.weight;
	return check_over_samples<3>(
	    "quasi-shuffle-expansion", "expansion of products of iterated R", alg,
	    plan, [&](const auto &s) -> std::optional<std::string> {
		    const auto &[x, y, z] = s;
		    auto R = [&](const auto &a) { return alg.R(a); };
		    if (auto m = mismatch(alg, "R(x)R(y)", R(x) * R(y),
		                          R(x * R(y)) + R(y * R(x)) + t * R(x * y)))
			    return m;
		    return mismatch(alg, "R(x)R(yR(z))", R(x) * R(y * R(z)),
		                    R(x * R(y * R(z))) + R(y * R(x * R(z))) +
		                        R(y * R(z * R(x))) +
		                        t * (R(x * y * R(z)) + R(y * R(x * z))));
	    });
}

} // namespace rbx
