#pragma once

#include <optional>
#include <string>

#include "algebra/check_result.hpp"
#include "algebra/laws.hpp"
#include "exact/errors.hpp"

namespace rbx {

/// [R(x),R(y)] = R([R(x),y] + [x,R(y)] + theta[x,y]) on the commutator Lie
/// algebra of the carrier; holds for every Rota-Baxter operator.
template <class C>
CheckResult check_lie_rb_law(const RBAlgebra<C> &alg, const SamplePlan &plan)
{
	auto br = [](const auto &a, const auto &b) { return commutator(a, b); };
	return check_over_samples<2>(
	    "lie-rb-law", "Rota-Baxter relation on the commutator bracket", alg,
	    plan, [&](const auto &t) {
		    const auto &[x, y] = t;
		    return mismatch(alg, "[R(x),R(y)] = R([R(x),y] + [x,R(y)] + theta[x,y])",
		                    br(alg.R(x), alg.R(y)),
		                    alg.R(br(alg.R(x), y) + br(x, alg.R(y)) +
		                          alg.weight * br(x, y)));
	    });
}

/// Operator form of the classical Yang-Baxter equation for a weight-0 R on
/// the commutator Lie algebra: [R(x),R(y)] = R([x,y]_R) with
/// [x,y]_R = [R(x),y] + [x,R(y)] a Lie bracket; x^y = [x,R(y)] is right
/// pre-Lie, xvy = [R(x),y] is left pre-Lie and [x,y]_R = x^y - y^x.
template <class C>
CheckResult check_operator_ybe(const RBAlgebra<C> &alg, const SamplePlan &plan)
{
	if (!alg.weight.is_zero())
		throw PreconditionError("operator Yang-Baxter check needs weight 0");
	auto br = [](const auto &a, const auto &b) { return commutator(a, b); };
	auto br_R = [&](const auto &a, const auto &b) {
		return br(alg.R(a), b) + br(a, alg.R(b));
	};
	auto up = [&](const auto &a, const auto &b) { return br(a, alg.R(b)); };
	auto down = [&](const auto &a, const auto &b) { return br(alg.R(a), b); };
	return check_over_samples<3>(
	    "operator-ybe", "classical Yang-Baxter equation, operator form", alg,
	    plan, [&](const auto &t) -> std::optional<std::string> {
		    const auto &[x, y, z] = t;
		    if (auto m = mismatch(alg, "[R(x),R(y)] = R([x,y]_R)",
		                          br(alg.R(x), alg.R(y)), alg.R(br_R(x, y))))
			    return m;
		    if (auto m = mismatch(alg, "Jacobi for [,]_R",
		                          br_R(x, br_R(y, z)) + br_R(y, br_R(z, x)) +
		                              br_R(z, br_R(x, y)),
		                          alg.zero()))
			    return m;
		    if (auto m = mismatch(alg, "x^y = [x,R(y)] right pre-Lie",
		                          up(up(x, y), z) - up(x, up(y, z)),
		                          up(up(x, z), y) - up(x, up(z, y))))
			    return m;
		    if (auto m = mismatch(alg, "xvy = [R(x),y] left pre-Lie",
		                          down(down(x, y), z) - down(x, down(y, z)),
		                          down(down(y, x), z) - down(y, down(x, z))))
			    return m;
		    return mismatch(alg, "[x,y]_R = x^y - y^x", br_R(x, y),
		                    up(x, y) - up(y, x));
	    });
}

/// B = 2R + theta id satisfies B(x)B(y) = B(B(x)y + xB(y)) - theta^2 xy, its
/// Lie form [B(x),B(y)] = B([B(x),y] + [x,B(y)]) - theta^2 [x,y], the bracket
/// (1/2)([B(x),y] + [x,B(y)]) is Lie, and x *_theta y = (B(x)y + xB(y))/2.
template <class C>
CheckResult check_modified_ybe(const RBAlgebra<C> &alg, const SamplePlan &plan)
{
	auto B = [&](const auto &a) { return b_operator(alg, a); };
	auto br = [](const auto &a, const auto &b) { return commutator(a, b); };
	auto br_B = [&](const auto &a, const auto &b) {
		return Rational(1, 2) * (br(B(a), b) + br(a, B(b)));
	};
	const Rational t2 = alg.weight * alg.weight;
	return check_over_samples<3>(
	    "modified-ybe", "modified Yang-Baxter equation", alg, plan,
	    [&](const auto &t) -> std::optional<std::string> {
		    const auto &[x, y, z] = t;
		    if (auto m = mismatch(alg, "B(x)B(y) = B(B(x)y + xB(y)) - theta^2 xy",
		                          B(x) * B(y),
		                          B(B(x) * y + x * B(y)) - t2 * (x * y)))
			    return m;
		    if (auto m = mismatch(
		            alg, "[B(x),B(y)] = B([B(x),y] + [x,B(y)]) - theta^2 [x,y]",
		            br(B(x), B(y)),
		            B(br(B(x), y) + br(x, B(y))) - t2 * br(x, y)))
			    return m;
		    if (auto m = mismatch(alg, "Jacobi for [,]_B",
		                          br_B(x, br_B(y, z)) + br_B(y, br_B(z, x)) +
		                              br_B(z, br_B(x, y)),
		                          alg.zero()))
			    return m;
		    return mismatch(alg, "x*y = (B(x)y + xB(y))/2",
		                    double_product(alg, x, y),
		                    Rational(1, 2) * (B(x) * y + x * B(y)));
	    });
}

} // namespace rbx
