#include "yang_baxter/tensor.hpp"

#include "algebra/laws.hpp"
#include "exact/errors.hpp"

namespace rbx {

void TensorR::validate() const
{
	if (dim < 1)
		throw PreconditionError("tensor dimension must be positive");
	for (const auto &[u, v] : pairs)
		if (u.dim() != dim || v.dim() != dim)
			throw PreconditionError("tensor factor dimension differs from " +
			                        std::to_string(dim));
}

std::string TensorR::str() const
{
	if (pairs.empty())
		return "0";
	std::string s;
	for (const auto &[u, v] : pairs)
		s += (s.empty() ? "" : " + ") + u.str() + " (x) " + v.str();
	return s;
}

TensorLegs tensor_legs(const TensorR &r)
{
	r.validate();
	const int n = r.dim;
	const auto one = RatMatrix::identity(n);
	TensorLegs legs{RatMatrix(n * n * n), RatMatrix(n * n * n),
	                RatMatrix(n * n * n)};
	for (const auto &[u, v] : r.pairs)
	{
		legs.r12 += u.kron(v).kron(one);
		legs.r13 += u.kron(one).kron(v);
		legs.r23 += one.kron(u).kron(v);
	}
	return legs;
}

const char *aybe_form_name(AYBEForm form)
{
	return form == AYBEForm::printed ? "printed" : "conventional";
}

RatMatrix aybe_expression(const TensorR &r, AYBEForm form)
{
	const auto l = tensor_legs(r);
	auto e = l.r13 * l.r12 - l.r12 * l.r23;
	e += form == AYBEForm::printed ? l.r23 * l.r12 : l.r23 * l.r13;
	return e;
}

CheckResult aybe_check(const TensorR &r, AYBEForm form)
{
	const std::string name = std::string("aybe-") + aybe_form_name(form);
	const std::string params = "r = " + r.str();
	const auto e = aybe_expression(r, form);
	if (!e.is_zero())
		return CheckResult::fail(name, "associative Yang-Baxter equation",
		                         "matrix-tensor", params, 1,
		                         "r13r12 - r12r23 + " +
		                             std::string(form == AYBEForm::printed
		                                             ? "r23r12"
		                                             : "r23r13") +
		                             " = " + e.str());
	return CheckResult::pass(name, "associative Yang-Baxter equation",
	                         "matrix-tensor", params, 1);
}

MatrixAlgebra rb_from_tensor(const TensorR &r, AYBEForm form)
{
	auto check = aybe_check(r, form);
	if (!check.passed)
		throw PreconditionError("tensor fails the associative Yang-Baxter "
		                        "equation: " +
		                        *check.counterexample);
	auto pairs = r.pairs;
	const int n = r.dim;
	return with_operator(
	    make_matrix(n),
	    [pairs, n](const RatMatrix &x) {
		    RatMatrix out(n);
		    for (const auto &[u, v] : pairs)
			    out += u * x * v;
		    return out;
	    },
	    Rational(0), "tensor[" + r.str() + "]");
}

CheckResult check_aybe_implies_rb(int dim, AYBEForm form)
{
	const std::string name = std::string("aybe-implies-rb-") + aybe_form_name(form);
	const std::string params = "dim=" + std::to_string(dim) + ", simple tensors";
	SamplePlan plan;
	plan.mode = SamplePlan::Mode::exhaustive;
	int cases = 0;
	for (const auto &r : simple_tensor_solutions(dim, form))
	{
		++cases;
		auto law = check_rb_law(rb_from_tensor(r, form), plan);
		if (!law.passed)
			return CheckResult::fail(name, "operators from associative Yang-Baxter solutions",
			                         "matrix-tensor", params, cases,
			                         "r = " + r.str() + "; " + *law.counterexample);
	}
	return CheckResult::pass(name, "operators from associative Yang-Baxter solutions",
	                         "matrix-tensor", params, cases);
}

std::vector<TensorR> simple_tensor_solutions(int dim, AYBEForm form)
{
	std::vector<TensorR> out;
	for (int a = 1; a <= dim; ++a)
		for (int b = 1; b <= dim; ++b)
			for (int c = 1; c <= dim; ++c)
				for (int d = 1; d <= dim; ++d)
				{
					TensorR r{dim, {{RatMatrix::unit(dim, a, b),
					                 RatMatrix::unit(dim, c, d)}}};
					if (aybe_expression(r, form).is_zero())
						out.push_back(std::move(r));
				}
	return out;
}

} // namespace rbx
