#pragma once

#include <string>
#include <utility>
#include <vector>

#include "algebra/check_result.hpp"
#include "models/models.hpp"

namespace rbx {

/// r = sum_i u_i (x) v_i with all factors of one dimension.
struct TensorR
{
	int dim = 2;
	std::vector<std::pair<RatMatrix, RatMatrix>> pairs;

	/// Throws PreconditionError on inconsistent dimensions.
	void validate() const;
	std::string str() const;
};

/// The legs r12, r13, r23 in the threefold tensor power, realized as
/// matrices of dimension dim^3.
struct TensorLegs
{
	RatMatrix r12, r13, r23;
};
TensorLegs tensor_legs(const TensorR &r);

enum class AYBEForm
{
	printed,     // r13 r12 - r12 r23 + r23 r12
	conventional // r13 r12 - r12 r23 + r23 r13
};

const char *aybe_form_name(AYBEForm form);

/// Evaluates the associative Yang-Baxter expression in the chosen form.
RatMatrix aybe_expression(const TensorR &r, AYBEForm form);
CheckResult aybe_check(const TensorR &r, AYBEForm form = AYBEForm::printed);

/// x -> sum_i u_i x v_i as a weight-0 algebra on the matrix carrier.
/// Throws PreconditionError when the tensor fails `form` of the AYBE. The
/// conventional form is the default because the printed one does not imply
/// the Rota-Baxter relation (E12 (x) E33 in dimension 3 satisfies it, yet
/// R_r is not Rota-Baxter).
MatrixAlgebra rb_from_tensor(const TensorR &r,
                             AYBEForm form = AYBEForm::conventional);

/// Simple tensors E_ab (x) E_cd of dimension `dim` satisfying `form`.
std::vector<TensorR> simple_tensor_solutions(int dim, AYBEForm form);

/// Every simple-tensor solution of `form` in dimension `dim` induces a
/// weight-0 Rota-Baxter operator (exhaustive over the matrix-unit basis).
CheckResult check_aybe_implies_rb(int dim, AYBEForm form);

} // namespace rbx
