#pragma once

#include "algebra/rb_algebra.hpp"
#include "models/carriers.hpp"

namespace rbx {

using StandardCommAlgebra = RBAlgebra<StandardCommCarrier>;
using StandardNCAlgebra = RBAlgebra<StandardNCCarrier>;
using SummationAlgebra = RBAlgebra<ScalarSeqCarrier>;
using LaurentAlgebra = RBAlgebra<LaurentCarrier>;
using MatrixAlgebra = RBAlgebra<MatrixCarrier>;
using IntegrationAlgebra = RBAlgebra<PolyFunctionCarrier>;

/// Commutative standard algebra, partial-sum operator, weight 1.
StandardCommAlgebra make_standard_comm(int window = 10, int cap = 8,
                                       int alphabet = 3);
/// Noncommutative standard algebra, partial-sum operator, weight 1.
StandardNCAlgebra make_standard_nc(int window = 10, int cap = 8,
                                   int alphabet = 3);
/// Scalar sequences with the summation operator, weight 1.
SummationAlgebra make_summation(int window = 10);
/// Laurent polynomials with the pole projection, weight -1.
LaurentAlgebra make_laurent(int pole_bound = LaurentElement::default_pole_bound,
                            int regular_bound =
                                LaurentElement::default_regular_bound);
/// n x n rational matrices with the upper-triangular projection, weight -1.
MatrixAlgebra make_matrix(int dim = 3);
/// Polynomial functions with the Riemann integral from 0, weight 0.
IntegrationAlgebra make_integration(int cap = PolyFunction::default_cap);

/// Negative control: the triangular projector that also keeps entry (dim,1).
/// Not a Rota-Baxter operator. Requires dim >= 3.
MatrixAlgebra make_corrupted_matrix(int dim = 3);

} // namespace rbx
