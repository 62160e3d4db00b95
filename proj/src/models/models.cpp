#include "models/models.hpp"

#include "exact/errors.hpp"

namespace rbx {

namespace {

void check_window(int window)
{
	if (window < 2 || window > 64)
		throw ConfigError("window must lie in 2..64");
}

} // namespace

StandardCommAlgebra make_standard_comm(int window, int cap, int alphabet)
{
	check_window(window);
	if (cap < 1 || alphabet < 2)
		throw ConfigError("standard algebra needs cap >= 1 and alphabet >= 2");
	return {StandardCommCarrier{window, cap, alphabet},
	        [](const auto &s) { return standard_sum_operator(s); }, Rational(1),
	        "standard-comm"};
}

StandardNCAlgebra make_standard_nc(int window, int cap, int alphabet)
{
	check_window(window);
	if (cap < 1 || alphabet < 2)
		throw ConfigError("standard algebra needs cap >= 1 and alphabet >= 2");
	return {StandardNCCarrier{window, cap, alphabet},
	        [](const auto &s) { return standard_sum_operator(s); }, Rational(1),
	        "standard-nc"};
}

SummationAlgebra make_summation(int window)
{
	check_window(window);
	return {ScalarSeqCarrier{window},
	        [](const ScalarSeq &s) { return summation_operator(s); },
	        Rational(1), "summation"};
}

LaurentAlgebra make_laurent(int pole_bound, int regular_bound)
{
	LaurentCarrier c;
	c.pole_bound = pole_bound;
	c.regular_bound = regular_bound;
	if (pole_bound < 2 || regular_bound < 3)
		throw ConfigError("Laurent bounds must cover the sample exponents [-2, 3]");
	return {c, [](const LaurentElement &x) { return laurent_pole_projection(x); },
	        Rational(-1), "laurent"};
}

MatrixAlgebra make_matrix(int dim)
{
	if (dim < 2 || dim > 8)
		throw ConfigError("matrix dimension must lie in 2..8");
	return {MatrixCarrier{dim},
	        [](const RatMatrix &m) { return triangular_projection(m); },
	        Rational(-1), "matrix"};
}

IntegrationAlgebra make_integration(int cap)
{
	if (cap < 8)
		throw ConfigError("integration degree cap must be at least 8");
	PolyFunctionCarrier c;
	c.cap = cap;
	return {c, [](const PolyFunction &p) { return riemann_integral(p); },
	        Rational(0), "integration"};
}

MatrixAlgebra make_corrupted_matrix(int dim)
{
	if (dim < 3)
		throw ConfigError("corrupted matrix model needs dimension >= 3");
	auto alg = make_matrix(dim);
	// Keeping (2,1) would give the block-triangular projector, which is still
	// Rota-Baxter; (dim,1) breaks closure of the image (E_{n1} E_{12} = E_{n2}).
	alg.op = [dim](const RatMatrix &m) {
		auto r = triangular_projection(m);
		r(dim, 1) = m(dim, 1);
		return r;
	};
	alg.label = "matrix(corrupted)";
	return alg;
}

} // namespace rbx
