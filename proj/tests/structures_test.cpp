#include <gtest/gtest.h>

#include "combinatorics/word_checks.hpp"
#include "models/symmetric.hpp"
#include "models/vector_field.hpp"
#include "yang_baxter/dendriform.hpp"
#include "yang_baxter/tensor.hpp"
#include "yang_baxter/ybe.hpp"

using namespace rbx;

namespace {

void expect_pass(const CheckResult &r)
{
	EXPECT_TRUE(r.passed) << r.name << " on " << r.model << ": "
	                      << r.counterexample.value_or("");
}

SamplePlan random_plan(int trials = 40)
{
	SamplePlan p;
	p.mode = SamplePlan::Mode::random;
	p.trials = trials;
	return p;
}

SamplePlan exhaustive()
{
	SamplePlan p;
	p.mode = SamplePlan::Mode::exhaustive;
	return p;
}

TensorR e12_tensor()
{
	return TensorR{2, {{RatMatrix::unit(2, 1, 2), RatMatrix::unit(2, 1, 2)}}};
}

} // namespace

TEST(Symmetric, EntryFourOfSecondIterate)
{
	auto alg = make_standard_comm(10, 8, 3);
	auto r2 = iterated_R(alg, alg.carrier.generator(), 2);
	CPoly expected(8);
	expected.add_term(Word{1, 2}, Rational(1));
	expected.add_term(Word{1, 3}, Rational(1));
	expected.add_term(Word{2, 3}, Rational(1));
	EXPECT_EQ(r2[4], expected);
}

TEST(Symmetric, GeneratorPartialSums)
{
	auto alg = make_standard_comm(6, 4, 3);
	auto r = alg.R(alg.carrier.generator());
	EXPECT_TRUE(r[0].is_zero());
	EXPECT_TRUE(r[1].is_zero());
	EXPECT_EQ(r[3], CPoly::letter(1, 4) + CPoly::letter(2, 4));
}

TEST(Symmetric, AllOrdersAndIndices)
{
	auto comm = make_standard_comm(8, 6, 3);
	auto nc = make_standard_nc(8, 6, 3);
	for (int n = 1; n <= 4; ++n)
		for (int k = 0; k < 8; ++k)
		{
			expect_pass(elementary_symmetric_check(comm, n, k));
			expect_pass(elementary_symmetric_check(nc, n, k));
		}
}

TEST(Symmetric, NoncommutativeWordsAreOrdered)
{
	auto nc = make_standard_nc(6, 4, 3);
	auto r2 = iterated_R(nc, nc.carrier.generator(), 2);
	EXPECT_EQ(r2[4].coefficient(Word{1, 2}), Rational(1));
	EXPECT_EQ(r2[4].coefficient(Word{2, 1}), Rational(0));
}

TEST(Symmetric, RejectsSmallWindowOrCap)
{
	auto comm = make_standard_comm(6, 3, 3);
	EXPECT_THROW(elementary_symmetric_check(comm, 2, 6), ConfigError);
	EXPECT_THROW(elementary_symmetric_check(comm, 4, 3), ConfigError);
}

TEST(Summation, SumOfIdentityAndInverse)
{
	auto alg = make_summation(6);
	ScalarSeq f(std::vector<Rational>{0, 1, 2, 3, 4, 5});
	EXPECT_EQ(alg.R(f)[3], Rational(3));
	expect_pass(check_summation_inverse(alg, random_plan()));
}

TEST(VectorFields, ProductAndPreLieLaw)
{
	auto p = vector_field_prelie(VectorField::monomial(2), VectorField::monomial(3));
	EXPECT_EQ(p, VectorField::monomial(4, Rational(3)));
	expect_pass(check_vector_field_prelie(4));
}

TEST(Dendriform, IntegrationAndTensorModels)
{
	auto integ = make_integration();
	expect_pass(check_dendriform(integ, random_plan()));
	auto t = integ.carrier;
	auto one = PolyFunction::constant(Rational(1)), tt = PolyFunction::monomial(1);
	EXPECT_EQ(one * integ.R(tt), PolyFunction::monomial(2, Rational(1, 2)));
	expect_pass(check_dendriform(rb_from_tensor(e12_tensor()), exhaustive()));
	EXPECT_THROW(check_dendriform(make_matrix(2), exhaustive()),
	             PreconditionError);
}

TEST(HalfShuffles, CommutativeRelations)
{
	expect_pass(check_commutative_half_shuffles(make_integration(), random_plan()));
	expect_pass(check_commutative_half_shuffles(make_standard_comm(6, 4, 2),
	                                            random_plan()));
	expect_pass(check_commutative_half_shuffles(make_summation(8), random_plan()));
	expect_pass(check_quasi_shuffle_expansions(make_standard_comm(6, 5, 3),
	                                           random_plan()));
	expect_pass(check_quasi_shuffle_expansions(make_laurent(), random_plan()));
}

TEST(HalfShuffles, NoncommutativeFails)
{
	auto nc = make_standard_nc(5, 4, 2);
	EXPECT_THROW(check_commutative_half_shuffles(nc, random_plan()),
	             PreconditionError);
}

TEST(Words, HalfProductRelations)
{
	expect_pass(check_word_half_products(2, Rational(0), random_plan()));
	expect_pass(check_word_half_products(2, Rational(1), random_plan()));
	expect_pass(check_quasi_shuffle_letters(3));
}

TEST(Words, ShuffleRelationFailsWithMergeWeightMismatch)
{
	// The quasi-shuffle does not satisfy the pure shuffle relation.
	HalfProducts hp{MonoidAlphabet{2}, Rational(1)};
	WordSum x(Word{1}), y(Word{2}), z(Word{1});
	EXPECT_NE(hp.up(hp.up(x, y), z), hp.up(x, hp.up(y, z) + hp.up(z, y)));
}

TEST(Tensor, AYBEExamples)
{
	expect_pass(aybe_check(TensorR{2, {}}));
	expect_pass(aybe_check(e12_tensor()));
	TensorR e11{2, {{RatMatrix::unit(2, 1, 1), RatMatrix::unit(2, 1, 1)}}};
	auto r = aybe_check(e11);
	EXPECT_FALSE(r.passed);
	EXPECT_TRUE(r.counterexample.has_value());
	EXPECT_THROW(rb_from_tensor(e11), PreconditionError);
}

TEST(Tensor, LegsMatchDirectEvaluation)
{
	// (a(x)b(x)1)(a'(x)1(x)b') = aa' (x) b (x) b' for simple tensors.
	auto a = RatMatrix::unit(2, 1, 2), b = RatMatrix::unit(2, 2, 1);
	TensorR r{2, {{a, b}}};
	auto l = tensor_legs(r);
	auto one = RatMatrix::identity(2);
	EXPECT_EQ(l.r12 * l.r13, (a * a).kron(b).kron(b));
	EXPECT_EQ(l.r23, one.kron(a).kron(b));
}

TEST(Tensor, InducedOperatorIsRotaBaxter)
{
	auto alg = rb_from_tensor(e12_tensor());
	expect_pass(check_rb_law(alg, exhaustive()));
	auto x = RatMatrix::unit(2, 2, 1);
	EXPECT_EQ(alg.R(x), RatMatrix::unit(2, 1, 2));
	expect_pass(check_operator_ybe(alg, exhaustive()));
}

TEST(YangBaxter, OperatorYBEOnIntegration)
{
	expect_pass(check_operator_ybe(make_integration(), random_plan()));
}

TEST(YangBaxter, ModifiedRelationHandExample)
{
	auto alg = make_matrix(2);
	auto x = RatMatrix::unit(2, 1, 2), y = RatMatrix::unit(2, 2, 1);
	auto B = [&](const RatMatrix &a) { return b_operator(alg, a); };
	EXPECT_EQ(B(x) * B(y), -RatMatrix::unit(2, 1, 1));
	EXPECT_EQ(B(B(x) * y + x * B(y)) - x * y, -RatMatrix::unit(2, 1, 1));
}

TEST(YangBaxter, ModifiedAndLieLawsOnAllModels)
{
	expect_pass(check_modified_ybe(make_matrix(3), random_plan()));
	expect_pass(check_modified_ybe(make_laurent(), random_plan()));
	expect_pass(check_modified_ybe(make_summation(8), exhaustive()));
	expect_pass(check_modified_ybe(make_standard_nc(5, 4, 2), random_plan(20)));
	expect_pass(check_modified_ybe(make_integration(), random_plan()));
	expect_pass(check_lie_rb_law(make_matrix(3), random_plan()));
	expect_pass(check_lie_rb_law(make_standard_nc(5, 4, 2), random_plan(20)));
}

TEST(YangBaxter, CorruptedOperatorBreaksModifiedRelation)
{
	auto r = check_modified_ybe(make_corrupted_matrix(3), exhaustive());
	EXPECT_FALSE(r.passed);
}

TEST(NegativeControl, CorruptedProjectorFailsRotaBaxter)
{
	auto r = check_rb_law(make_corrupted_matrix(3), exhaustive());
	EXPECT_FALSE(r.passed);
	ASSERT_TRUE(r.counterexample.has_value());
	EXPECT_NE(r.counterexample->find("R(x)R(y)"), std::string::npos);
	EXPECT_THROW(make_corrupted_matrix(2), ConfigError);
}

TEST(Tensor, PrintedFormDoesNotImplyRotaBaxter)
{
	TensorR r{3, {{RatMatrix::unit(3, 1, 2), RatMatrix::unit(3, 3, 3)}}};
	EXPECT_TRUE(aybe_check(r, AYBEForm::printed).passed);
	EXPECT_FALSE(aybe_check(r, AYBEForm::conventional).passed);
	EXPECT_THROW(rb_from_tensor(r), PreconditionError);
	auto forced = rb_from_tensor(r, AYBEForm::printed);
	EXPECT_FALSE(check_rb_law(forced, exhaustive()).passed);
}

TEST(Tensor, ConventionalSolutionsAreRotaBaxter)
{
	for (int n : {2, 3})
	{
		auto sols = simple_tensor_solutions(n, AYBEForm::conventional);
		EXPECT_FALSE(sols.empty());
		for (const auto &r : sols)
			expect_pass(check_rb_law(rb_from_tensor(r), exhaustive()));
	}
	EXPECT_EQ(simple_tensor_solutions(2, AYBEForm::printed).size(), 4u);
	EXPECT_EQ(simple_tensor_solutions(2, AYBEForm::conventional).size(), 6u);
	EXPECT_EQ(simple_tensor_solutions(3, AYBEForm::printed).size(), 30u);
	EXPECT_EQ(simple_tensor_solutions(3, AYBEForm::conventional).size(), 36u);
}
