#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "algebra/laws.hpp"
#include "combinatorics/permutation.hpp"
#include "combinatorics/set_partition.hpp"
#include "combinatorics/word.hpp"
#include "exact/bernoulli.hpp"
#include "identities/series_ops.hpp"
#include "models/models.hpp"

using namespace rbx;

namespace {

void expect_pass(const CheckResult &r)
{
	EXPECT_TRUE(r.passed) << r.name << " on " << r.model << ": "
	                      << r.counterexample.value_or("");
}

Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

/// Bernoulli numbers from the generating function x/(e^x - 1): invert the
/// power series of (e^x - 1)/x coefficientwise.
std::vector<Rational> bernoulli_by_inversion(unsigned n)
{
	std::vector<Rational> a(n + 1), b(n + 1);
	for (unsigned k = 0; k <= n; ++k)
		a[k] = Rational(1) / factorial(k + 1);
	for (unsigned k = 0; k <= n; ++k)
	{
		Rational s = k == 0 ? Rational(1) : Rational(0);
		for (unsigned j = 1; j <= k; ++j)
			s -= a[j] * b[k - j];
		b[k] = s; // a[0] = 1
	}
	for (unsigned k = 0; k <= n; ++k)
		b[k] *= factorial(k);
	return b;
}

MatrixAlgebra m2() { return make_matrix(2); }

} // namespace

// ---- exact arithmetic -------------------------------------------------------

TEST(Rational, CanonicalForm)
{
	EXPECT_EQ(q(2, 4), q(1, 2));
	EXPECT_EQ(q(3, -6).str(), "-1/2");
	EXPECT_EQ(q(4, 2).str(), "2");
	EXPECT_EQ(Rational::parse("-10/4"), q(-5, 2));
	EXPECT_EQ(Rational::parse("7"), q(7));
}

TEST(Rational, RejectsMalformedText)
{
	for (const char *bad : {"", "1/0", "x", "1/2/3", "1.5", "/2", "2/"})
		EXPECT_THROW(Rational::parse(bad), ConfigError) << bad;
	EXPECT_THROW(q(1, 0), DomainError);
	EXPECT_THROW(q(1) / q(0), DomainError);
}

TEST(Rational, ArbitraryPrecision)
{
	EXPECT_EQ(factorial(25).str(), "15511210043330985984000000");
	EXPECT_EQ(binomial(60, 30).str(), "118264581564861424");
	EXPECT_EQ(pow(q(2, 3), 3), q(8, 27));
}

TEST(Bernoulli, LowIndices)
{
	EXPECT_EQ(bernoulli(0), q(1));
	EXPECT_EQ(bernoulli(1), q(-1, 2));
	EXPECT_EQ(bernoulli(2), q(1, 6));
	EXPECT_EQ(bernoulli(3), q(0));
}

TEST(Bernoulli, FrozenEvenValues)
{
	EXPECT_EQ(bernoulli(4), q(-1, 30));
	EXPECT_EQ(bernoulli(6), q(1, 42));
	EXPECT_EQ(bernoulli(8), q(-1, 30));
	EXPECT_EQ(bernoulli(10), q(5, 66));
	EXPECT_EQ(bernoulli(12), q(-691, 2730));
}

TEST(Bernoulli, MatchesGeneratingFunctionInversion)
{
	const auto oracle = bernoulli_by_inversion(30);
	for (unsigned n = 0; n <= 30; ++n)
		EXPECT_EQ(bernoulli(n), oracle[n]) << "n = " << n;
	for (unsigned n = 3; n <= 31; n += 2)
		EXPECT_TRUE(bernoulli(n).is_zero());
}

TEST(Bernoulli, IndexBeyondTableThrows)
{
	BernoulliTable t(10);
	EXPECT_EQ(t.max_index(), 10u);
	EXPECT_THROW(t[11], BoundsError);
	EXPECT_THROW(bernoulli(BernoulliTable::default_max + 1), BoundsError);
}

TEST(Series, UnitAndGrading)
{
	auto alg = m2();
	const auto x = RatMatrix::unit(2, 1, 2) + RatMatrix::unit(2, 2, 1);
	const auto y = RatMatrix::unit(2, 1, 1);
	auto b = lambda_power(alg, y, 1, 4);
	b[0] = alg.one();
	EXPECT_EQ(series_mul(alg, series_unit(alg, 4), b).coefficients(),
	          b.coefficients());
	const auto lx = LambdaSeries<RatMatrix>::monomial(x, 1, alg.zero(), 4);
	const auto ly = LambdaSeries<RatMatrix>::monomial(y, 1, alg.zero(), 4);
	const auto p = series_mul(alg, lx, ly);
	EXPECT_TRUE(p[0].is_zero());
	EXPECT_TRUE(p[1].is_zero());
	EXPECT_EQ(p[2], x * y);
	EXPECT_TRUE(p[3].is_zero());
}

TEST(Series, ProductMatchesSchoolbookConvolution)
{
	auto alg = m2();
	Rng rng(7);
	for (int t = 0; t < 10; ++t)
	{
		auto a = zero_series(alg, 3), b = zero_series(alg, 3);
		for (int k = 0; k <= 3; ++k)
		{
			a[k] = alg.carrier.random(rng);
			b[k] = alg.carrier.random(rng);
		}
		const auto p = series_mul(alg, a, b);
		for (int n = 0; n <= 3; ++n)
		{
			RatMatrix s(2);
			for (int i = 0; i <= n; ++i)
				for (int r = 1; r <= 2; ++r)
					for (int c = 1; c <= 2; ++c)
						for (int m = 1; m <= 2; ++m)
							s(r, c) += a[i](r, m) * b[n - i](m, c);
			EXPECT_EQ(p[n], s);
		}
	}
}

TEST(Series, OrderMismatchIsStructural)
{
	auto alg = m2();
	EXPECT_THROW(series_mul(alg, zero_series(alg, 2), zero_series(alg, 3)),
	             StructuralError);
}

TEST(Series, LogOfUnitIsZeroAndMercator)
{
	auto alg = m2();
	const auto x = RatMatrix::unit(2, 1, 2) + RatMatrix::unit(2, 1, 1);
	EXPECT_EQ(series_log(alg, series_unit(alg, 5)).coefficients(),
	          zero_series(alg, 5).coefficients());
	auto a = series_unit(alg, 5);
	a[1] = x;
	const auto l = series_log(alg, a);
	RatMatrix power = alg.one();
	for (int n = 1; n <= 5; ++n)
	{
		power = power * x;
		const Rational c = Rational(n % 2 == 1 ? 1 : -1) / Rational(n);
		EXPECT_EQ(l[n], c * power) << "n = " << n;
	}
}

TEST(Series, ExpOfMonomialAndGeometricInverse)
{
	auto alg = m2();
	const auto x = RatMatrix::unit(2, 1, 1) + RatMatrix::unit(2, 2, 1);
	const auto e =
	    series_exp(alg, LambdaSeries<RatMatrix>::monomial(x, 1, alg.zero(), 5));
	RatMatrix power = alg.one();
	for (int n = 0; n <= 5; ++n)
	{
		EXPECT_EQ(e[n], (Rational(1) / factorial(n)) * power);
		power = power * x;
	}
	EXPECT_EQ(series_exp(alg, zero_series(alg, 5)).coefficients(),
	          series_unit(alg, 5).coefficients());

	auto a = series_unit(alg, 5);
	a[1] = x;
	const auto inv = series_inverse(alg, a);
	power = alg.one();
	for (int n = 0; n <= 5; ++n)
	{
		EXPECT_EQ(inv[n], Rational(n % 2 == 0 ? 1 : -1) * power);
		power = power * x;
	}
	EXPECT_EQ(series_inverse(alg, series_unit(alg, 3)).coefficients(),
	          series_unit(alg, 3).coefficients());
}

TEST(Series, RandomRoundTrips)
{
	auto alg = make_matrix(3);
	Rng rng(11);
	for (int t = 0; t < 5; ++t)
	{
		auto a = series_unit(alg, 5);
		auto z = zero_series(alg, 5);
		for (int k = 1; k <= 5; ++k)
		{
			a[k] = alg.carrier.random(rng);
			z[k] = alg.carrier.random(rng);
		}
		EXPECT_EQ(series_exp(alg, series_log(alg, a)).coefficients(),
		          a.coefficients());
		EXPECT_EQ(series_log(alg, series_exp(alg, z)).coefficients(),
		          z.coefficients());
		EXPECT_EQ(series_mul(alg, a, series_inverse(alg, a)).coefficients(),
		          series_unit(alg, 5).coefficients());
	}
}

TEST(Series, DomainErrors)
{
	auto alg = m2();
	EXPECT_THROW(series_log(alg, zero_series(alg, 3)), DomainError);
	EXPECT_THROW(series_inverse(alg, zero_series(alg, 3)), DomainError);
	EXPECT_THROW(series_exp(alg, series_unit(alg, 3)), DomainError);
}

// ---- combinatorics ----------------------------------------------------------

TEST(Shuffle, EmptyWordIsUnit)
{
	const Word v{4, 5};
	EXPECT_EQ(shuffle(Word{}, v), std::vector<Word>{v});
	EXPECT_EQ(shuffle(v, Word{}), std::vector<Word>{v});
}

TEST(Shuffle, TwoByOne)
{
	const auto s = shuffle(Word{1, 2}, Word{3});
	const std::multiset<Word> got(s.begin(), s.end());
	const std::multiset<Word> want{Word{1, 2, 3}, Word{1, 3, 2}, Word{3, 1, 2}};
	EXPECT_EQ(got, want);
}

TEST(Shuffle, CountsAndMembershipAgreeWithBruteForce)
{
	for (int n = 0; n <= 4; ++n)
		for (int m = 0; m <= 4; ++m)
		{
			std::vector<int> ul, vl;
			for (int i = 1; i <= n; ++i)
				ul.push_back(i);
			for (int i = 1; i <= m; ++i)
				vl.push_back(10 + i);
			const Word u(ul), v(vl);
			const auto s = shuffle(u, v);
			EXPECT_EQ(Rational(static_cast<std::int64_t>(s.size())),
			          binomial(n + m, n));
			// Brute force: permutations of u*v whose restrictions are u and v.
			auto letters = (u * v).letters();
			std::sort(letters.begin(), letters.end());
			std::set<Word> brute;
			do
			{
				const Word w(letters);
				if (is_shuffle_of(w, u, v))
					brute.insert(w);
			} while (std::next_permutation(letters.begin(), letters.end()));
			EXPECT_EQ(std::set<Word>(s.begin(), s.end()), brute);
		}
}

TEST(QuasiShuffle, SingleLettersAndUnit)
{
	const MonoidAlphabet alpha;
	const auto qs = quasi_shuffle(Word{1}, Word{2}, alpha);
	EXPECT_EQ(qs, WordSum(Word{1, 2}) + WordSum(Word{2, 1}) + WordSum(Word{3}));
	EXPECT_EQ(quasi_shuffle(Word{}, Word{2, 1}, alpha), WordSum(Word{2, 1}));
}

TEST(QuasiShuffle, StuffleOfDepthOneSymbols)
{
	// zeta(p)zeta(q) = zeta(p,q) + zeta(q,p) + zeta(p+q) as words.
	const MonoidAlphabet alpha;
	for (int p = 2; p <= 4; ++p)
		for (int r = 2; r <= 4; ++r)
		{
			auto want = WordSum(Word{p, r}) + WordSum(Word{r, p}) +
			            WordSum(Word{p + r});
			EXPECT_EQ(quasi_shuffle(Word{p}, Word{r}, alpha), want);
		}
}

TEST(QuasiShuffle, WeightZeroIsShuffle)
{
	const MonoidAlphabet alpha;
	const Word u{1, 2}, v{3, 1};
	EXPECT_EQ(weighted_quasi_shuffle(u, v, alpha, Rational(0)),
	          shuffle_sum(u, v));
}

TEST(Cycles, IdentityIsFixedPoints)
{
	const auto c = canonical_cycles(Permutation::identity(3));
	EXPECT_EQ(c.str(), "(1)(2)(3)");
}

TEST(Cycles, WorkedExamples)
{
	const auto s5 = permutation_from_cycles(5, {{4, 3}, {5, 1, 2}});
	const auto c5 = canonical_cycles(s5);
	EXPECT_EQ(c5.cycles, (std::vector<std::vector<int>>{{4, 3}, {5, 1, 2}}));
	EXPECT_EQ(c5.str(), "(43)(512)");

	const auto s8 =
	    permutation_from_cycles(8, {{8, 7}, {6}, {5, 4, 1}, {3, 2}});
	EXPECT_EQ(canonical_cycles(s8).str(), "(32)(541)(6)(87)");
}

TEST(Cycles, RoundTripOverS5)
{
	const auto all = permutations(5);
	ASSERT_EQ(all.size(), 120u);
	for (const auto &p : all)
	{
		const auto c = canonical_cycles(p);
		EXPECT_EQ(permutation_from_cycles(5, c.cycles), p) << p.str();
		int last = 0;
		for (const auto &cycle : c.cycles)
		{
			EXPECT_EQ(cycle.front(), *std::max_element(cycle.begin(), cycle.end()));
			EXPECT_GT(cycle.front(), last);
			last = cycle.front();
		}
	}
}

TEST(Permutations, FactorialCountsAndRange)
{
	EXPECT_EQ(permutations(1).size(), 1u);
	EXPECT_EQ(permutations(3).size(), 6u);
	EXPECT_EQ(permutations(5).size(), 120u);
	EXPECT_THROW(permutations(0), ConfigError);
	EXPECT_THROW(permutations(9), ConfigError);
	EXPECT_THROW(Permutation({1, 1, 2}), PreconditionError);
}

TEST(SetPartitions, BellNumbers)
{
	EXPECT_EQ(set_partitions(1).size(), 1u);
	EXPECT_EQ(set_partitions(1)[0].str(), "{1}");
	// Bell numbers via the Bell triangle.
	std::vector<std::vector<std::int64_t>> tri{{1}};
	for (int n = 1; n < 8; ++n)
	{
		std::vector<std::int64_t> row{tri.back().back()};
		for (auto v : tri.back())
			row.push_back(row.back() + v);
		tri.push_back(row);
	}
	for (int n = 1; n <= 8; ++n)
		EXPECT_EQ(static_cast<std::int64_t>(set_partitions(n).size()),
		          tri[n - 1].back())
		    << "n = " << n;
	EXPECT_EQ(set_partitions(3).size(), 5u);
	EXPECT_THROW(set_partitions(0), ConfigError);
	EXPECT_THROW(set_partitions(9), ConfigError);
}

TEST(SetPartitions, BlocksCoverExactlyOnce)
{
	for (const auto &p : set_partitions(5))
	{
		std::vector<int> seen;
		for (const auto &b : p.blocks)
			seen.insert(seen.end(), b.begin(), b.end());
		std::sort(seen.begin(), seen.end());
		EXPECT_EQ(seen, (std::vector<int>{1, 2, 3, 4, 5})) << p.str();
	}
}

// ---- algebra core and models -----------------------------------------------

TEST(AlgebraCore, DoubleProductOfSymmetricUnitVanishes)
{
	auto alg = m2();
	const auto x = RatMatrix::unit(2, 1, 2) + RatMatrix::unit(2, 2, 1);
	EXPECT_TRUE(double_product(alg, x, x).is_zero());
	EXPECT_TRUE(double_product(alg, alg.zero(), x).is_zero());
}

TEST(AlgebraCore, TildeAndPreLieAtWeightZero)
{
	auto alg = make_integration();
	const auto t = PolyFunction::monomial(2);
	EXPECT_EQ(tilde_operator(alg, t), -alg.R(t));
	EXPECT_EQ(prelie_left(alg, t, PolyFunction::monomial(1)),
	          commutator(alg.R(t), PolyFunction::monomial(1)));
}

TEST(AlgebraCore, PreLieHandValue)
{
	// a = E12+E21, b = E11, theta = -1: R(a) = E12, so
	// a|>b = E12E11 - E11E12 + E11(E12+E21) = E11 + ... computed entrywise.
	auto alg = m2();
	const auto a = RatMatrix::unit(2, 1, 2) + RatMatrix::unit(2, 2, 1);
	const auto b = RatMatrix::unit(2, 1, 1);
	// R(a)b = E12E11 = 0; bR(a) = E11E12 = E12; theta ba = -E11(E12+E21) = -E12.
	EXPECT_EQ(prelie_left(alg, a, b), RatMatrix(2));
	EXPECT_EQ(prelie_right(alg, b, a), RatMatrix(2));
	// a|>a = R(a)a - aR(a) + a^2 = E11 - E22 + I = 2 E11.
	EXPECT_EQ(prelie_left(alg, a, a), Rational(2) * b);
}

TEST(AlgebraCore, BOperator)
{
	auto alg = m2();
	const auto x = RatMatrix::unit(2, 1, 2) + RatMatrix::unit(2, 2, 1);
	EXPECT_EQ(b_operator(alg, x), alg.R(x) - tilde_operator(alg, x));
	EXPECT_TRUE(b_operator(alg, alg.zero()).is_zero());
}

TEST(Models, TriangularProjection)
{
	EXPECT_EQ(triangular_projection(RatMatrix::identity(3)),
	          RatMatrix::identity(3));
	EXPECT_TRUE(triangular_projection(RatMatrix::unit(2, 2, 1)).is_zero());
	EXPECT_EQ(triangular_projection(RatMatrix::unit(2, 1, 2)),
	          RatMatrix::unit(2, 1, 2));
	auto alg = m2();
	EXPECT_EQ(alg.R(RatMatrix::unit(2, 2, 1)) * alg.R(RatMatrix::unit(2, 1, 2)),
	          RatMatrix(2));
}

TEST(Models, RbLawExhaustiveOnBases)
{
	for (int n : {2, 3})
		expect_pass(check_rb_law(make_matrix(n), SamplePlan::exhaustive()));
	expect_pass(check_rb_law(make_summation(10), SamplePlan::exhaustive()));
	expect_pass(check_rb_law(make_laurent(), SamplePlan::exhaustive()));
	expect_pass(check_rb_law(make_integration(), SamplePlan::exhaustive()));
}

TEST(Models, LaurentPoleProjection)
{
	auto alg = make_laurent();
	const auto inv = alg.carrier.monomial(-1, Rational(1));
	const auto x = inv + alg.one() + alg.carrier.monomial(1, Rational(1));
	EXPECT_EQ(alg.R(x), inv);
	EXPECT_TRUE(alg.R(alg.one() + alg.carrier.monomial(2, Rational(3))).is_zero());
	const auto y = inv + alg.one();
	EXPECT_EQ(alg.R(inv) * alg.R(y),
	          alg.R(alg.R(inv) * y + inv * alg.R(y) - inv * y));
}

TEST(Models, IntegrationAndSummation)
{
	auto integ = make_integration();
	EXPECT_EQ(integ.R(integ.one()), PolyFunction::monomial(1));
	const auto r1 = integ.R(integ.one());
	EXPECT_EQ(r1 * r1, integ.R(Rational(2) * r1));

	auto sum = make_summation(5);
	ScalarSeq f(std::vector<Rational>{0, 1, 2, 3, 4});
	EXPECT_EQ(sum.R(f)[3], Rational(3));
	EXPECT_TRUE(sum.R(sum.zero()) == sum.zero());
	expect_pass(check_weight_rescale(sum, Rational(-1), SamplePlan::exhaustive()));
}

TEST(Models, StandardSumOperatorOnGenerator)
{
	auto alg = make_standard_comm(6, 4, 3);
	const auto x = alg.carrier.generator();
	const auto rx = alg.R(x);
	using P = Polynomial<true>;
	EXPECT_TRUE(rx[0] == P(4));
	EXPECT_TRUE(rx[1] == P(4));
	EXPECT_TRUE(rx[3] == P::letter(1, 4) + P::letter(2, 4));
}

TEST(Models, WeightRescaleTrivialFactors)
{
	auto alg = make_matrix(2);
	expect_pass(check_weight_rescale(alg, Rational(1), SamplePlan::exhaustive()));
	expect_pass(check_weight_rescale(alg, Rational(0), SamplePlan::exhaustive()));
}

TEST(Models, IntegrationCapOverflowIsConfigError)
{
	auto alg = make_integration();
	const auto big = PolyFunction::monomial(30);
	EXPECT_THROW(big * big, ConfigError);
}
