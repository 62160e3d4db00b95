#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "algebra/check_result.hpp"
#include "algebra/sampling.hpp"
#include "combinatorics/word.hpp"

namespace rbx {

/// Every word of length 1..max_length over letters 1..alphabet.
inline std::vector<Word> all_words(int alphabet, int max_length)
{
	std::vector<Word> out;
	std::vector<Word> layer{Word{}};
	for (int len = 1; len <= max_length; ++len)
	{
		std::vector<Word> next;
		for (const auto &w : layer)
			for (int a = 1; a <= alphabet; ++a)
			{
				auto l = w.letters();
				l.push_back(a);
				next.emplace_back(std::move(l));
			}
		out.insert(out.end(), next.begin(), next.end());
		layer = std::move(next);
	}
	return out;
}

/// All triples of words of length <= 2, then `plan.trials` seeded triples of
/// length <= 3.
inline std::vector<std::array<Word, 3>> word_triples(int alphabet,
                                                     const SamplePlan &plan)
{
	std::vector<std::array<Word, 3>> out;
	const auto small = all_words(alphabet, 2);
	for (const auto &a : small)
		for (const auto &b : small)
			for (const auto &c : small)
				out.push_back({a, b, c});
	if (plan.mode == SamplePlan::Mode::random)
	{
		Rng rng(plan.seed);
		const auto pool = all_words(alphabet, 3);
		for (int t = 0; t < plan.trials; ++t)
		{
			std::array<Word, 3> triple;
			for (auto &w : triple)
				w = pool[draw(rng, 0, static_cast<int>(pool.size()) - 1)];
			out.push_back(triple);
		}
	}
	return out;
}

/// Half-product relations in the word model with merge weight w
/// (0: shuffle, 1: quasi-shuffle):
///   xvy = y^x,  (x^y)^z = x^(y^z + z^y + w y.z),
/// plus x*y = x^y + xvy + w x.y, commutativity and associativity of *.
inline CheckResult check_word_half_products(int alphabet,
                                            const Rational &merge_weight,
                                            const SamplePlan &plan)
{
	const HalfProducts hp{MonoidAlphabet{alphabet}, merge_weight};
	const bool shuffle = merge_weight.is_zero();
	const std::string name =
	    shuffle ? "word-shuffle-relations" : "word-quasi-shuffle-relations";
	const std::string anchor =
	    shuffle ? "shuffle half-products" : "quasi-shuffle half-products";
	const std::string model = shuffle ? "words(shuffle)" : "words(quasi-shuffle)";
	const std::string params = "alphabet=" + std::to_string(alphabet) + ", " +
	                           plan.str();
	auto check = [&](const char *what, const WordSum &l,
	                 const WordSum &r) -> std::optional<std::string> {
		if (l == r)
			return std::nullopt;
		return std::string(what) + ": lhs = " + l.str() + ", rhs = " + r.str();
	};
	int cases = 0;
	for (const auto &[u, v, w] : word_triples(alphabet, plan))
	{
		++cases;
		const WordSum x(u), y(v), z(w);
		auto failure = check("xvy = y^x", hp.down(x, y), hp.up(y, x));
		if (!failure)
			failure = check("(x^y)^z = x^(y^z + z^y + w y.z)", hp.up(hp.up(x, y), z),
			                hp.up(x, hp.up(y, z) + hp.up(z, y) +
			                             merge_weight * hp.dot(y, z)));
		if (!failure)
			failure = check("x*y = x^y + xvy + w x.y", hp.product(x, y),
			                hp.up(x, y) + hp.down(x, y) +
			                    merge_weight * hp.dot(x, y));
		if (!failure)
			failure = check("x*y = y*x", hp.product(x, y), hp.product(y, x));
		if (!failure)
			failure = check("(x*y)*z = x*(y*z)", hp.product(hp.product(x, y), z),
			                hp.product(x, hp.product(y, z)));
		if (failure)
			return CheckResult::fail(name, anchor, model, params, cases,
			                         "x = " + u.str() + ", y = " + v.str() +
			                             ", z = " + w.str() + "; " + *failure);
	}
	return CheckResult::pass(name, anchor, model, params, cases);
}

/// a * b = ab + ba + (a+b) for single letters, and
/// x * yz = xyz + yxz + yzx + (x+y)z + y(x+z), the word form of
/// R(x)R(yR(z)).
inline CheckResult check_quasi_shuffle_letters(int alphabet)
{
	const MonoidAlphabet alpha{alphabet};
	const std::string params = "alphabet=" + std::to_string(alphabet);
	int cases = 0;
	for (int a = 1; a <= alphabet; ++a)
		for (int b = 1; b <= alphabet; ++b)
			for (int c = 1; c <= alphabet; ++c)
			{
				++cases;
				auto two = quasi_shuffle(Word{a}, Word{b}, alpha);
				WordSum two_expected = WordSum(Word{a, b}) + WordSum(Word{b, a}) +
				                       WordSum(Word{a + b});
				auto three = quasi_shuffle(Word{a}, Word{b, c}, alpha);
				WordSum three_expected =
				    WordSum(Word{a, b, c}) + WordSum(Word{b, a, c}) +
				    WordSum(Word{b, c, a}) + WordSum(Word{a + b, c}) +
				    WordSum(Word{b, a + c});
				std::optional<std::string> failure;
				if (!(two == two_expected))
					failure = "x" + std::to_string(a) + " * x" + std::to_string(b) +
					          " = " + two.str() + ", expected " +
					          two_expected.str();
				else if (!(three == three_expected))
					failure = "x" + std::to_string(a) + " * x" + std::to_string(b) +
					          "x" + std::to_string(c) + " = " + three.str() +
					          ", expected " + three_expected.str();
				if (failure)
					return CheckResult::fail("quasi-shuffle-letters",
					                         "quasi-shuffle of short words",
					                         "words(quasi-shuffle)", params, cases,
					                         *failure);
			}
	return CheckResult::pass("quasi-shuffle-letters",
	                         "quasi-shuffle of short words", "words(quasi-shuffle)",
	                         params, cases);
}

} // namespace rbx
