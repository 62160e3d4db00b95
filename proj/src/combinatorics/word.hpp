#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "exact/rational.hpp"

namespace rbx {

/// Finite sequence of positive alphabet indices. The empty word is the
/// monomial unit.
class Word
{
  public:
	Word() = default;
	Word(std::initializer_list<int> letters) : letters_(letters) {}
	explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {}

	std::size_t size() const { return letters_.size(); }
	bool empty() const { return letters_.empty(); }
	int operator[](std::size_t i) const { return letters_[i]; }
	const std::vector<int> &letters() const { return letters_; }

	int front() const { return letters_.front(); }
	/// Word without its first letter.
	Word tail() const { return Word({letters_.begin() + 1, letters_.end()}); }
	Word prepended(int letter) const;

	friend Word operator*(const Word &a, const Word &b);
	friend auto operator<=>(const Word &, const Word &) = default;
	friend bool operator==(const Word &, const Word &) = default;

	/// "x1x4x2"; the empty word renders as "1".
	std::string str() const;

  private:
	std::vector<int> letters_;
};

/// Finite formal sum of words with rational coefficients; zero coefficients
/// are never stored.
class WordSum
{
  public:
	using Terms = std::map<Word, Rational>;

	WordSum() = default;
	WordSum(const Word &w, Rational c = Rational(1));

	const Terms &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	Rational coefficient(const Word &w) const;
	void add_term(const Word &w, const Rational &c);

	WordSum &operator+=(const WordSum &o);
	WordSum &operator-=(const WordSum &o);
	friend WordSum operator+(WordSum a, const WordSum &b) { return a += b; }
	friend WordSum operator-(WordSum a, const WordSum &b) { return a -= b; }
	friend WordSum operator*(const Rational &q, const WordSum &a);
	friend bool operator==(const WordSum &, const WordSum &) = default;

	/// Prefixes every word with `letter`.
	WordSum prepended(int letter) const;

	std::string str() const;

  private:
	Terms terms_;
};

/// Letters labelled by positive integers, combined by addition.
struct MonoidAlphabet
{
	int generators = 3;

	int combine(int a, int b) const { return a + b; }
	bool contains(int letter) const { return letter >= 1; }
};

/// All interleavings of u and v preserving each word's internal order, as a
/// multiset in lexicographic order. Has C(|u|+|v|, |u|) entries.
std::vector<Word> shuffle(const Word &u, const Word &v);

/// Membership test for a single interleaving.
bool is_shuffle_of(const Word &w, const Word &u, const Word &v);

/// Shuffle as a formal sum (coefficients count multiplicities).
WordSum shuffle_sum(const Word &u, const Word &v);
WordSum shuffle_product(const WordSum &a, const WordSum &b);

/// Hoffman's quasi-shuffle:
/// (au)*(bv) = a(u*bv) + b(au*v) + (a+b)(u*v).
WordSum quasi_shuffle(const Word &u, const Word &v,
                      const MonoidAlphabet &alpha);
WordSum quasi_shuffle_product(const WordSum &a, const WordSum &b,
                              const MonoidAlphabet &alpha);

/// Quasi-shuffle with the merge term scaled by `merge_weight`; weight 0 is the
/// plain shuffle.
WordSum weighted_quasi_shuffle(const Word &u, const Word &v,
                               const MonoidAlphabet &alpha,
                               const Rational &merge_weight);

/// Half products on words. For u = a u':
///   up(u, v)   = a (u' * v)        (x R(y) under the iterated-sum encoding)
///   down(u, v) = up(v, u)
///   dot(u, v)  = (a+b)(u' * v')    (merge of first letters)
/// where * is the shuffle (merge_weight 0) or the quasi-shuffle (weight 1).
/// Extended bilinearly; empty words contribute zero.
struct HalfProducts
{
	MonoidAlphabet alpha;
	Rational merge_weight{1};

	WordSum product(const WordSum &a, const WordSum &b) const;
	WordSum up(const WordSum &a, const WordSum &b) const;
	WordSum down(const WordSum &a, const WordSum &b) const;
	WordSum dot(const WordSum &a, const WordSum &b) const;
};

} // namespace rbx
