#include "combinatorics/word.hpp"

#include <algorithm>

#include "exact/errors.hpp"

namespace rbx {

Word Word::prepended(int letter) const
{
	std::vector<int> l;
	l.reserve(letters_.size() + 1);
	l.push_back(letter);
	l.insert(l.end(), letters_.begin(), letters_.end());
	return Word(std::move(l));
}

Word operator*(const Word &a, const Word &b)
{
	std::vector<int> l(a.letters_);
	l.insert(l.end(), b.letters_.begin(), b.letters_.end());
	return Word(std::move(l));
}

std::string Word::str() const
{
	if (letters_.empty())
		return "1";
	std::string s;
	for (int l : letters_)
		s += "x" + std::to_string(l);
	return s;
}

WordSum::WordSum(const Word &w, Rational c)
{
	add_term(w, c);
}

Rational WordSum::coefficient(const Word &w) const
{
	auto it = terms_.find(w);
	return it == terms_.end() ? Rational(0) : it->second;
}

void WordSum::add_term(const Word &w, const Rational &c)
{
	if (c.is_zero())
		return;
	auto [it, inserted] = terms_.try_emplace(w, c);
	if (!inserted)
	{
		it->second += c;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

WordSum &WordSum::operator+=(const WordSum &o)
{
	for (const auto &[w, c] : o.terms_)
		add_term(w, c);
	return *this;
}

WordSum &WordSum::operator-=(const WordSum &o)
{
	for (const auto &[w, c] : o.terms_)
		add_term(w, -c);
	return *this;
}

WordSum operator*(const Rational &q, const WordSum &a)
{
	WordSum r;
	if (q.is_zero())
		return r;
	for (const auto &[w, c] : a.terms_)
		r.terms_.emplace(w, q * c);
	return r;
}

WordSum WordSum::prepended(int letter) const
{
	WordSum r;
	for (const auto &[w, c] : terms_)
		r.terms_.emplace(w.prepended(letter), c);
	return r;
}

std::string WordSum::str() const
{
	if (terms_.empty())
		return "0";
	std::string s;
	bool first = true;
	for (const auto &[w, c] : terms_)
	{
		Rational mag = c.sign() < 0 ? -c : c;
		if (first)
			s += c.sign() < 0 ? "-" : "";
		else
			s += c.sign() < 0 ? " - " : " + ";
		if (mag == Rational(1))
			s += w.str();
		else
			s += mag.str() + (w.empty() ? "" : "*" + w.str());
		first = false;
	}
	return s;
}

namespace {

void shuffle_into(const Word &u, std::size_t i, const Word &v, std::size_t j,
                  std::vector<int> &prefix, std::vector<Word> &out)
{
	if (i == u.size() && j == v.size())
	{
		out.emplace_back(prefix);
		return;
	}
	if (i < u.size())
	{
		prefix.push_back(u[i]);
		shuffle_into(u, i + 1, v, j, prefix, out);
		prefix.pop_back();
	}
	if (j < v.size())
	{
		prefix.push_back(v[j]);
		shuffle_into(u, i, v, j + 1, prefix, out);
		prefix.pop_back();
	}
}

} // namespace

std::vector<Word> shuffle(const Word &u, const Word &v)
{
	std::vector<Word> out;
	std::vector<int> prefix;
	shuffle_into(u, 0, v, 0, prefix, out);
	std::sort(out.begin(), out.end());
	return out;
}

bool is_shuffle_of(const Word &w, const Word &u, const Word &v)
{
	if (w.size() != u.size() + v.size())
		return false;
	// reachable[j]: prefix of w of length i+j is an interleaving of u[0,i), v[0,j)
	std::vector<char> reachable(v.size() + 1, 0);
	for (std::size_t i = 0; i <= u.size(); ++i)
		for (std::size_t j = 0; j <= v.size(); ++j)
		{
			if (i == 0 && j == 0)
			{
				reachable[0] = 1;
				continue;
			}
			bool from_u = i > 0 && reachable[j] && u[i - 1] == w[i + j - 1];
			bool from_v = j > 0 && reachable[j - 1] && v[j - 1] == w[i + j - 1];
			reachable[j] = from_u || from_v;
		}
	return reachable[v.size()];
}

WordSum shuffle_sum(const Word &u, const Word &v)
{
	WordSum s;
	for (const auto &w : shuffle(u, v))
		s.add_term(w, Rational(1));
	return s;
}

WordSum weighted_quasi_shuffle(const Word &u, const Word &v,
                               const MonoidAlphabet &alpha,
                               const Rational &merge_weight)
{
	for (const Word *w : {&u, &v})
		for (int l : w->letters())
			if (!alpha.contains(l))
				throw PreconditionError("letter outside the monoid alphabet");
	// table[i][j] = product of the suffixes u[i..] and v[j..], filled from the
	// back with (au)*(bv) = a(u*bv) + b(au*v) + w (a+b)(u*v).
	const std::size_t n = u.size(), m = v.size();
	std::vector<std::vector<WordSum>> table(n + 1, std::vector<WordSum>(m + 1));
	const auto suffix = [](const Word &w, std::size_t i) {
		return Word(std::vector<int>(w.letters().begin() + i, w.letters().end()));
	};
	for (std::size_t i = n + 1; i-- > 0;)
		for (std::size_t j = m + 1; j-- > 0;)
		{
			if (i == n)
				table[i][j] = WordSum(suffix(v, j));
			else if (j == m)
				table[i][j] = WordSum(suffix(u, i));
			else
			{
				WordSum r = table[i + 1][j].prepended(u[i]);
				r += table[i][j + 1].prepended(v[j]);
				if (!merge_weight.is_zero())
					r += merge_weight * table[i + 1][j + 1].prepended(
					                        alpha.combine(u[i], v[j]));
				table[i][j] = std::move(r);
			}
		}
	return table[0][0];
}

WordSum quasi_shuffle(const Word &u, const Word &v, const MonoidAlphabet &alpha)
{
	return weighted_quasi_shuffle(u, v, alpha, Rational(1));
}

namespace {

template <class F>
WordSum bilinear(const WordSum &a, const WordSum &b, F &&f)
{
	WordSum r;
	for (const auto &[u, cu] : a.terms())
		for (const auto &[v, cv] : b.terms())
			r += (cu * cv) * f(u, v);
	return r;
}

} // namespace

WordSum shuffle_product(const WordSum &a, const WordSum &b)
{
	return bilinear(a, b, [](const Word &u, const Word &v) {
		return shuffle_sum(u, v);
	});
}

WordSum quasi_shuffle_product(const WordSum &a, const WordSum &b,
                              const MonoidAlphabet &alpha)
{
	return bilinear(a, b, [&](const Word &u, const Word &v) {
		return quasi_shuffle(u, v, alpha);
	});
}

WordSum HalfProducts::product(const WordSum &a, const WordSum &b) const
{
	return bilinear(a, b, [&](const Word &u, const Word &v) {
		return weighted_quasi_shuffle(u, v, alpha, merge_weight);
	});
}

WordSum HalfProducts::up(const WordSum &a, const WordSum &b) const
{
	return bilinear(a, b, [&](const Word &u, const Word &v) {
		if (u.empty() || v.empty())
			return WordSum();
		return weighted_quasi_shuffle(u.tail(), v, alpha, merge_weight)
		    .prepended(u.front());
	});
}

WordSum HalfProducts::down(const WordSum &a, const WordSum &b) const
{
	return up(b, a);
}

WordSum HalfProducts::dot(const WordSum &a, const WordSum &b) const
{
	return bilinear(a, b, [&](const Word &u, const Word &v) {
		if (u.empty() || v.empty())
			return WordSum();
		return weighted_quasi_shuffle(u.tail(), v.tail(), alpha, merge_weight)
		    .prepended(alpha.combine(u.front(), v.front()));
	});
}

} // namespace rbx
