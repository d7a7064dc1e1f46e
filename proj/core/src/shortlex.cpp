#include "sss/shortlex.hpp"

namespace sss::shortlex {

std::strong_ordering compare(const Word& u, const Word& v) {
  if (u.alphabet_size() != v.alphabet_size())
    throw AlphabetMismatch("shortlex comparison over different alphabets");
  if (u.size() != v.size())
    return u.size() < v.size() ? std::strong_ordering::less
                               : std::strong_ordering::greater;
  for (std::size_t i = 0; i < u.size(); ++i) {
    int a = u[i].order_pos(), b = v[i].order_pos();
    if (a != b)
      return a < b ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

BigInt count_words_of_length(int n, int L) {
  if (L < 0) throw PreconditionError("length must be non-negative");
  if (L == 0) return 1;
  BigInt c = 2 * n;
  for (int i = 1; i < L; ++i) c *= 2 * n - 1;
  return c;
}

BigInt count_words_up_to(int n, int L) {
  BigInt total = 1;
  BigInt level = 2 * n;
  for (int i = 1; i <= L; ++i) {
    total += level;
    level *= 2 * n - 1;
  }
  return total;
}

BigInt rank(const Word& w) {
  const int n = w.alphabet_size();
  const int L = static_cast<int>(w.size());
  if (L == 0) return 0;
  BigInt pow = 1;
  for (int i = 1; i < L; ++i) pow *= 2 * n - 1;

  BigInt offset = w[0].order_pos() * pow;
  for (int j = 1; j < L; ++j) {
    pow /= 2 * n - 1;
    int d = w[j].order_pos();
    // position among the 2n-1 letters excluding the predecessor's inverse
    if (d > w[j - 1].inverse().order_pos()) --d;
    offset += d * pow;
  }
  return count_words_up_to(n, L - 1) + offset;
}

Word unrank(const BigInt& index, int n) {
  if (index < 0) throw PreconditionError("rank index must be non-negative");
  if (n < 1) throw PreconditionError("alphabet must have at least one generator");
  if (index == 0) return Word(n);

  // Find the length block containing the index.
  int L = 0;
  BigInt below = 1;  // count of words of length < L+1 so far
  BigInt level = 2 * n;
  while (index >= below + level) {
    below += level;
    level *= 2 * n - 1;
    ++L;
  }
  ++L;

  BigInt rem = index - below;
  BigInt pow = 1;
  for (int i = 1; i < L; ++i) pow *= 2 * n - 1;

  std::vector<Letter> letters;
  letters.reserve(L);
  letters.push_back(
      Letter::from_order_pos(static_cast<int>(rem / pow)));
  rem %= pow;
  for (int j = 1; j < L; ++j) {
    pow /= 2 * n - 1;
    int d = static_cast<int>(rem / pow);
    rem %= pow;
    if (d >= letters.back().inverse().order_pos()) ++d;
    letters.push_back(Letter::from_order_pos(d));
  }
  return Word(std::move(letters), n);
}

}  // namespace sss::shortlex
