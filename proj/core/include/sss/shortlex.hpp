#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>

#include "sss/word.hpp"

namespace sss {

using BigInt = boost::multiprecision::cpp_int;

namespace shortlex {

// Shorter words first; equal lengths letterwise in the global letter
// order at the first difference.
std::strong_ordering compare(const Word& u, const Word& v);

// 1 for L = 0, else 2n(2n-1)^(L-1).
BigInt count_words_of_length(int n, int L);

// Number of reduced words of length <= L.
BigInt count_words_up_to(int n, int L);

// 0-based shortlex position; the empty word has rank 0.
BigInt rank(const Word& w);

// Inverse of rank; every non-negative integer names a word.
Word unrank(const BigInt& index, int n);

struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    return compare(a, b) == std::strong_ordering::less;
  }
};

}  // namespace shortlex
}  // namespace sss
