#pragma once

// Independent brute-force oracles. These deliberately avoid the library's
// rank/unrank, piece, and reduction code paths; they recompute everything
// from definitions.

#include <algorithm>
#include <vector>

#include "sss/presentation.hpp"
#include "sss/shamir.hpp"
#include "sss/word.hpp"

namespace oracle {

// All freely reduced words of exactly length L, generated in letter order
// (so concatenating lengths 0,1,2,... yields the shortlex listing).
inline void enumerate_reduced_words_rec(int n, int L,
                                        std::vector<sss::Letter>& prefix,
                                        std::vector<sss::Word>& out) {
  if (static_cast<int>(prefix.size()) == L) {
    out.emplace_back(prefix, n);
    return;
  }
  for (int pos = 0; pos < 2 * n; ++pos) {
    sss::Letter l = sss::Letter::from_order_pos(pos);
    if (!prefix.empty() && sss::are_inverse(prefix.back(), l)) continue;
    prefix.push_back(l);
    enumerate_reduced_words_rec(n, L, prefix, out);
    prefix.pop_back();
  }
}

inline std::vector<sss::Word> enumerate_reduced_words(int n, int L) {
  std::vector<sss::Word> out;
  std::vector<sss::Letter> prefix;
  enumerate_reduced_words_rec(n, L, prefix, out);
  return out;
}

// Shortlex listing of the first `count` words.
inline std::vector<sss::Word> shortlex_listing(int n, std::size_t count) {
  std::vector<sss::Word> out;
  for (int L = 0; out.size() < count; ++L) {
    auto level = enumerate_reduced_words(n, L);
    for (auto& w : level) {
      out.push_back(std::move(w));
      if (out.size() == count) break;
    }
  }
  return out;
}

// Closure of a relator set under rotation and inversion, by direct
// enumeration and deduplication.
inline std::vector<sss::Word> closure_by_enumeration(
    const std::vector<sss::Word>& relators) {
  std::vector<sss::Word> out;
  for (const sss::Word& r : relators) {
    for (const sss::Word& base : {r, sss::invert(r)}) {
      for (std::size_t i = 0; i < base.size(); ++i) {
        sss::Word rot = sss::rotate(base, i);
        if (std::find(out.begin(), out.end(), rot) == out.end())
          out.push_back(std::move(rot));
      }
    }
  }
  return out;
}

// Longest common prefix over all pairs, the definitional piece scan.
inline int max_piece_by_scan(const std::vector<sss::Word>& closure,
                             const sss::Word& r) {
  int best = 0;
  for (const sss::Word& other : closure) {
    if (other == r) continue;
    int m = 0;
    while (m < static_cast<int>(std::min(r.size(), other.size())) &&
           r[m] == other[m])
      ++m;
    best = std::max(best, m);
  }
  return best;
}

inline bool metric_condition_by_scan(const std::vector<sss::Word>& closure,
                                     int lambda_num, int lambda_den) {
  for (const sss::Word& r : closure)
    if (static_cast<long long>(lambda_den) * max_piece_by_scan(closure, r) >=
        static_cast<long long>(lambda_num) * static_cast<long long>(r.size()))
      return false;
  return true;
}

// True iff some subword of w is strictly more than half of a closure
// element; checked by sliding every closure element across every position.
inline bool has_over_half_subword(const sss::Word& w,
                                  const std::vector<sss::Word>& closure) {
  for (const sss::Word& r : closure) {
    for (std::size_t start = 0; start < w.size(); ++start) {
      std::size_t m = 0;
      while (start + m < w.size() && m < r.size() && w[start + m] == r[m]) ++m;
      if (2 * m > r.size()) return true;
    }
  }
  return false;
}

// Fermat inverse; independent of the library's extended Euclid.
inline sss::shamir::BigInt fermat_inverse(const sss::shamir::BigInt& a,
                                          const sss::shamir::BigInt& p) {
  sss::shamir::BigInt result = 1, base = a % p, e = p - 2;
  while (e > 0) {
    if (boost::multiprecision::bit_test(e, 0)) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

// Solves the k x k Vandermonde system for the polynomial coefficients by
// Gaussian elimination mod p and returns the constant term.
inline sss::shamir::BigInt vandermonde_secret(
    const std::vector<sss::shamir::SharePoint>& pts, int k,
    const sss::shamir::BigInt& p) {
  using sss::shamir::BigInt;
  std::vector<std::vector<BigInt>> m(k, std::vector<BigInt>(k + 1));
  for (int i = 0; i < k; ++i) {
    BigInt pw = 1;
    for (int j = 0; j < k; ++j) {
      m[i][j] = pw;
      pw = pw * pts[i].x % p;
    }
    m[i][k] = pts[i].y % p;
  }
  for (int col = 0; col < k; ++col) {
    int pivot = col;
    while (pivot < k && m[pivot][col] == 0) ++pivot;
    std::swap(m[col], m[pivot]);
    BigInt inv = fermat_inverse(m[col][col], p);
    for (int j = col; j <= k; ++j) m[col][j] = m[col][j] * inv % p;
    for (int row = 0; row < k; ++row) {
      if (row == col || m[row][col] == 0) continue;
      BigInt f = m[row][col];
      for (int j = col; j <= k; ++j)
        m[row][j] = ((m[row][j] - f * m[col][j]) % p + p) % p;
    }
  }
  return m[0][k];  // coefficient of x^0
}

}  // namespace oracle
