#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "sss/errors.hpp"
#include "sss/rng.hpp"

namespace sss::shamir {

using BigInt = boost::multiprecision::cpp_int;

// Prime modulus. Primality is checked probabilistically at construction.
class FieldParams {
 public:
  explicit FieldParams(BigInt p);
  const BigInt& p() const { return p_; }
  // l = floor(log2 p) + 1, the bit width of binary share encodings.
  int bit_width() const { return bit_width_; }
  bool operator==(const FieldParams& o) const { return p_ == o.p_; }

 private:
  BigInt p_;
  int bit_width_;
};

// Degree k-1 polynomial over Z_p with constant term equal to the secret.
class Polynomial {
 public:
  explicit Polynomial(std::vector<BigInt> coeffs);  // a_0, a_1, ..., a_{k-1}
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  int threshold() const { return static_cast<int>(coeffs_.size()); }

 private:
  std::vector<BigInt> coeffs_;
};

struct SharePoint {
  BigInt x;  // public, nonzero
  BigInt y;  // private, f(x)
};

struct BitVector {
  std::vector<std::uint8_t> bits;  // most significant first

  std::string str() const;
  static BitVector parse(const std::string& text);
  bool operator==(const BitVector&) const = default;
};

Polynomial random_polynomial(const BigInt& secret, int k,
                             const FieldParams& fp, Rng& rng);
BigInt evaluate(const Polynomial& f, const BigInt& x, const FieldParams& fp);

// Lagrange evaluation at x = 0 using the first k points.
BigInt interpolate_secret(const std::vector<SharePoint>& points, int k,
                          const FieldParams& fp);

BitVector field_to_bits(const BigInt& y, const FieldParams& fp);
BigInt bits_to_field(const BitVector& b, const FieldParams& fp);

// n-way XOR split: the first n-1 shares are uniform, the last is the
// XOR of the secret with all of them.
std::vector<BitVector> split_xor(const BitVector& secret, int n, Rng& rng);
BitVector xor_combine(const std::vector<BitVector>& shares);

BigInt mod_inverse(const BigInt& a, const BigInt& p);
BigInt random_mod(const BigInt& bound, Rng& rng);

// Largest prime below the number of reduced words of length <= 10 over
// 40 generators; the protocol constant for the shortlex scheme.
const BigInt& default_share_prime();

}  // namespace sss::shamir
