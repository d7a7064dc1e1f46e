#include "sss/shamir.hpp"

#include <boost/multiprecision/miller_rabin.hpp>
#include <set>

namespace sss::shamir {

namespace {

BigInt positive_mod(BigInt v, const BigInt& p) {
  v %= p;
  if (v < 0) v += p;
  return v;
}

}  // namespace

FieldParams::FieldParams(BigInt p) : p_(std::move(p)) {
  if (p_ < 2 || (p_ > 2 && !boost::multiprecision::miller_rabin_test(p_, 25)))
    throw PreconditionError("field modulus must be prime");
  bit_width_ = static_cast<int>(boost::multiprecision::msb(p_)) + 1;
}

Polynomial::Polynomial(std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw PreconditionError("polynomial needs a constant term");
  if (coeffs_.size() > 1 && coeffs_.back() == 0)
    throw PreconditionError("leading coefficient must be nonzero");
}

std::string BitVector::str() const {
  std::string out;
  out.reserve(bits.size());
  for (std::uint8_t b : bits) out.push_back(b ? '1' : '0');
  return out;
}

BitVector BitVector::parse(const std::string& text) {
  BitVector out;
  out.bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1')
      throw MalformedInput("bit vectors contain only 0 and 1");
    out.bits.push_back(c == '1' ? 1 : 0);
  }
  return out;
}

BigInt random_mod(const BigInt& bound, Rng& rng) {
  if (bound <= 0) throw PreconditionError("bound must be positive");
  const int bits = static_cast<int>(boost::multiprecision::msb(bound)) + 1;
  const int words = (bits + 63) / 64;
  for (;;) {
    BigInt v = 0;
    for (int i = 0; i < words; ++i) {
      v <<= 64;
      v += rng.next();
    }
    v >>= words * 64 - bits;
    if (v < bound) return v;
  }
}

Polynomial random_polynomial(const BigInt& secret, int k,
                             const FieldParams& fp, Rng& rng) {
  if (k < 1 || BigInt(k) > fp.p() - 1)
    throw PreconditionError("threshold out of range for field");
  if (secret < 0 || secret >= fp.p())
    throw PreconditionError("secret must be a field element");
  std::vector<BigInt> coeffs{secret};
  for (int i = 1; i < k - 1; ++i) coeffs.push_back(random_mod(fp.p(), rng));
  if (k > 1) coeffs.push_back(1 + random_mod(fp.p() - 1, rng));
  return Polynomial(std::move(coeffs));
}

BigInt evaluate(const Polynomial& f, const BigInt& x, const FieldParams& fp) {
  BigInt acc = 0;
  for (auto it = f.coefficients().rbegin(); it != f.coefficients().rend(); ++it)
    acc = positive_mod(acc * x + *it, fp.p());
  return acc;
}

BigInt mod_inverse(const BigInt& a, const BigInt& p) {
  // extended Euclid
  BigInt r0 = p, r1 = positive_mod(a, p);
  BigInt t0 = 0, t1 = 1;
  while (r1 != 0) {
    BigInt q = r0 / r1;
    BigInt r2 = r0 - q * r1;
    BigInt t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (r0 != 1) throw PreconditionError("element is not invertible");
  return positive_mod(t0, p);
}

BigInt interpolate_secret(const std::vector<SharePoint>& points, int k,
                          const FieldParams& fp) {
  if (static_cast<int>(points.size()) < k)
    throw AccessDenied("fewer than k share points");
  std::set<BigInt> xs;
  for (const SharePoint& pt : points)
    if (!xs.insert(pt.x).second)
      throw PreconditionError("duplicate x coordinate among share points");

  BigInt secret = 0;
  for (int i = 0; i < k; ++i) {
    BigInt num = 1, den = 1;
    for (int j = 0; j < k; ++j) {
      if (j == i) continue;
      num = positive_mod(num * points[j].x, fp.p());
      den = positive_mod(den * (points[j].x - points[i].x), fp.p());
    }
    BigInt li = positive_mod(num * mod_inverse(den, fp.p()), fp.p());
    secret = positive_mod(secret + points[i].y * li, fp.p());
  }
  return secret;
}

BitVector field_to_bits(const BigInt& y, const FieldParams& fp) {
  if (y < 0 || y >= fp.p())
    throw PreconditionError("value out of field range");
  BitVector out;
  out.bits.assign(fp.bit_width(), 0);
  for (int i = 0; i < fp.bit_width(); ++i)
    out.bits[fp.bit_width() - 1 - i] =
        static_cast<std::uint8_t>(boost::multiprecision::bit_test(y, i));
  return out;
}

BigInt bits_to_field(const BitVector& b, const FieldParams& fp) {
  if (static_cast<int>(b.bits.size()) != fp.bit_width())
    throw MalformedInput("bit vector width does not match field");
  BigInt v = 0;
  for (std::uint8_t bit : b.bits) {
    v <<= 1;
    v += bit;
  }
  if (v >= fp.p()) throw MalformedInput("bits encode a value outside the field");
  return v;
}

std::vector<BitVector> split_xor(const BitVector& secret, int n, Rng& rng) {
  if (n < 2) throw PreconditionError("XOR split needs at least 2 shares");
  std::vector<BitVector> shares(n);
  BitVector last = secret;
  for (int i = 0; i < n - 1; ++i) {
    shares[i].bits.resize(secret.bits.size());
    for (std::size_t j = 0; j < secret.bits.size(); ++j) {
      shares[i].bits[j] = static_cast<std::uint8_t>(rng.below(2));
      last.bits[j] ^= shares[i].bits[j];
    }
  }
  shares[n - 1] = std::move(last);
  return shares;
}

BitVector xor_combine(const std::vector<BitVector>& shares) {
  if (shares.empty()) throw PreconditionError("no shares to combine");
  BitVector out = shares[0];
  for (std::size_t i = 1; i < shares.size(); ++i) {
    if (shares[i].bits.size() != out.bits.size())
      throw MalformedInput("share lengths differ");
    for (std::size_t j = 0; j < out.bits.size(); ++j)
      out.bits[j] ^= shares[i].bits[j];
  }
  return out;
}

const BigInt& default_share_prime() {
  // Largest prime below 1 + sum_{L=1..10} 80 * 79^(L-1).
  static const BigInt p("9711052392437791979");
  return p;
}

}  // namespace sss::shamir
