#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sss/errors.hpp"
#include "sss/rng.hpp"

namespace sss {

// A signed generator letter: x_i (sign +1) or x_i^{-1} (sign -1).
struct Letter {
  std::int32_t gen = 0;
  std::int32_t sign = 1;

  Letter inverse() const { return {gen, -sign}; }

  // Position in the fixed global letter order
  // x_0 < x_0^{-1} < x_1 < x_1^{-1} < ...
  int order_pos() const { return 2 * gen + (sign < 0 ? 1 : 0); }
  static Letter from_order_pos(int pos) {
    return {pos / 2, (pos % 2) ? -1 : 1};
  }

  bool operator==(const Letter&) const = default;
};

inline bool are_inverse(Letter a, Letter b) {
  return a.gen == b.gen && a.sign == -b.sign;
}

// Letter sequence with no reduction requirement; input to free_reduce.
struct RawWord {
  std::vector<Letter> letters;
  int alphabet_size = 1;
};

// A freely reduced word over n generators. Immutable value type; the
// constructor rejects unreduced or out-of-range input.
class Word {
 public:
  Word() = default;
  explicit Word(int n) : n_(n) {}
  Word(std::vector<Letter> letters, int n);

  const std::vector<Letter>& letters() const { return letters_; }
  int alphabet_size() const { return n_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  bool operator==(const Word&) const = default;

  // Token format: `g<i>` for x_i, `G<i>` for x_i^{-1}; the empty word is
  // the literal token `e`.
  std::string str() const;
  static Word parse(const std::string& text, int n);

 private:
  friend Word free_reduce(const RawWord& w);
  struct unchecked_t {};
  Word(unchecked_t, std::vector<Letter> letters, int n)
      : letters_(std::move(letters)), n_(n) {}

  std::vector<Letter> letters_;
  int n_ = 1;
};

Word free_reduce(const RawWord& w);
Word invert(const Word& w);
Word concat(const Word& u, const Word& v);

bool is_cyclically_reduced(const Word& w);

// Peels mutually inverse first/last letters. Returns (core, conjugator)
// with w = conjugator * core * conjugator^{-1}.
std::pair<Word, Word> cyclically_reduce(const Word& w);

// w must be cyclically reduced. Distinct rotations, first-occurrence order.
std::vector<Word> cyclic_permutations(const Word& w);

Word rotate(const Word& w, std::size_t offset);

// Uniformly random freely reduced word of exactly the given length.
Word random_reduced_word(int n, int length, Rng& rng);

}  // namespace sss
