#pragma once

#include <vector>

#include "sss/dehn.hpp"
#include "sss/presentation.hpp"
#include "sss/rng.hpp"
#include "sss/word.hpp"

namespace sss::camo {

struct PadParams {
  // Conjugator lengths are geometric with this mean, capped.
  double conjugator_mean = 3.0;
  int conjugator_cap = 8;
  // Accepted |w| window around target_length.
  double length_tolerance = 0.15;
  int max_retries = 32;
};

// Conceals s by inserting conjugated closure elements g r g^{-1} at
// uniformly chosen gaps, then verifies that dehn_reduce recovers s
// before returning. s must be Dehn-reduced w.r.t. p.
Word pad_word(const Word& s, const Presentation& p, int target_length,
              Rng& rng, const PadParams& pp = {});

// pad_word applied to the empty word; the result is trivial in <X|R>.
Word make_trivial_word(const Presentation& p, int target_length, Rng& rng,
                       const PadParams& pp = {});

// Pads a short random Dehn-reduced core; the result is certified
// nontrivial by running dehn_reduce.
Word make_nontrivial_word(const Presentation& p, int target_length, Rng& rng,
                          const PadParams& pp = {});

// Bit b -> trivial word if b = 1, nontrivial if b = 0.
std::vector<Word> encode_bits(const std::vector<std::uint8_t>& bits,
                              const Presentation& p, int target_length,
                              Rng& rng, const PadParams& pp = {});
std::vector<std::uint8_t> decode_bits(const std::vector<Word>& words,
                                      const Presentation& p);

}  // namespace sss::camo
