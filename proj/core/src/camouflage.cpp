#include "sss/camouflage.hpp"

#include <algorithm>
#include <cmath>

namespace sss::camo {

namespace {

int geometric_length(double mean, int cap, Rng& rng) {
  // geometric on {0,1,2,...} with the given mean
  const double p = 1.0 / (mean + 1.0);
  int k = 0;
  while (k < cap && rng.unit() >= p) ++k;
  return k;
}

// g r g^{-1} for a random closure element r and random conjugator g.
Word conjugated_relator(const Presentation& p, Rng& rng,
                        const PadParams& pp) {
  const auto& closure = p.symmetrized();
  const Word& r = closure[rng.below(closure.size())];
  int glen = geometric_length(pp.conjugator_mean, pp.conjugator_cap, rng);
  Word g = random_reduced_word(p.alphabet_size(), glen, rng);
  return concat(g, concat(r, invert(g)));
}

Word assemble(const Word& s, const Presentation& p, int target_length,
              Rng& rng, const PadParams& pp) {
  const int needed = target_length - static_cast<int>(s.size());
  const std::size_t gaps = s.size() + 1;

  // Factors per gap, in insertion order within a gap.
  std::vector<std::vector<Word>> slots(gaps);
  int inserted = 0;
  while (inserted < needed) {
    Word f = conjugated_relator(p, rng, pp);
    if (f.empty()) continue;
    inserted += static_cast<int>(f.size());
    slots[rng.below(gaps)].push_back(std::move(f));
  }

  RawWord raw;
  raw.alphabet_size = p.alphabet_size();
  for (std::size_t i = 0; i < gaps; ++i) {
    for (const Word& f : slots[i])
      raw.letters.insert(raw.letters.end(), f.letters().begin(),
                         f.letters().end());
    if (i < s.size()) raw.letters.push_back(s[i]);
  }
  return free_reduce(raw);
}

}  // namespace

Word pad_word(const Word& s, const Presentation& p, int target_length,
              Rng& rng, const PadParams& pp) {
  if (target_length <= static_cast<int>(s.size()))
    throw PaddingFailure("target_length must exceed the core word length");
  if (p.symmetrized().empty())
    throw PaddingFailure("cannot pad in a free group: no relators to insert");
  if (!dehn::is_dehn_reduced(s, p))
    throw PreconditionError("pad_word core must be Dehn-reduced");

  const int lo = static_cast<int>(std::ceil((1.0 - pp.length_tolerance) *
                                            target_length));
  const int hi = static_cast<int>(std::floor((1.0 + pp.length_tolerance) *
                                             target_length));
  for (int attempt = 0; attempt < pp.max_retries; ++attempt) {
    Word w = assemble(s, p, target_length, rng, pp);
    const int len = static_cast<int>(w.size());
    if (len < lo || len > hi || w == s) continue;
    if (dehn::dehn_reduce(w, p) == s) return w;
  }
  throw PaddingFailure("padding failed verification after " +
                       std::to_string(pp.max_retries) + " attempts");
}

Word make_trivial_word(const Presentation& p, int target_length, Rng& rng,
                       const PadParams& pp) {
  return pad_word(Word(p.alphabet_size()), p, target_length, rng, pp);
}

Word make_nontrivial_word(const Presentation& p, int target_length, Rng& rng,
                          const PadParams& pp) {
  if (p.symmetrized().empty())
    throw PaddingFailure("cannot pad in a free group: no relators to insert");
  std::size_t min_relator = p.symmetrized().front().size();
  for (const Word& r : p.symmetrized())
    min_relator = std::min(min_relator, r.size());
  // Words at most half the shortest relator long cannot contain an
  // over-half match.
  const int max_core =
      std::max(1, static_cast<int>(min_relator) / 2);

  for (int attempt = 0; attempt < pp.max_retries; ++attempt) {
    int len = 1 + static_cast<int>(rng.below(max_core));
    Word core = random_reduced_word(p.alphabet_size(), len, rng);
    if (!dehn::is_dehn_reduced(core, p)) continue;
    Word w = pad_word(core, p, target_length, rng, pp);
    if (!dehn::is_trivial(w, p)) return w;
  }
  throw PaddingFailure("could not produce a certified nontrivial word");
}

std::vector<Word> encode_bits(const std::vector<std::uint8_t>& bits,
                              const Presentation& p, int target_length,
                              Rng& rng, const PadParams& pp) {
  std::vector<Word> out;
  out.reserve(bits.size());
  for (std::uint8_t b : bits)
    out.push_back(b ? make_trivial_word(p, target_length, rng, pp)
                    : make_nontrivial_word(p, target_length, rng, pp));
  return out;
}

std::vector<std::uint8_t> decode_bits(const std::vector<Word>& words,
                                      const Presentation& p) {
  std::vector<std::uint8_t> bits;
  bits.reserve(words.size());
  for (const Word& w : words)
    bits.push_back(dehn::is_trivial(w, p) ? 1 : 0);
  return bits;
}

}  // namespace sss::camo
