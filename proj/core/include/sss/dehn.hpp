#pragma once

#include <string>
#include <vector>

#include "sss/presentation.hpp"
#include "sss/word.hpp"

namespace sss::dehn {

// One replacement: at `position` the word matched a prefix of `matched`
// (a closure element) longer than half of it, and the prefix was replaced
// by `replacement` (the inverse of the remaining suffix).
struct ReductionStep {
  std::size_t position = 0;
  Word matched;
  Word replacement;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  Word final;

  // One step per line: position, matched word, replacement.
  std::string str() const;
};

// Canonical rule: scan left to right; at the leftmost position admitting
// any over-half match, take the longest match, ties broken by the
// shortlex-smallest closure element. Freely reduce after every
// replacement. Each replacement strictly shortens the word.
Word dehn_reduce(const Word& w, const Presentation& p);
ReductionTrace dehn_reduce_traced(const Word& w, const Presentation& p);

// True iff no subword is strictly more than half of any closure element.
bool is_dehn_reduced(const Word& w, const Presentation& p);

// Word problem for C'(1/6) presentations: trivial iff the Dehn reduction
// is empty.
bool is_trivial(const Word& w, const Presentation& p);

}  // namespace sss::dehn
