#include "sss/dehn.hpp"

#include <sstream>

namespace sss::dehn {

namespace {

struct Match {
  std::size_t len = 0;
  int closure_id = -1;
};

// Longest over-half match of any closure element starting at pos.
// Closure elements are shortlex-sorted and scanned in ascending order, so
// on equal length the first hit is the shortlex-smallest.
Match best_match_at(const std::vector<Letter>& letters, std::size_t pos,
                    const Presentation& p) {
  Match best;
  for (int id : p.prefix_index()[letters[pos].order_pos()]) {
    const Word& r = p.symmetrized()[id];
    std::size_t m = 0;
    while (pos + m < letters.size() && m < r.size() && letters[pos + m] == r[m])
      ++m;
    if (2 * m > r.size() && m > best.len) best = {m, id};
  }
  return best;
}

ReductionTrace reduce_impl(const Word& w, const Presentation& p,
                           bool keep_steps) {
  if (w.alphabet_size() != p.alphabet_size())
    throw AlphabetMismatch("word and presentation alphabets differ");

  ReductionTrace trace;
  std::vector<Letter> cur = w.letters();
  for (;;) {
    Match found;
    std::size_t at = 0;
    for (std::size_t pos = 0; pos < cur.size(); ++pos) {
      found = best_match_at(cur, pos, p);
      if (found.closure_id >= 0) {
        at = pos;
        break;
      }
    }
    if (found.closure_id < 0) break;

    const Word& r = p.symmetrized()[found.closure_id];
    Word suffix(std::vector<Letter>(r.letters().begin() + found.len,
                                    r.letters().end()),
                r.alphabet_size());
    Word replacement = invert(suffix);

    RawWord next;
    next.alphabet_size = w.alphabet_size();
    next.letters.assign(cur.begin(), cur.begin() + at);
    next.letters.insert(next.letters.end(), replacement.letters().begin(),
                        replacement.letters().end());
    next.letters.insert(next.letters.end(), cur.begin() + at + found.len,
                        cur.end());
    cur = free_reduce(next).letters();

    if (keep_steps) trace.steps.push_back({at, r, std::move(replacement)});
  }
  trace.final = Word(std::move(cur), w.alphabet_size());
  return trace;
}

}  // namespace

std::string ReductionTrace::str() const {
  std::ostringstream out;
  for (const ReductionStep& s : steps)
    out << s.position << " " << s.matched.str() << " -> "
        << s.replacement.str() << "\n";
  return out.str();
}

Word dehn_reduce(const Word& w, const Presentation& p) {
  return reduce_impl(w, p, false).final;
}

ReductionTrace dehn_reduce_traced(const Word& w, const Presentation& p) {
  return reduce_impl(w, p, true);
}

bool is_dehn_reduced(const Word& w, const Presentation& p) {
  if (w.alphabet_size() != p.alphabet_size())
    throw AlphabetMismatch("word and presentation alphabets differ");
  for (std::size_t pos = 0; pos < w.size(); ++pos)
    if (best_match_at(w.letters(), pos, p).closure_id >= 0) return false;
  return true;
}

bool is_trivial(const Word& w, const Presentation& p) {
  return dehn_reduce(w, p).empty();
}

}  // namespace sss::dehn
