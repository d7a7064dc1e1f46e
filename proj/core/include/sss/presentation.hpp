#pragma once

#include <map>
#include <vector>

#include "sss/shortlex.hpp"
#include "sss/word.hpp"

namespace sss {

// Exact rational, used for the small-cancellation constant.
struct Rational {
  int num = 1;
  int den = 6;
  bool operator==(const Rational&) const = default;
};

// Group presentation <X | R> with the symmetrized closure of R cached.
// Immutable after construction.
class Presentation {
 public:
  Presentation(int n, std::vector<Word> relators, Rational lambda = {1, 6});

  int alphabet_size() const { return n_; }
  const std::vector<Word>& relators() const { return relators_; }
  const std::vector<Word>& symmetrized() const { return symmetrized_; }
  Rational lambda() const { return lambda_; }

  // Closure element ids grouped by first-letter order position; the
  // search index for Dehn reduction.
  const std::vector<std::vector<int>>& prefix_index() const {
    return prefix_index_;
  }

  bool operator==(const Presentation& o) const {
    return n_ == o.n_ && relators_ == o.relators_ && lambda_ == o.lambda_;
  }

  // File format: line 1 `n=<int> lambda=<p>/<q>`, then one relator per
  // line in word token format. The closure is recomputed on load.
  std::string str() const;
  static Presentation parse(const std::string& text);

 private:
  int n_;
  std::vector<Word> relators_;
  std::vector<Word> symmetrized_;
  Rational lambda_;
  std::vector<std::vector<int>> prefix_index_;
};

// Smallest superset closed under inversion and cyclic permutation,
// shortlex-sorted. All inputs must be cyclically reduced and nonempty.
std::vector<Word> symmetrize(const std::vector<Word>& relators);

// For each closure element, the longest common prefix with any other
// element of the closure.
std::map<Word, int, shortlex::WordLess> max_piece_length(
    const std::vector<Word>& symmetrized);

// C'(lambda): every piece prefix of a closure element r is strictly
// shorter than lambda * |r|. Integer cross-multiplied test.
bool satisfies_metric_condition(const Presentation& p);

struct GenerationParams {
  int n = 40;
  int num_relators = 4;
  int relator_length = 9;
  Rational lambda{1, 6};
  int max_attempts = 10000;
};

// Rejection sampling: draw candidate relator sets, symmetrize, test.
// Candidates must be cyclically reduced, not proper powers, and pairwise
// distinct as cyclic words; any failure rejects the whole attempt.
Presentation random_small_cancellation(const GenerationParams& params,
                                       Rng& rng, int* attempts_out = nullptr);

}  // namespace sss
