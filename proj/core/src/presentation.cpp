#include "sss/presentation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace sss {

namespace {

// A word is periodic (a proper power as a cyclic word) iff some rotation
// by 0 < d < |w| equals the word itself.
bool is_periodic(const Word& w) {
  for (std::size_t d = 1; d < w.size(); ++d)
    if (w.size() % d == 0 && rotate(w, d) == w) return true;
  return false;
}

int common_prefix_length(const Word& a, const Word& b) {
  std::size_t m = std::min(a.size(), b.size());
  std::size_t i = 0;
  while (i < m && a[i] == b[i]) ++i;
  return static_cast<int>(i);
}

}  // namespace

std::vector<Word> symmetrize(const std::vector<Word>& relators) {
  std::set<Word, shortlex::WordLess> closure;
  for (const Word& r : relators) {
    if (r.empty()) throw PreconditionError("relators must be nonempty");
    if (!is_cyclically_reduced(r))
      throw PreconditionError("relators must be cyclically reduced");
    for (const Word& w : {r, invert(r)})
      for (std::size_t i = 0; i < w.size(); ++i) closure.insert(rotate(w, i));
  }
  return {closure.begin(), closure.end()};
}

std::map<Word, int, shortlex::WordLess> max_piece_length(
    const std::vector<Word>& symmetrized) {
  std::map<Word, int, shortlex::WordLess> out;
  for (std::size_t i = 0; i < symmetrized.size(); ++i) {
    int best = 0;
    for (std::size_t j = 0; j < symmetrized.size(); ++j)
      if (j != i)
        best = std::max(best,
                        common_prefix_length(symmetrized[i], symmetrized[j]));
    out[symmetrized[i]] = best;
  }
  return out;
}

Presentation::Presentation(int n, std::vector<Word> relators, Rational lambda)
    : n_(n), relators_(std::move(relators)), lambda_(lambda) {
  if (n < 1) throw PreconditionError("alphabet must have at least one generator");
  if (lambda.num <= 0 || lambda.den <= 0 || lambda.num >= lambda.den)
    throw PreconditionError("lambda must be a rational in (0, 1)");
  for (const Word& r : relators_)
    if (r.alphabet_size() != n_)
      throw AlphabetMismatch("relator alphabet does not match presentation");
  symmetrized_ = symmetrize(relators_);
  prefix_index_.assign(2 * static_cast<std::size_t>(n_), {});
  for (std::size_t i = 0; i < symmetrized_.size(); ++i)
    prefix_index_[symmetrized_[i][0].order_pos()].push_back(
        static_cast<int>(i));
}

bool satisfies_metric_condition(const Presentation& p) {
  auto pieces = max_piece_length(p.symmetrized());
  for (const auto& [r, piece] : pieces) {
    // |v| < lambda * |r|  <=>  den * |v| < num * |r|
    if (static_cast<long long>(p.lambda().den) * piece >=
        static_cast<long long>(p.lambda().num) * static_cast<long long>(r.size()))
      return false;
  }
  return true;
}

std::string Presentation::str() const {
  std::ostringstream out;
  out << "n=" << n_ << " lambda=" << lambda_.num << "/" << lambda_.den << "\n";
  for (const Word& r : relators_) out << r.str() << "\n";
  return out.str();
}

Presentation Presentation::parse(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  if (!std::getline(in, header))
    throw MalformedInput("empty presentation file");
  int n = 0, num = 0, den = 0;
  if (std::sscanf(header.c_str(), "n=%d lambda=%d/%d", &n, &num, &den) != 3)
    throw MalformedInput("bad presentation header: " + header);
  std::vector<Word> relators;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    relators.push_back(Word::parse(line, n));
  }
  return Presentation(n, std::move(relators), Rational{num, den});
}

Presentation random_small_cancellation(const GenerationParams& params,
                                       Rng& rng, int* attempts_out) {
  if (params.n < 1 || params.num_relators < 1 || params.relator_length < 2)
    throw PreconditionError("invalid generation parameters");

  for (int attempt = 1; attempt <= params.max_attempts; ++attempt) {
    Rng sub = rng.derive("attempt/" + std::to_string(attempt));
    std::vector<Word> relators;
    bool ok = true;
    for (int i = 0; i < params.num_relators && ok; ++i) {
      Word cand = random_reduced_word(params.n, params.relator_length, sub);
      if (!is_cyclically_reduced(cand) || is_periodic(cand)) {
        ok = false;
        break;
      }
      // distinct as cyclic words from everything drawn so far
      for (const Word& prev : relators) {
        for (std::size_t d = 0; d < cand.size() && ok; ++d) {
          Word rot = rotate(cand, d);
          if (rot == prev || invert(rot) == prev) ok = false;
        }
      }
      if (ok) relators.push_back(std::move(cand));
    }
    if (!ok) continue;
    Presentation p(params.n, std::move(relators), params.lambda);
    if (satisfies_metric_condition(p)) {
      if (attempts_out) *attempts_out = attempt;
      return p;
    }
  }
  throw GenerationFailure("no C'(lambda) presentation found within " +
                              std::to_string(params.max_attempts) +
                              " attempts",
                          params.max_attempts);
}

}  // namespace sss
