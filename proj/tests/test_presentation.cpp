#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "sss/presentation.hpp"

using namespace sss;

namespace {

Word w2(const std::string& s) { return Word::parse(s, 2); }

bool contains(const std::vector<Word>& set, const Word& w) {
  return std::find(set.begin(), set.end(), w) != set.end();
}

}  // namespace

TEST_CASE("symmetrize examples") {
  auto c1 = symmetrize({w2("g0 g1")});
  CHECK(c1.size() == 4);
  for (const char* s : {"g0 g1", "g1 g0", "G1 G0", "G0 G1"})
    CHECK(contains(c1, w2(s)));

  auto c2 = symmetrize({w2("g0")});
  CHECK(c2.size() == 2);
  CHECK(contains(c2, w2("g0")));
  CHECK(contains(c2, w2("G0")));

  auto c3 = symmetrize({w2("g0 g1 g0 g1")});
  CHECK(c3.size() == 4);
  auto expected = oracle::closure_by_enumeration({w2("g0 g1 g0 g1")});
  CHECK(c3.size() == expected.size());
  for (const Word& w : expected) CHECK(contains(c3, w));
}

TEST_CASE("symmetrize rejects bad input") {
  CHECK_THROWS_AS(symmetrize({Word(2)}), PreconditionError);
  CHECK_THROWS_AS(symmetrize({w2("G0 g1 g0")}), PreconditionError);
}

TEST_CASE("symmetrize is idempotent and closed") {
  Rng rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    Word r = random_reduced_word(3, 6, rng);
    if (!is_cyclically_reduced(r)) continue;
    auto closure = symmetrize({r});
    CHECK(symmetrize(closure) == closure);
    for (const Word& w : closure) {
      CHECK(contains(closure, invert(w)));
      for (std::size_t i = 0; i < w.size(); ++i)
        CHECK(contains(closure, rotate(w, i)));
    }
  }
}

TEST_CASE("max_piece_length examples") {
  auto pieces = max_piece_length(symmetrize({w2("g0 g1")}));
  for (const auto& [w, len] : pieces) CHECK(len == 0);

  auto raw = max_piece_length({w2("g0 g1 g0"), w2("g0 g1 g1")});
  CHECK(raw.at(w2("g0 g1 g0")) == 2);
  CHECK(raw.at(w2("g0 g1 g1")) == 2);

  auto comm = symmetrize({w2("g0 g1 G0 G1")});
  CHECK(comm.size() == 8);
  auto cp = max_piece_length(comm);
  CHECK(cp.at(w2("g0 g1 G0 G1")) >= 1);
  // cross-check every entry against the definitional scan
  for (const auto& [w, len] : cp)
    CHECK(len == oracle::max_piece_by_scan(comm, w));
}

TEST_CASE("metric condition examples") {
  Presentation commutator(2, {w2("g0 g1 G0 G1")});
  CHECK_FALSE(satisfies_metric_condition(commutator));

  Presentation free_group(2, {});
  CHECK(satisfies_metric_condition(free_group));

  GenerationParams gp;  // 40 / 4 / 9, lambda 1/6
  Rng rng(31);
  Presentation p = random_small_cancellation(gp, rng);
  CHECK(satisfies_metric_condition(p));
  CHECK(oracle::metric_condition_by_scan(p.symmetrized(), 1, 6));
}

TEST_CASE("random_small_cancellation at platform parameters") {
  GenerationParams gp;
  Rng rng(42);
  int attempts = 0;
  Presentation p = random_small_cancellation(gp, rng, &attempts);
  CHECK(attempts >= 1);
  CHECK(attempts <= 100);
  CHECK(p.relators().size() == 4);
  for (const Word& r : p.relators()) {
    CHECK(r.size() == 9);
    CHECK(is_cyclically_reduced(r));
    // no proper powers: all rotations distinct
    CHECK(cyclic_permutations(r).size() == r.size());
  }
  // no relator is another's inverse or rotation
  for (std::size_t i = 0; i < p.relators().size(); ++i)
    for (std::size_t j = i + 1; j < p.relators().size(); ++j) {
      auto cls = oracle::closure_by_enumeration({p.relators()[i]});
      CHECK_FALSE(contains(cls, p.relators()[j]));
    }
}

TEST_CASE("generation is deterministic in the seed") {
  GenerationParams gp;
  Rng a(7), b(7), c(8);
  Presentation pa = random_small_cancellation(gp, a);
  Presentation pb = random_small_cancellation(gp, b);
  Presentation pc = random_small_cancellation(gp, c);
  CHECK(pa == pb);
  CHECK_FALSE(pa == pc);
}

TEST_CASE("generation fails cleanly when no valid set exists") {
  // On one generator every length-9 candidate is x^9 or x^-9: proper
  // powers, mutual inverses. Nothing can pass.
  GenerationParams gp;
  gp.n = 1;
  gp.num_relators = 2;
  gp.relator_length = 9;
  gp.max_attempts = 300;
  Rng rng(1);
  CHECK_THROWS_AS(random_small_cancellation(gp, rng), GenerationFailure);

  // n=2 with a single length-12 relator: the 48-element closure admits
  // only 12 distinct two-letter prefixes, so some pair always shares a
  // piece of length >= 2 = lambda * |r|. C'(1/6) is unattainable here.
  GenerationParams tight;
  tight.n = 2;
  tight.num_relators = 1;
  tight.relator_length = 12;
  tight.max_attempts = 300;
  Rng rng2(5);
  CHECK_THROWS_AS(random_small_cancellation(tight, rng2), GenerationFailure);

  // Widening the alphabet makes the same shape feasible.
  GenerationParams ok = tight;
  ok.n = 10;
  ok.max_attempts = 10000;
  Rng rng3(5);
  Presentation p = random_small_cancellation(ok, rng3);
  CHECK(satisfies_metric_condition(p));
  CHECK(oracle::metric_condition_by_scan(p.symmetrized(), 1, 6));
}

TEST_CASE("presentation file format round-trips") {
  GenerationParams gp;
  Rng rng(9);
  Presentation p = random_small_cancellation(gp, rng);
  Presentation q = Presentation::parse(p.str());
  CHECK(p == q);
  CHECK(q.symmetrized() == p.symmetrized());

  CHECK_THROWS_AS(Presentation::parse(""), MalformedInput);
  CHECK_THROWS_AS(Presentation::parse("garbage\n"), MalformedInput);
}

TEST_CASE("presentation constructor validation") {
  CHECK_THROWS_AS(Presentation(0, {}), PreconditionError);
  CHECK_THROWS_AS(Presentation(2, {}, Rational{1, 1}), PreconditionError);
  CHECK_THROWS_AS(Presentation(2, {Word::parse("g0", 3)}), AlphabetMismatch);
}
