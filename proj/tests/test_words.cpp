#include <doctest.h>

#include "oracles.hpp"
#include "sss/word.hpp"
#include "stats.hpp"

using namespace sss;

namespace {

// x = g0, y = g1 over n = 2
Word w2(const std::string& s) { return Word::parse(s, 2); }

RawWord raw2(std::vector<Letter> ls) { return RawWord{std::move(ls), 2}; }

}  // namespace

TEST_CASE("free_reduce examples") {
  CHECK(free_reduce(raw2({{0, 1}, {1, 1}, {1, -1}, {0, 1}})) == w2("g0 g0"));
  CHECK(free_reduce(raw2({})) == Word(2));
  CHECK(free_reduce(raw2({{0, 1}, {0, -1}})) == Word(2));
}

TEST_CASE("free_reduce rejects out-of-range letters") {
  CHECK_THROWS_AS(free_reduce(raw2({{5, 1}})), MalformedInput);
  CHECK_THROWS_AS(free_reduce(RawWord{{{0, 1}}, 0}), MalformedInput);
}

TEST_CASE("word construction enforces reduction") {
  CHECK_THROWS_AS(Word({{0, 1}, {0, -1}}, 2), MalformedInput);
}

TEST_CASE("invert examples") {
  CHECK(invert(w2("g0 g1")) == w2("G1 G0"));
  CHECK(invert(Word(2)) == Word(2));
  CHECK(invert(w2("g0 g1 G0")) == w2("g0 G1 G0"));
}

TEST_CASE("concat examples") {
  CHECK(concat(w2("g0 g1"), w2("G1 g0")) == w2("g0 g0"));
  CHECK(concat(w2("g0"), Word(2)) == w2("g0"));
  CHECK(concat(w2("g0 g1"), w2("G1 G0")) == Word(2));
  CHECK_THROWS_AS(concat(w2("g0"), Word::parse("g0", 3)), AlphabetMismatch);
}

TEST_CASE("cyclically_reduce examples") {
  auto [c1, g1] = cyclically_reduce(w2("G0 g1 g0"));
  CHECK(c1 == w2("g1"));
  CHECK(g1 == w2("G0"));

  auto [c2, g2] = cyclically_reduce(w2("g0 g1"));
  CHECK(c2 == w2("g0 g1"));
  CHECK(g2 == Word(2));

  auto [c3, g3] = cyclically_reduce(w2("G0 G0 g1 g0 g0"));
  CHECK(c3 == w2("g1"));
  CHECK(g3 == w2("G0 G0"));
}

TEST_CASE("cyclic_permutations examples") {
  auto s1 = cyclic_permutations(w2("g0 g1"));
  REQUIRE(s1.size() == 2);
  CHECK(s1[0] == w2("g0 g1"));
  CHECK(s1[1] == w2("g1 g0"));

  CHECK(cyclic_permutations(w2("g0")) == std::vector<Word>{w2("g0")});

  auto s3 = cyclic_permutations(w2("g0 g1 g0 g1"));
  CHECK(s3.size() == 2);

  CHECK_THROWS_AS(cyclic_permutations(w2("G0 g1 g0")), PreconditionError);
}

TEST_CASE("random_reduced_word basics") {
  Rng rng(7);
  CHECK(random_reduced_word(2, 0, rng) == Word(2));
  for (int i = 0; i < 20; ++i) {
    Word w = random_reduced_word(1, 3, rng);
    bool all_pos = true, all_neg = true;
    for (const Letter& l : w.letters()) (l.sign > 0 ? all_neg : all_pos) = false;
    CHECK((all_pos || all_neg));  // only x^3 and x^-3 exist
    CHECK(w.size() == 3);
  }
  CHECK_THROWS_AS(random_reduced_word(0, 3, rng), PreconditionError);
}

TEST_CASE("random_reduced_word is uniform over length-2 words at n=2") {
  auto all = oracle::enumerate_reduced_words(2, 2);
  REQUIRE(all.size() == 12);
  Rng rng(123);
  std::vector<long long> counts(12, 0);
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) {
    Word w = random_reduced_word(2, 2, rng);
    auto it = std::find(all.begin(), all.end(), w);
    REQUIRE(it != all.end());
    ++counts[it - all.begin()];
  }
  CHECK(teststat::chi_square_uniform(counts) <
        teststat::chi_square_critical(11));
}

TEST_CASE("free_reduce is idempotent, exhaustively at small sizes") {
  for (int n = 1; n <= 2; ++n) {
    for (int L = 0; L <= (n == 1 ? 10 : 7); ++L) {
      // every raw word of length L
      std::vector<int> digits(L, 0);
      for (;;) {
        RawWord raw;
        raw.alphabet_size = n;
        for (int d : digits) raw.letters.push_back(Letter::from_order_pos(d));
        Word once = free_reduce(raw);
        Word twice = free_reduce(RawWord{once.letters(), n});
        CHECK(once == twice);
        CHECK(once.size() <= raw.letters.size());
        CHECK((once.size() % 2) == (raw.letters.size() % 2));

        int i = L - 1;
        while (i >= 0 && digits[i] == 2 * n - 1) digits[i--] = 0;
        if (i < 0) break;
        ++digits[i];
      }
    }
  }
}

TEST_CASE("free_reduce is idempotent on random long raw words") {
  Rng rng(99);
  for (int trial = 0; trial < 2000; ++trial) {
    int n = 1 + static_cast<int>(rng.below(3));
    int L = static_cast<int>(rng.below(21));
    RawWord raw;
    raw.alphabet_size = n;
    for (int i = 0; i < L; ++i)
      raw.letters.push_back(
          Letter::from_order_pos(static_cast<int>(rng.below(2 * n))));
    Word once = free_reduce(raw);
    CHECK(once == free_reduce(RawWord{once.letters(), n}));
    CHECK(once.size() <= raw.letters.size());
    CHECK((once.size() % 2) == (raw.letters.size() % 2));
  }
}

TEST_CASE("group axioms on sampled words") {
  Rng rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 1 + static_cast<int>(rng.below(3));
    Word a = random_reduced_word(n, static_cast<int>(rng.below(12)), rng);
    Word b = random_reduced_word(n, static_cast<int>(rng.below(12)), rng);
    Word c = random_reduced_word(n, static_cast<int>(rng.below(12)), rng);
    CHECK(concat(concat(a, b), c) == concat(a, concat(b, c)));
    CHECK(concat(a, Word(n)) == a);
    CHECK(concat(Word(n), a) == a);
    CHECK(concat(a, invert(a)) == Word(n));
    CHECK(concat(invert(a), a) == Word(n));
    CHECK(invert(invert(a)) == a);
  }
}

TEST_CASE("cyclically_reduce round-trips") {
  Rng rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 1 + static_cast<int>(rng.below(3));
    Word w = random_reduced_word(n, static_cast<int>(rng.below(15)), rng);
    auto [core, conj] = cyclically_reduce(w);
    CHECK(is_cyclically_reduced(core));
    CHECK(concat(conj, concat(core, invert(conj))) == w);
  }
}

TEST_CASE("reduced word counts match 2n(2n-1)^(L-1)") {
  for (int L = 1; L <= 6; ++L) {
    std::size_t expected = 4;
    for (int i = 1; i < L; ++i) expected *= 3;
    CHECK(oracle::enumerate_reduced_words(2, L).size() == expected);
  }
  CHECK(oracle::enumerate_reduced_words(2, 0).size() == 1);
}

TEST_CASE("word text format") {
  CHECK(w2("g0 G1 g0").str() == "g0 G1 g0");
  CHECK(Word(2).str() == "e");
  CHECK(Word::parse("e", 2) == Word(2));
  CHECK(Word::parse("  g0   G1 ", 2) == w2("g0 G1"));
  CHECK_THROWS_AS(Word::parse("g0 z3", 2), MalformedInput);
  CHECK_THROWS_AS(Word::parse("g9", 2), MalformedInput);
  CHECK_THROWS_AS(Word::parse("e g0", 2), MalformedInput);
  CHECK_THROWS_AS(Word::parse("g0 G0", 2), MalformedInput);

  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    Word w = random_reduced_word(40, static_cast<int>(rng.below(30)), rng);
    CHECK(Word::parse(w.str(), 40) == w);
  }
}
