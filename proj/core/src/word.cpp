#include "sss/word.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace sss {

namespace {

void check_letters(const std::vector<Letter>& letters, int n) {
  if (n < 1) throw MalformedInput("alphabet_size must be at least 1");
  for (const Letter& l : letters) {
    if (l.gen < 0 || l.gen >= n)
      throw MalformedInput("letter index " + std::to_string(l.gen) +
                           " out of range for alphabet of size " +
                           std::to_string(n));
    if (l.sign != 1 && l.sign != -1)
      throw MalformedInput("letter sign must be +1 or -1");
  }
}

}  // namespace

Word::Word(std::vector<Letter> letters, int n)
    : letters_(std::move(letters)), n_(n) {
  check_letters(letters_, n_);
  for (std::size_t i = 1; i < letters_.size(); ++i)
    if (are_inverse(letters_[i - 1], letters_[i]))
      throw MalformedInput("word is not freely reduced");
}

std::string Word::str() const {
  if (letters_.empty()) return "e";
  std::ostringstream out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out << ' ';
    out << (letters_[i].sign > 0 ? 'g' : 'G') << letters_[i].gen;
  }
  return out.str();
}

Word Word::parse(const std::string& text, int n) {
  std::istringstream in(text);
  std::string tok;
  std::vector<Letter> letters;
  bool saw_empty = false;
  while (in >> tok) {
    if (tok == "e") {
      saw_empty = true;
      continue;
    }
    if (tok.size() < 2 || (tok[0] != 'g' && tok[0] != 'G'))
      throw MalformedInput("bad word token: " + tok);
    int idx = 0;
    auto [ptr, ec] =
        std::from_chars(tok.data() + 1, tok.data() + tok.size(), idx);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw MalformedInput("bad word token: " + tok);
    letters.push_back({idx, tok[0] == 'g' ? 1 : -1});
  }
  if (saw_empty && !letters.empty())
    throw MalformedInput("token 'e' mixed with letters");
  return Word(std::move(letters), n);
}

Word free_reduce(const RawWord& w) {
  check_letters(w.letters, w.alphabet_size);
  std::vector<Letter> stack;
  stack.reserve(w.letters.size());
  for (const Letter& l : w.letters) {
    if (!stack.empty() && are_inverse(stack.back(), l))
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return Word(Word::unchecked_t{}, std::move(stack), w.alphabet_size);
}

Word invert(const Word& w) {
  std::vector<Letter> letters(w.letters().rbegin(), w.letters().rend());
  for (Letter& l : letters) l = l.inverse();
  return Word(std::move(letters), w.alphabet_size());
}

Word concat(const Word& u, const Word& v) {
  if (u.alphabet_size() != v.alphabet_size())
    throw AlphabetMismatch("concat over different alphabets");
  RawWord raw;
  raw.alphabet_size = u.alphabet_size();
  raw.letters = u.letters();
  raw.letters.insert(raw.letters.end(), v.letters().begin(),
                     v.letters().end());
  return free_reduce(raw);
}

bool is_cyclically_reduced(const Word& w) {
  return w.size() < 2 || !are_inverse(w.letters().front(), w.letters().back());
}

std::pair<Word, Word> cyclically_reduce(const Word& w) {
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && are_inverse(w[lo], w[hi - 1])) {
    ++lo;
    --hi;
  }
  Word core(std::vector<Letter>(w.letters().begin() + lo,
                                w.letters().begin() + hi),
            w.alphabet_size());
  Word conj(std::vector<Letter>(w.letters().begin(), w.letters().begin() + lo),
            w.alphabet_size());
  return {std::move(core), std::move(conj)};
}

Word rotate(const Word& w, std::size_t offset) {
  if (w.empty()) return w;
  offset %= w.size();
  std::vector<Letter> letters(w.letters().begin() + offset, w.letters().end());
  letters.insert(letters.end(), w.letters().begin(),
                 w.letters().begin() + offset);
  return Word(std::move(letters), w.alphabet_size());
}

std::vector<Word> cyclic_permutations(const Word& w) {
  if (!is_cyclically_reduced(w))
    throw PreconditionError("cyclic_permutations requires a cyclically reduced word");
  std::vector<Word> out;
  for (std::size_t i = 0; i < std::max<std::size_t>(w.size(), 1); ++i) {
    Word r = rotate(w, i);
    if (std::find(out.begin(), out.end(), r) == out.end())
      out.push_back(std::move(r));
  }
  return out;
}

Word random_reduced_word(int n, int length, Rng& rng) {
  if (n < 1) throw PreconditionError("alphabet must have at least one generator");
  if (length < 0) throw PreconditionError("length must be non-negative");
  std::vector<Letter> letters;
  letters.reserve(length);
  for (int i = 0; i < length; ++i) {
    if (i == 0) {
      letters.push_back(Letter::from_order_pos(
          static_cast<int>(rng.below(2 * static_cast<std::uint64_t>(n)))));
    } else {
      int excluded = letters.back().inverse().order_pos();
      int pos = static_cast<int>(rng.below(2 * static_cast<std::uint64_t>(n) - 1));
      if (pos >= excluded) ++pos;
      letters.push_back(Letter::from_order_pos(pos));
    }
  }
  return Word(std::move(letters), n);
}

}  // namespace sss
