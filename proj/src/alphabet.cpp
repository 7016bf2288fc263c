#include "smooth/alphabet.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace smooth {

const char* to_string(ParityClass p) {
  switch (p) {
    case ParityClass::Even:
      return "even";
    case ParityClass::Odd:
      return "odd";
    case ParityClass::Mixed:
      return "mixed";
  }
  return "?";
}

Alphabet::Alphabet(Letter a, Letter b) : a_(a), b_(b) {
  if (a < 1 || a >= b) {
    throw std::invalid_argument("alphabet requires 1 <= a < b, got {" +
                                std::to_string(a) + "," + std::to_string(b) +
                                "}");
  }
}

namespace {

Letter parse_letter(std::string_view tok) {
  while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
  while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
  Letter value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw std::invalid_argument("not a letter: '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

Alphabet Alphabet::parse(std::string_view text) {
  if (!text.empty() && text.front() == '{') text.remove_prefix(1);
  if (!text.empty() && text.back() == '}') text.remove_suffix(1);
  auto comma = text.find(',');
  if (comma == std::string_view::npos) {
    throw std::invalid_argument("alphabet must be written 'a,b'");
  }
  Letter x = parse_letter(text.substr(0, comma));
  Letter y = parse_letter(text.substr(comma + 1));
  return Alphabet(std::min(x, y), std::max(x, y));
}

ParityClass Alphabet::parity() const noexcept {
  if ((a_ + b_) % 2 == 1) return ParityClass::Mixed;
  return a_ % 2 == 0 ? ParityClass::Even : ParityClass::Odd;
}

std::string Alphabet::str() const {
  return "{" + std::to_string(a_) + "," + std::to_string(b_) + "}";
}

Word::Word(Alphabet alphabet, std::vector<Letter> letters)
    : alphabet_(alphabet), letters_(std::move(letters)) {
  for (Letter c : letters_) {
    if (!alphabet_.contains(c)) {
      throw std::invalid_argument("letter " + std::to_string(c) +
                                  " not in alphabet " + alphabet_.str());
    }
  }
}

Word make_word_unchecked(Alphabet alphabet, std::vector<Letter> letters) {
  return Word(alphabet, std::move(letters), Word::Trusted{});
}

Word Word::parse(Alphabet alphabet, std::string_view text) {
  if (text.empty() || text == "ε" || text == "eps") return Word(alphabet);
  std::vector<Letter> letters;
  if (text.find(',') != std::string_view::npos || !alphabet.single_digit()) {
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      letters.push_back(parse_letter(text.substr(start, end - start)));
      start = end + 1;
    }
  } else {
    letters.reserve(text.size());
    for (char ch : text) {
      if (ch < '0' || ch > '9') {
        throw std::invalid_argument(std::string("not a digit: '") + ch + "'");
      }
      letters.push_back(static_cast<Letter>(ch - '0'));
    }
  }
  return Word(alphabet, std::move(letters));
}

Word Word::from_runs(Alphabet alphabet, std::span<const Run> runs) {
  std::vector<Letter> letters;
  for (const Run& r : runs) letters.insert(letters.end(), r.exponent, r.letter);
  return Word(alphabet, std::move(letters));
}

Word Word::power(Alphabet alphabet, Letter c, std::size_t n) {
  return Word(alphabet, std::vector<Letter>(n, c));
}

Word Word::prefix(std::size_t n) const {
  n = std::min(n, size());
  return Word(alphabet_, {letters_.begin(), letters_.begin() + n}, Trusted{});
}

Word Word::suffix(std::size_t n) const {
  n = std::min(n, size());
  return Word(alphabet_, {letters_.end() - n, letters_.end()}, Trusted{});
}

Word Word::factor(std::size_t pos, std::size_t len) const {
  pos = std::min(pos, size());
  len = std::min(len, size() - pos);
  return Word(alphabet_,
              {letters_.begin() + pos, letters_.begin() + pos + len},
              Trusted{});
}

Word Word::append(Letter c) const {
  if (!alphabet_.contains(c)) {
    throw std::invalid_argument("letter not in alphabet");
  }
  auto out = letters_;
  out.push_back(c);
  return Word(alphabet_, std::move(out), Trusted{});
}

Word Word::prepend(Letter c) const {
  if (!alphabet_.contains(c)) {
    throw std::invalid_argument("letter not in alphabet");
  }
  std::vector<Letter> out;
  out.reserve(size() + 1);
  out.push_back(c);
  out.insert(out.end(), letters_.begin(), letters_.end());
  return Word(alphabet_, std::move(out), Trusted{});
}

Word Word::concat(const Word& other) const {
  if (!(other.alphabet_ == alphabet_)) {
    throw std::invalid_argument("concatenating words over different alphabets");
  }
  auto out = letters_;
  out.insert(out.end(), other.letters_.begin(), other.letters_.end());
  return Word(alphabet_, std::move(out), Trusted{});
}

std::string Word::str() const { return render(alphabet_, letters_); }

std::string render(const Alphabet& alphabet, std::span<const Letter> letters) {
  std::string out;
  if (alphabet.single_digit()) {
    out.reserve(letters.size());
    for (Letter c : letters) out.push_back(static_cast<char>('0' + c));
    return out;
  }
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(letters[i]);
  }
  return out;
}

RunFactorization run_factorize(std::span<const Letter> letters) {
  RunFactorization runs;
  for (Letter c : letters) {
    if (!runs.empty() && runs.back().letter == c) {
      ++runs.back().exponent;
    } else {
      runs.push_back({c, 1});
    }
  }
  return runs;
}

RunFactorization run_factorize(const Word& u) {
  return run_factorize(u.letters());
}

std::size_t factorized_length(std::span<const Letter> letters) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i == 0 || letters[i] != letters[i - 1]) ++n;
  }
  return n;
}

std::string render_runs(const RunFactorization& runs) {
  std::string out;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (i) out += "·";
    out += std::to_string(runs[i].letter) + "^" +
           std::to_string(runs[i].exponent);
  }
  return out;
}

Word complement(const Word& u) {
  const Alphabet& alph = u.alphabet();
  std::vector<Letter> out(u.size());
  std::transform(u.letters().begin(), u.letters().end(), out.begin(),
                 [&](Letter c) { return alph.complement(c); });
  return make_word_unchecked(alph, std::move(out));
}

Word reversal(const Word& u) {
  std::vector<Letter> out(u.letters().rbegin(), u.letters().rend());
  return make_word_unchecked(u.alphabet(), std::move(out));
}

ParityCountVector parity_counts(const Alphabet& alphabet,
                                std::span<const Letter> letters) {
  ParityCountVector v;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    bool odd_index = (i % 2) == 0;  // position i+1 is odd
    if (letters[i] == alphabet.a()) {
      ++(odd_index ? v.count_a_odd : v.count_a_even);
    } else {
      ++(odd_index ? v.count_b_odd : v.count_b_even);
    }
  }
  return v;
}

ParityCountVector parity_counts(const Word& u) {
  return parity_counts(u.alphabet(), u.letters());
}

std::size_t count_letter(std::span<const Letter> letters, Letter c) {
  return static_cast<std::size_t>(std::count(letters.begin(), letters.end(), c));
}

}  // namespace smooth
