#include "starpres/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "starpres/errors.hpp"

namespace starpres {

namespace {

void check_rank(const LetterSeq& letters, std::uint32_t rank) {
  for (Letter l : letters) {
    if (l.generator() >= rank) {
      throw std::invalid_argument("letter outside rank " +
                                  std::to_string(rank));
    }
  }
}

}  // namespace

Word Word::reduced(LetterSeq letters, std::uint32_t rank) {
  check_rank(letters, rank);
  Word w(rank);
  LetterSeq out;
  out.reserve(letters.size());
  for (Letter l : letters) {
    if (!out.empty() && out.back() == l.inverse()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  w.letters_ = std::move(out);
  return w;
}

bool Word::cyclically_reduced() const {
  if (letters_.empty()) return true;
  return letters_.front() != letters_.back().inverse();
}

Word free_reduce(LetterSeq letters, std::uint32_t rank) {
  return Word::reduced(std::move(letters), rank);
}

Word cyclic_reduce(const Word& w) {
  std::size_t lo = 0, hi = w.size();
  const LetterSeq& ls = w.letters();
  while (hi - lo >= 2 && ls[lo] == ls[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return Word::reduced(LetterSeq(ls.begin() + lo, ls.begin() + hi), w.rank());
}

Word invert(const Word& w) {
  LetterSeq out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return Word::reduced(std::move(out), w.rank());
}

Word concat(const Word& a, const Word& b) {
  if (a.rank() != b.rank()) {
    throw std::invalid_argument("concat: rank mismatch");
  }
  LetterSeq out = a.letters();
  out.insert(out.end(), b.letters().begin(), b.letters().end());
  return Word::reduced(std::move(out), a.rank());
}

Word rotated(const Word& w, std::size_t s) {
  if (!w.cyclically_reduced()) {
    throw std::invalid_argument("rotated: word not cyclically reduced");
  }
  if (w.empty()) return w;
  s %= w.size();
  LetterSeq out;
  out.reserve(w.size());
  out.insert(out.end(), w.letters().begin() + s, w.letters().end());
  out.insert(out.end(), w.letters().begin(), w.letters().begin() + s);
  return Word::reduced(std::move(out), w.rank());
}

std::vector<Word> rotations(const Word& w) {
  std::vector<Word> out;
  if (w.empty()) {
    out.push_back(w);
    return out;
  }
  out.reserve(w.size());
  for (std::size_t s = 0; s < w.size(); ++s) out.push_back(rotated(w, s));
  return out;
}

Word power(const Word& w, std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("power: exponent must be >= 1");
  if (!w.cyclically_reduced()) {
    throw std::invalid_argument("power: word not cyclically reduced");
  }
  LetterSeq out;
  out.reserve(w.size() * n);
  for (std::uint32_t i = 0; i < n; ++i) {
    out.insert(out.end(), w.letters().begin(), w.letters().end());
  }
  return Word::reduced(std::move(out), w.rank());
}

Word canonical_cyclic(const Word& w) {
  if (!w.cyclically_reduced()) {
    throw std::invalid_argument(
        "canonical_cyclic: word not cyclically reduced");
  }
  Word best = w;
  for (const Word& u : {w, invert(w)}) {
    for (std::size_t s = 0; s < std::max<std::size_t>(u.size(), 1); ++s) {
      Word r = rotated(u, s);
      if (r < best) best = r;
    }
  }
  return best;
}

std::vector<long long> exponent_vector(const Word& w) {
  std::vector<long long> out(w.rank(), 0);
  for (Letter l : w.letters()) out[l.generator()] += l.sign();
  return out;
}

namespace {

constexpr std::string_view kLowerNames = "xyz";
constexpr std::string_view kUpperNames = "XYZ";

LetterSeq parse_compact_small(std::string_view text, std::uint32_t rank) {
  LetterSeq out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    std::size_t lo = kLowerNames.find(c);
    std::size_t up = kUpperNames.find(c);
    if (lo != std::string_view::npos && lo < rank) {
      out.emplace_back(static_cast<std::uint32_t>(lo), 1);
    } else if (up != std::string_view::npos && up < rank) {
      out.emplace_back(static_cast<std::uint32_t>(up), -1);
    } else {
      throw ParseError("unexpected character '" + std::string(1, c) +
                       "' at position " + std::to_string(i));
    }
  }
  return out;
}

LetterSeq parse_compact_indexed(std::string_view text, std::uint32_t rank) {
  LetterSeq out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != 'x') {
      throw ParseError("expected generator name at position " +
                       std::to_string(i));
    }
    std::size_t j = i + 1;
    while (j < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[j]))) {
      ++j;
    }
    if (j == i + 1) {
      throw ParseError("missing generator index at position " +
                       std::to_string(i));
    }
    unsigned idx = 0;
    std::from_chars(text.data() + i + 1, text.data() + j, idx);
    if (idx < 1 || idx > rank) {
      throw ParseError("generator index out of range at position " +
                       std::to_string(i));
    }
    int sign = 1;
    if (j < text.size() && text[j] == '\'') {
      sign = -1;
      ++j;
    }
    out.emplace_back(idx - 1, sign);
    i = j;
  }
  return out;
}

}  // namespace

LetterSeq parse_compact(std::string_view text, std::uint32_t rank) {
  return rank <= 3 ? parse_compact_small(text, rank)
                   : parse_compact_indexed(text, rank);
}

std::string format_compact(const LetterSeq& letters, std::uint32_t rank) {
  check_rank(letters, rank);
  std::string out;
  if (rank <= 3) {
    out.reserve(letters.size());
    for (Letter l : letters) {
      out += (l.negative() ? kUpperNames : kLowerNames)[l.generator()];
    }
  } else {
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (i) out += ' ';
      out += 'x';
      out += std::to_string(letters[i].generator() + 1);
      if (letters[i].negative()) out += '\'';
    }
  }
  return out;
}

std::string format_compact(const Word& w) {
  return format_compact(w.letters(), w.rank());
}

LetterSeq parse_exponent(std::string_view text, std::uint32_t rank) {
  LetterSeq out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    std::size_t caret = tok.find('^');
    std::string name = tok.substr(0, caret);
    long long exp = 1;
    if (caret != std::string::npos) {
      std::string e = tok.substr(caret + 1);
      std::size_t used = 0;
      try {
        exp = std::stoll(e, &used);
      } catch (const std::exception&) {
        throw ParseError("bad exponent in factor '" + tok + "'");
      }
      if (used != e.size()) throw ParseError("bad exponent in factor '" + tok + "'");
      if (exp == 0) throw ParseError("zero exponent in factor '" + tok + "'");
    }
    LetterSeq base = parse_compact(name, rank);
    if (base.size() != 1) {
      throw ParseError("factor '" + tok + "' is not a single generator");
    }
    Letter l = exp > 0 ? base[0] : base[0].inverse();
    for (long long i = 0; i < std::llabs(exp); ++i) out.push_back(l);
  }
  return out;
}

std::string format_exponent(const Word& w) {
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += ' ';
    LetterSeq base{Letter(w[i].generator(), 1)};
    out += format_compact(base, w.rank());
    long long exp = static_cast<long long>(j - i) * w[i].sign();
    if (exp != 1) out += "^" + std::to_string(exp);
    i = j;
  }
  return out;
}

}  // namespace starpres
