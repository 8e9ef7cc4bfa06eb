#include "pseudoword/alphabet.hpp"

#include <stdexcept>

namespace pseudoword {

namespace {
constexpr int kMaxDigitAlphabet = 10;
}

Alphabet::Alphabet(int size) {
  if (size < 2 || size > kMaxDigitAlphabet) {
    throw std::invalid_argument("alphabet size must be between 2 and 10 for digit glyphs, got " +
                                std::to_string(size));
  }
  glyphs_.reserve(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) glyphs_.push_back(static_cast<char>('0' + i));
}

Alphabet::Alphabet(std::string glyphs) : glyphs_(std::move(glyphs)) {
  if (glyphs_.size() < 2) {
    throw std::invalid_argument("alphabet needs at least two glyphs");
  }
  for (std::size_t i = 0; i < glyphs_.size(); ++i) {
    const char c = glyphs_[i];
    if (c <= ' ' || c == '(' || c == ')') {
      throw std::invalid_argument("alphabet glyphs must be printable and must not be parentheses");
    }
    for (std::size_t j = i + 1; j < glyphs_.size(); ++j) {
      if (glyphs_[j] == c) {
        throw std::invalid_argument(std::string("duplicate alphabet glyph '") + c + "'");
      }
    }
  }
}

char Alphabet::glyph(Letter a) const {
  if (!contains(a)) {
    throw std::invalid_argument("letter " + std::to_string(int(a)) + " outside alphabet of size " +
                                std::to_string(size()));
  }
  return glyphs_[a];
}

int Alphabet::letter_of(char glyph) const {
  for (std::size_t i = 0; i < glyphs_.size(); ++i) {
    if (glyphs_[i] == glyph) return static_cast<int>(i);
  }
  return -1;
}

std::string Alphabet::render(const Word& w) const {
  std::string out;
  out.reserve(w.size());
  for (const char c : w) out.push_back(glyph(static_cast<Letter>(c)));
  return out;
}

Word Alphabet::read(const std::string& text) const {
  Word out;
  out.reserve(text.size());
  for (const char c : text) {
    const int a = letter_of(c);
    if (a < 0) {
      throw std::invalid_argument(std::string("character '") + c + "' is not an alphabet glyph");
    }
    out.push_back(static_cast<char>(a));
  }
  return out;
}

}  // namespace pseudoword
