// Alphabets and words.
//
// A word is stored as a std::string of raw letter values (0, 1, 2, ...),
// NOT of printable characters.  The Alphabet maps letters to display glyphs
// at the I/O boundary and nowhere else.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace pseudoword {

using Letter = unsigned char;

// A finite word over letters 0..d-1, one letter per byte.
using Word = std::string;

class Alphabet {
 public:
  // Alphabet of the given size with default glyphs '0', '1', ..., '9'.
  // Size must be between 2 and 10 for this constructor.
  explicit Alphabet(int size);

  // Alphabet whose letter i is displayed as glyphs[i].  Glyphs must be
  // distinct printable characters; at least two are required.
  explicit Alphabet(std::string glyphs);

  int size() const { return static_cast<int>(glyphs_.size()); }

  bool contains(Letter a) const { return a < glyphs_.size(); }

  char glyph(Letter a) const;

  // All glyphs in letter order.
  const std::string& glyphs() const { return glyphs_; }

  // Letter for a display character, or -1 if the character is not a glyph
  // of this alphabet.
  int letter_of(char glyph) const;

  // Render a word of raw letters as display glyphs.
  std::string render(const Word& w) const;

  // Parse a string of display glyphs into a word of raw letters.
  // Throws std::invalid_argument naming the offending character.
  Word read(const std::string& text) const;

  friend bool operator==(const Alphabet& x, const Alphabet& y) {
    return x.glyphs_ == y.glyphs_;
  }

 private:
  std::string glyphs_;
};

}  // namespace pseudoword
