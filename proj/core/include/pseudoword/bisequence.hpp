// Directive bi-sequences: a letter sequence Delta paired with an
// antimorphism sequence Theta, both eventually periodic.
//
// Text form of each track: PREAMBLE '(' CYCLE ')", e.g. "01(10)" for
// letters and "RE(RE)" or "(R E0 E0)" for antimorphisms.  Antimorphism
// tokens are matched greedily (longest first) against the known names;
// whitespace between tokens is allowed and ignored.

#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "pseudoword/alphabet.hpp"
#include "pseudoword/antimorphism.hpp"
#include "pseudoword/sequence.hpp"

namespace pseudoword {

// Parse failure carrying the 0-based offset of the offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// One aligned element of a bi-sequence: the letter appended at step n and
// the antimorphism used to close step n.
struct BiElement {
  Letter letter;
  Antimorphism theta;

  friend bool operator==(const BiElement& x, const BiElement& y) {
    return x.letter == y.letter && x.theta == y.theta;
  }
  friend bool operator!=(const BiElement& x, const BiElement& y) { return !(x == y); }
};

// A pair (antimorphism at step n, letter at step n+1); the set of such
// pairs over the eventual cycle drives the periodicity criteria.
struct TailPair {
  Antimorphism theta;
  Letter letter;

  friend bool operator==(const TailPair& x, const TailPair& y) {
    return x.theta == y.theta && x.letter == y.letter;
  }
  friend bool operator<(const TailPair& x, const TailPair& y) {
    if (x.theta != y.theta) return x.theta < y.theta;
    return x.letter < y.letter;
  }
};

class DirectiveBiSequence {
 public:
  // Validates that every letter lies in the alphabet and every antimorphism
  // acts on exactly alphabet.size() letters.
  DirectiveBiSequence(Alphabet alphabet,
                      EventuallyPeriodicSeq<Letter> delta,
                      EventuallyPeriodicSeq<Antimorphism> theta);

  const Alphabet& alphabet() const { return alphabet_; }
  const EventuallyPeriodicSeq<Letter>& delta() const { return delta_; }
  const EventuallyPeriodicSeq<Antimorphism>& theta() const { return theta_; }

  // The two tracks merged into one eventually periodic sequence of pairs:
  // preambles padded to equal length, cycles repeated to their lcm.
  EventuallyPeriodicSeq<BiElement> paired() const;

  // Rebuild a bi-sequence from a paired presentation, canonicalizing each
  // track independently for display.
  static DirectiveBiSequence from_paired(const Alphabet& alphabet,
                                         const EventuallyPeriodicSeq<BiElement>& paired);

  // Distinct pairs (theta_n, delta_{n+1}) over one aligned super-cycle of
  // the tail, sorted.  The tail starts right after the longer preamble, so
  // exactly the pairs occurring infinitely often are collected.
  std::vector<TailPair> tail_pairs() const;

  // First position from which both tracks are inside their cycles
  // (max preamble length + 1 on the presentations as given).
  std::size_t tail_start() const;

  // Whether the two bi-sequences denote the same pair of infinite
  // sequences (canonical equality of the paired sequence).
  bool same_bisequence(const DirectiveBiSequence& other) const;

  // Presentation with both tracks canonicalized independently.
  DirectiveBiSequence tracks_canonical() const;

 private:
  Alphabet alphabet_;
  EventuallyPeriodicSeq<Letter> delta_;
  EventuallyPeriodicSeq<Antimorphism> theta_;
};

// Known antimorphism names for parsing and display.
class AntimorphismRegistry {
 public:
  explicit AntimorphismRegistry(const Alphabet& alphabet);

  // Adds a user-declared antimorphism; rejects duplicate names.
  void declare(const Antimorphism& theta);

  bool has(const std::string& name) const;
  const Antimorphism& get(const std::string& name) const;

  // All names, longest first (greedy tokenization order).
  const std::vector<std::string>& names_longest_first() const { return byLength_; }

  const Alphabet& alphabet() const { return alphabet_; }

 private:
  Alphabet alphabet_;
  std::map<std::string, Antimorphism> byName_;
  std::vector<std::string> byLength_;
};

// Built-in registry: "R" always; "E" when d == 2; "E0","E1","E2" when d == 3.
AntimorphismRegistry builtin_registry(const Alphabet& alphabet);

// "2".."10" (size with digit glyphs) or an explicit glyph string like "abc".
Alphabet parse_alphabet(const std::string& text);

// Declaration of the form NAME:g>h,g>h,... using alphabet glyphs; the map
// must be a complete involutive permutation.
Antimorphism parse_antimorphism_declaration(const std::string& text, const Alphabet& alphabet);

// PREAMBLE '(' CYCLE ')' over alphabet glyphs, e.g. "01(10)".
EventuallyPeriodicSeq<Letter> parse_letter_track(const std::string& text, const Alphabet& alphabet);

// PREAMBLE '(' CYCLE ')' over antimorphism names, e.g. "RE(RE)" or "(R E0 E0)".
EventuallyPeriodicSeq<Antimorphism> parse_antimorphism_track(const std::string& text,
                                                             const AntimorphismRegistry& registry);

std::string format_letter_track(const EventuallyPeriodicSeq<Letter>& seq, const Alphabet& alphabet);
std::string format_antimorphism_track(const EventuallyPeriodicSeq<Antimorphism>& seq);

}  // namespace pseudoword
