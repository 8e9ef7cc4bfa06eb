// Pseudopalindromic closure and iterated prefix generation.
//
// The closure of w under an involutory antimorphism theta is the shortest
// theta-palindrome having w as a prefix: write w = p s with s the longest
// theta-palindromic suffix of w; the closure is p s theta(p).
//
// Iterating (w_{n+1} = closure of w_n + next letter, under the next
// antimorphism) over a directive bi-sequence produces a nested chain of
// prefixes w_1 < w_2 < ... of one infinite word.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "pseudoword/bisequence.hpp"

namespace pseudoword {

// Thrown when a requested computation exceeds the configured size cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Length of the longest suffix of w fixed by theta (0 when only the empty
// suffix qualifies).  Direct quadratic scan; the chain generator uses a
// faster equivalent internally.
std::size_t longest_theta_palindromic_suffix_length(const Word& w, const Antimorphism& theta);

Word longest_theta_palindromic_suffix(const Word& w, const Antimorphism& theta);

// Shortest theta-palindrome having w as a prefix.
Word theta_palindromic_closure(const Word& w, const Antimorphism& theta);

// The chain w_1, ..., w_n generated from a directive bi-sequence.  All
// prefixes share one growing buffer; prefix(k) materializes w_k.
class PrefixChain {
 public:
  PrefixChain(DirectiveBiSequence bi, Word buffer, std::vector<std::size_t> lengths)
      : bi_(std::move(bi)), buffer_(std::move(buffer)), lengths_(std::move(lengths)) {}

  const DirectiveBiSequence& bisequence() const { return bi_; }

  // Number of generated steps n.
  std::size_t steps() const { return lengths_.size(); }

  // |w_k| for 1 <= k <= steps(); length(0) == 0 (the empty w_0).
  std::size_t length(std::size_t k) const;

  // w_k as a word (a prefix of buffer()).
  Word prefix(std::size_t k) const;

  // The longest generated prefix w_n.
  const Word& buffer() const { return buffer_; }

  const std::vector<std::size_t>& lengths() const { return lengths_; }

 private:
  DirectiveBiSequence bi_;
  Word buffer_;
  std::vector<std::size_t> lengths_;
};

// Default cap on generated word length; override with the environment
// variable PSEUDOWORD_MAX_PREFIX.
std::size_t max_prefix_length();

// Generate the chain w_1..w_n.  Throws ResourceLimitError if the chain
// would exceed maxLen letters (default: max_prefix_length()).
PrefixChain generate_chain(const DirectiveBiSequence& bi, std::size_t n, std::size_t maxLen = 0);

// Prefix of the generated infinite word of exactly `len` letters.
// Throws ResourceLimitError if len exceeds the cap.
Word word_prefix(const DirectiveBiSequence& bi, std::size_t len, std::size_t maxLen = 0);

}  // namespace pseudoword
