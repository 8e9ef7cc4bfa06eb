// Involutory antimorphisms of the free monoid.
//
// An involutory antimorphism is determined by an involutive permutation of
// the letters: it applies the permutation letterwise and reverses the word.
// The permutation must be an involution (perm[perm[a]] == a for all a);
// the constructor rejects anything else.

#pragma once

#include <string>
#include <vector>

#include "pseudoword/alphabet.hpp"

namespace pseudoword {

class Antimorphism {
 public:
  // perm[a] is the image of letter a.  Throws std::invalid_argument if perm
  // is not an involutive permutation of 0..perm.size()-1.
  Antimorphism(std::string name, std::vector<Letter> perm);

  const std::string& name() const { return name_; }

  int alphabet_size() const { return static_cast<int>(perm_.size()); }

  Letter map(Letter a) const;

  // True when the letter permutation is the identity (pure reversal).
  bool fixes_letters() const;

  // Image of a word: permute letters, then reverse.
  Word apply(const Word& w) const;

  // Whether w is a fixed point of this antimorphism.
  bool is_palindrome(const Word& w) const;

  const std::vector<Letter>& permutation() const { return perm_; }

  // Equality is by permutation; the display name is ignored.
  friend bool operator==(const Antimorphism& x, const Antimorphism& y) {
    return x.perm_ == y.perm_;
  }
  friend bool operator!=(const Antimorphism& x, const Antimorphism& y) {
    return !(x == y);
  }
  friend bool operator<(const Antimorphism& x, const Antimorphism& y) {
    if (x.perm_.size() != y.perm_.size()) return x.perm_.size() < y.perm_.size();
    for (std::size_t i = 0; i < x.perm_.size(); ++i) {
      if (x.perm_[i] != y.perm_[i]) return x.perm_[i] < y.perm_[i];
    }
    return false;
  }

 private:
  std::string name_;
  std::vector<Letter> perm_;
};

// Pure reversal over d letters (identity permutation), named "R".
Antimorphism reversal(int d);

// The binary exchange antimorphism 0 <-> 1, named "E".
Antimorphism binary_exchange();

// The ternary antimorphism fixing `fixed` and exchanging the other two
// letters, named "E0", "E1" or "E2".
Antimorphism ternary_exchange(Letter fixed);

}  // namespace pseudoword
