// Independent brute-force and combinatorial checks used to cross-validate
// the constructive algorithms: minimal periods, factor complexity,
// left-special factors, first-principles closure search, and empirical
// classification of generated words.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pseudoword/antimorphism.hpp"
#include "pseudoword/bisequence.hpp"

namespace pseudoword {

// Smallest p >= 1 with w[i] == w[i+p] for all valid i (border-array based).
// The empty word is rejected.
std::size_t minimal_period(const Word& w);

// Whether w is periodic with period p (w[i] == w[i+p] wherever defined).
bool has_period(const Word& w, std::size_t p);

// Factor statistics of a finite word, exact for factor lengths 1..maxLen.
struct FactorProfile {
  // complexity[n-1] = number of distinct factors of length n, 1 <= n <= maxLen.
  std::vector<std::size_t> complexity;
  // Lengths n <= maxLen at which some factor is left-special (extendable to
  // the left by at least two distinct letters inside w).
  std::vector<std::size_t> leftSpecialLengths;
};

// Suffix-array based profile; requires 1 <= maxLen <= |w|.
FactorProfile factor_profile(const Word& w, std::size_t maxLen);

// Quadratic reference implementation used to validate factor_profile.
FactorProfile factor_profile_naive(const Word& w, std::size_t maxLen);

// First-principles closure: smallest L in [|w|, 2|w|] such that w extends
// to a theta-palindrome of length L.  Checks every length upward; completely
// independent of the suffix-based construction.
Word brute_force_closure(const Word& w, const Antimorphism& theta);

// All lengths l >= 1 such that the prefix of length l is a theta-palindrome.
// Linear (Z-function based).
std::vector<std::size_t> theta_palindromic_prefix_lengths(const Word& w, const Antimorphism& theta);

// Quadratic reference for theta_palindromic_prefix_lengths.
std::vector<std::size_t> theta_palindromic_prefix_lengths_naive(const Word& w,
                                                                const Antimorphism& theta);

enum class Verdict { Periodic, Aperiodic, Unknown };

std::string to_string(Verdict v);

// Outcome of an empirical classification of a finite prefix.
struct EmpiricalClassification {
  Verdict verdict = Verdict::Unknown;
  // Nonempty iff verdict == Periodic: the minimal period word.
  Word period;
  // Thresholds used, for the record.
  std::size_t prefixLength = 0;
  std::size_t periodBound = 0;
  std::string evidence;
};

// Classify the word generated by bi from its prefix of length prefixLength:
// Periodic when the prefix has minimal period <= periodBound; otherwise
// Aperiodic when the prefix shows strict complexity growth and left-special
// factors at every small length; otherwise Unknown.  Requires
// prefixLength >= 4 * periodBound.
EmpiricalClassification classify_empirically(const DirectiveBiSequence& bi,
                                             std::size_t prefixLength,
                                             std::size_t periodBound);

}  // namespace pseudoword
