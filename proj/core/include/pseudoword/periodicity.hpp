// Periodicity decision with explicit certificates.
//
// The generated infinite words are uniformly recurrent, hence either
// aperiodic or purely periodic.  Over two and three letters the decision
// reduces to the set of tail pairs (theta_n, delta_{n+1}); each Periodic
// verdict comes with the explicit period word (a prefix of the generated
// word) plus the minimal period, and each Aperiodic verdict names the
// structural reason.  Cases not covered by a proved criterion are reported
// as Unknown with empirical evidence, never guessed.

#pragma once

#include <cstddef>
#include <string>

#include "pseudoword/bisequence.hpp"
#include "pseudoword/oracle.hpp"

namespace pseudoword {

struct PeriodicityResult {
  Verdict verdict = Verdict::Unknown;
  // One of: "binary-bijection", "aperiodic-left-special",
  // "ternary-case-1", "ternary-case-2", "ternary-case-3",
  // "aperiodic-3plus-antimorphisms-with-R", "open-ternary-exchange-tail".
  std::string certificate;
  // Periodic only: the period as an explicit word (a prefix of the
  // generated word) and the minimal period word.
  Word period;
  Word minimalPeriod;
  // Unknown only: empirical evidence summary.
  std::string evidence;
};

// Dispatch on the alphabet size (2 or 3; anything else is rejected with
// std::invalid_argument).
PeriodicityResult decide(const DirectiveBiSequence& bi);

// Binary criterion: periodic iff the tail pairs define a bijection
// {antimorphisms} -> {letters}; otherwise the word has left-special
// factors of every length.
PeriodicityResult decide_binary(const DirectiveBiSequence& bi);

// Ternary criteria, dispatched on the set of antimorphisms occurring in
// the tail.  Configurations outside the proved cases yield Unknown with
// empirical evidence attached.
PeriodicityResult decide_ternary(const DirectiveBiSequence& bi);

// Period construction for a normalized binary bi-sequence whose tail pairs
// form a bijection.  Exposed separately so the certificate construction is
// testable on its own; decide_binary normalizes and calls this.
PeriodicityResult binary_period(const DirectiveBiSequence& normalizedBi);

// Report for the general-alphabet periodicity conjecture: the conjectured
// criterion holds iff (1) all tail pairs share one image theta(x) and
// (2) over the tail, perm(theta_{n+2}) o perm(theta_{n+1}) o perm(theta_n)
// equals perm(theta_{n+1}) at every aligned position.
struct ConjectureReport {
  bool singleImage = false;     // condition (1)
  bool tripleLaw = false;       // condition (2)
  bool conditionsHold = false;  // both
  // Binary inputs are normalized before testing the conditions; larger
  // alphabets are tested raw and flagged.
  bool testedOnNormalized = false;
  EmpiricalClassification empirical;
  // True when the empirical verdict is decisive and contradicts the
  // conjectured criterion.
  bool mismatch = false;
};

ConjectureReport check_conjecture(const DirectiveBiSequence& bi,
                                  std::size_t prefixLength = 2000,
                                  std::size_t periodBound = 200);

}  // namespace pseudoword
