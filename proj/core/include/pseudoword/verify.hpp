// Exhaustive cross-validation sweeps: run the constructive decision
// procedures against the independent empirical oracle over bounded families
// of directive bi-sequences, in parallel, with deterministic reports.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pseudoword/bisequence.hpp"
#include "pseudoword/oracle.hpp"
#include "pseudoword/periodicity.hpp"

namespace pseudoword {

struct FamilyBounds {
  std::size_t maxPreamble = 1;
  std::size_t maxCycle = 2;
};

// All involutive antimorphisms over the alphabet, identity (named "R")
// first, then by permutation order.  Non-builtin ones are named by their
// glyph images, e.g. "[10324]".
std::vector<Antimorphism> all_involutions(const Alphabet& alphabet);

// Every presentation (delta, theta) with preamble/cycle lengths within the
// bounds: letters range over the alphabet, antimorphisms over
// all_involutions.  Presentations are enumerated raw (no dedup) in a fixed
// deterministic order.
std::vector<DirectiveBiSequence> enumerate_family(const Alphabet& alphabet,
                                                  const FamilyBounds& deltaBounds,
                                                  const FamilyBounds& thetaBounds);

struct Disagreement {
  std::string delta;
  std::string theta;
  std::string detail;
};

struct AgreementReport {
  std::size_t instances = 0;
  std::size_t periodic = 0;
  std::size_t aperiodic = 0;
  std::size_t deciderUnknown = 0;
  std::size_t oracleUnknown = 0;
  std::size_t disagreementCount = 0;
  // First few disagreements, for the report (all are counted above).
  std::vector<Disagreement> disagreements;
};

// Drop family members whose canonical presentation repeats an earlier
// one (same unrolled tracks); order is otherwise preserved.
std::vector<DirectiveBiSequence> dedupe_family(std::vector<DirectiveBiSequence> family);

// Decide every family member constructively and empirically; a decisive
// oracle verdict that differs from the decider's (or a different minimal
// period when both say Periodic) is a disagreement.  Decider Unknowns must
// carry evidence; they are counted, not treated as disagreements.
// threads == 0 means hardware concurrency.
AgreementReport agreement_sweep(const Alphabet& alphabet,
                                const FamilyBounds& deltaBounds,
                                const FamilyBounds& thetaBounds,
                                std::size_t prefixLength,
                                std::size_t periodBound,
                                unsigned threads = 0);

// Same sweep over an explicit list of instances.
AgreementReport agreement_sweep(const Alphabet& alphabet,
                                const std::vector<DirectiveBiSequence>& family,
                                std::size_t prefixLength,
                                std::size_t periodBound,
                                unsigned threads = 0);

struct ConjectureFinding {
  std::string delta;
  std::string theta;
  std::string detail;
};

struct ConjectureSweepReport {
  std::size_t instances = 0;
  std::size_t conditionsHeld = 0;
  std::size_t empiricalPeriodic = 0;
  std::size_t empiricalAperiodic = 0;
  std::size_t empiricalUnknown = 0;
  std::size_t mismatchCount = 0;
  std::vector<ConjectureFinding> mismatches;
};

// Evaluate the conjectured general-alphabet periodicity criterion across a
// family and compare with the empirical classification.
ConjectureSweepReport conjecture_sweep(const Alphabet& alphabet,
                                       const FamilyBounds& deltaBounds,
                                       const FamilyBounds& thetaBounds,
                                       std::size_t prefixLength,
                                       std::size_t periodBound,
                                       unsigned threads = 0);

// Same evaluation over an explicit list of instances.
ConjectureSweepReport conjecture_sweep(const Alphabet& alphabet,
                                       const std::vector<DirectiveBiSequence>& family,
                                       std::size_t prefixLength,
                                       std::size_t periodBound,
                                       unsigned threads = 0);

}  // namespace pseudoword
