// Normalization of directive bi-sequences.
//
// A bi-sequence is normalized when the chain it generates contains every
// relevant pseudopalindromic prefix of the limit word.  Over the binary
// alphabet every bi-sequence can be rewritten into an equivalent normalized
// one (same infinite word); normalize_binary does so and records the
// rewrite trace.  Over the ternary alphabet two local rewrite rules and a
// closed form for the two-antimorphism case cover the known ground.
//
// All rewriting is element-local on the paired sequence.  Rewrites inside
// the cycle would recur forever, so the engine streams elements through a
// three-element window and folds the output back into preamble + cycle as
// soon as the machine state repeats; the trace keeps only the steps up to
// the fold point (settledPrefixLength output elements).

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pseudoword/bisequence.hpp"

namespace pseudoword {

// One local rewrite: the window starting at 1-based element position
// `position` matched `before` and was replaced by `after`.
struct RewriteStep {
  std::string rule;  // "P1", "P2", "P3" (binary prefix), "F" (binary factor),
                     // "T1", "T2" (ternary factor)
  std::size_t position = 0;
  std::vector<BiElement> before;
  std::vector<BiElement> after;
};

struct RewriteTrace {
  std::vector<RewriteStep> steps;
  // Number of leading output elements fixed by the recorded steps; beyond
  // this point the rewriting repeats periodically and is folded instead.
  std::size_t settledPrefixLength = 0;
};

// Human-readable one-line-per-step rendering, e.g.
//   "F@5: 1:R 0:E 1:E -> 1:R 0:E 1:R 0:E".
std::string render_step(const RewriteStep& step, const Alphabet& alphabet);
std::string render_trace(const RewriteTrace& trace, const Alphabet& alphabet);

struct NormalizationOutcome {
  DirectiveBiSequence result;
  RewriteTrace trace;
  bool changed = false;
};

// Full normalization over the binary alphabet: three prefix rules iterated
// to fixpoint, then one streaming left-to-right factor pass.  The result
// generates the same infinite word and is normalized.
NormalizationOutcome normalize_binary(const DirectiveBiSequence& bi);

// Single application of a ternary rewrite rule at 1-based element position
// `position` of the paired sequence:
//   (x,theta)(y,R)(z,R) -> (x,theta)(y,R)(z,theta)(y,R)   with theta(y) == z
//   (x,R)(y,theta)(z,theta) -> (x,R)(y,theta)(z,R)(y,theta) with theta(y) == z
// where theta exchanges two letters.  Throws std::invalid_argument when
// neither form matches at that position.
DirectiveBiSequence ternary_rewrite_step(const DirectiveBiSequence& bi, std::size_t position);

// Stream the ternary rewrite rules left to right until no window matches
// (folding periodic rewriting).  The result generates the same word and
// skips strictly fewer pseudopalindromic prefixes.
NormalizationOutcome ternary_exhaust_rewrites(const DirectiveBiSequence& bi);

// Closed-form normalization for ternary bi-sequences whose tail uses
// exactly the pairs (R -> b) and (theta -> a) with theta(a) == b: the
// normalized form is (delta_1..delta_{l+1} (ab)^w, theta_1..theta_l theta (R theta)^w)
// for the first l past the preambles with theta_l == R, theta_{l+1} == theta.
// Throws std::invalid_argument when the tail does not have that shape.
DirectiveBiSequence ternary_two_antimorphism_normal_form(const DirectiveBiSequence& bi);

// Empirical normalization check: generate the chain w_1..w_depth and verify
// that every theta-palindromic prefix of w_depth of length <= |w_{depth-1}|
// (for each antimorphism in the check set: {R, E} over binary, the
// antimorphisms occurring in Theta over ternary) is one of the w_k.
// When `detail` is non-null and the check fails, a description of the first
// offending prefix is stored there.
bool is_normalized_empirical(const DirectiveBiSequence& bi, std::size_t depth,
                             std::string* detail = nullptr);

}  // namespace pseudoword
