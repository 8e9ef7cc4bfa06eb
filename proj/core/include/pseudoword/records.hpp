// Structured text records: the single self-describing output format shared
// by the library and the command line tool, so both render byte-identical
// results.  Every record starts with "formatVersion: 1" and a "kind" field;
// list-valued fields use two-space-indented continuation lines.

#pragma once

#include <cstddef>
#include <string>

#include "pseudoword/closure.hpp"
#include "pseudoword/normalize.hpp"
#include "pseudoword/oracle.hpp"
#include "pseudoword/periodicity.hpp"
#include "pseudoword/verify.hpp"

namespace pseudoword {

// kind: chain — the generated prefixes w_1..w_n (or a single prefix).
std::string render_chain_record(const PrefixChain& chain);

// kind: prefix — one prefix of the generated word.
std::string render_prefix_record(const DirectiveBiSequence& bi, const Word& prefix);

// kind: normalization
std::string render_normalization_record(const DirectiveBiSequence& input,
                                        const NormalizationOutcome& outcome);

// kind: decision — verdict, certificate, period/minimalPeriod when periodic,
// evidence when unknown.
std::string render_decision_record(const DirectiveBiSequence& bi, const PeriodicityResult& result);

// kind: complexity — factor counts and left-special lengths of a prefix.
std::string render_complexity_record(const DirectiveBiSequence& bi, std::size_t prefixLength,
                                     const FactorProfile& profile);

// kind: conjecture — single-instance conjecture report.
std::string render_conjecture_record(const DirectiveBiSequence& bi, const ConjectureReport& report);

// kind: agreement-sweep
std::string render_agreement_record(const Alphabet& alphabet, const AgreementReport& report);

// kind: conjecture-sweep
std::string render_conjecture_sweep_record(const Alphabet& alphabet,
                                           const ConjectureSweepReport& report);

}  // namespace pseudoword
