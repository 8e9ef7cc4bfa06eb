#include "pseudoword/records.hpp"

#include <sstream>

namespace pseudoword {

namespace {

std::string header(const std::string& kind) {
  return "formatVersion: 1\nkind: " + kind + "\n";
}

std::string bi_fields(const DirectiveBiSequence& bi) {
  std::string out;
  out += "alphabet: ";
  for (int a = 0; a < bi.alphabet().size(); ++a) out += bi.alphabet().glyph(static_cast<Letter>(a));
  out += '\n';
  out += "delta: " + format_letter_track(bi.delta(), bi.alphabet()) + '\n';
  out += "theta: " + format_antimorphism_track(bi.theta()) + '\n';
  return out;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string render_chain_record(const PrefixChain& chain) {
  std::string out = header("chain");
  out += bi_fields(chain.bisequence());
  out += "steps: " + std::to_string(chain.steps()) + '\n';
  out += "prefixes:\n";
  for (std::size_t k = 1; k <= chain.steps(); ++k) {
    out += "  " + std::to_string(k) + ": " + chain.bisequence().alphabet().render(chain.prefix(k)) +
           '\n';
  }
  return out;
}

std::string render_prefix_record(const DirectiveBiSequence& bi, const Word& prefix) {
  std::string out = header("prefix");
  out += bi_fields(bi);
  out += "length: " + std::to_string(prefix.size()) + '\n';
  out += "word: " + bi.alphabet().render(prefix) + '\n';
  return out;
}

std::string render_normalization_record(const DirectiveBiSequence& input,
                                        const NormalizationOutcome& outcome) {
  std::string out = header("normalization");
  out += bi_fields(input);
  out += "resultDelta: " + format_letter_track(outcome.result.delta(), outcome.result.alphabet()) +
         '\n';
  out += "resultTheta: " + format_antimorphism_track(outcome.result.theta()) + '\n';
  out += "changed: " + yes_no(outcome.changed) + '\n';
  out += "settledPrefixLength: " + std::to_string(outcome.trace.settledPrefixLength) + '\n';
  out += "trace:\n";
  for (const RewriteStep& s : outcome.trace.steps) {
    out += "  " + render_step(s, input.alphabet()) + '\n';
  }
  return out;
}

std::string render_decision_record(const DirectiveBiSequence& bi, const PeriodicityResult& result) {
  std::string out = header("decision");
  out += bi_fields(bi);
  out += "verdict: " + to_string(result.verdict) + '\n';
  out += "certificate: " + result.certificate + '\n';
  if (result.verdict == Verdict::Periodic) {
    out += "period: " + bi.alphabet().render(result.period) + '\n';
    out += "periodLength: " + std::to_string(result.period.size()) + '\n';
    out += "minimalPeriod: " + bi.alphabet().render(result.minimalPeriod) + '\n';
    out += "minimalPeriodLength: " + std::to_string(result.minimalPeriod.size()) + '\n';
  }
  if (!result.evidence.empty()) {
    out += "evidence: " + result.evidence + '\n';
  }
  return out;
}

std::string render_complexity_record(const DirectiveBiSequence& bi, std::size_t prefixLength,
                                     const FactorProfile& profile) {
  std::string out = header("complexity");
  out += bi_fields(bi);
  out += "prefixLength: " + std::to_string(prefixLength) + '\n';
  out += "complexity:\n";
  for (std::size_t n = 1; n <= profile.complexity.size(); ++n) {
    out += "  " + std::to_string(n) + ": " + std::to_string(profile.complexity[n - 1]) + '\n';
  }
  out += "leftSpecialLengths:";
  for (std::size_t l : profile.leftSpecialLengths) out += ' ' + std::to_string(l);
  out += '\n';
  return out;
}

std::string render_conjecture_record(const DirectiveBiSequence& bi, const ConjectureReport& report) {
  std::string out = header("conjecture");
  out += bi_fields(bi);
  out += "singleImage: " + yes_no(report.singleImage) + '\n';
  out += "tripleLaw: " + yes_no(report.tripleLaw) + '\n';
  out += "conditionsHold: " + yes_no(report.conditionsHold) + '\n';
  out += "testedOnNormalized: " + yes_no(report.testedOnNormalized) + '\n';
  out += "empiricalVerdict: " + to_string(report.empirical.verdict) + '\n';
  out += "empiricalEvidence: " + report.empirical.evidence + '\n';
  out += "mismatch: " + yes_no(report.mismatch) + '\n';
  return out;
}

std::string render_agreement_record(const Alphabet& alphabet, const AgreementReport& report) {
  std::string out = header("agreement-sweep");
  out += "alphabet: ";
  for (int a = 0; a < alphabet.size(); ++a) out += alphabet.glyph(static_cast<Letter>(a));
  out += '\n';
  out += "instances: " + std::to_string(report.instances) + '\n';
  out += "periodic: " + std::to_string(report.periodic) + '\n';
  out += "aperiodic: " + std::to_string(report.aperiodic) + '\n';
  out += "deciderUnknown: " + std::to_string(report.deciderUnknown) + '\n';
  out += "oracleUnknown: " + std::to_string(report.oracleUnknown) + '\n';
  out += "disagreements: " + std::to_string(report.disagreementCount) + '\n';
  if (!report.disagreements.empty()) {
    out += "disagreementDetails:\n";
    for (const Disagreement& d : report.disagreements) {
      out += "  " + d.delta + " / " + d.theta + ": " + d.detail + '\n';
    }
  }
  return out;
}

std::string render_conjecture_sweep_record(const Alphabet& alphabet,
                                           const ConjectureSweepReport& report) {
  std::string out = header("conjecture-sweep");
  out += "alphabet: ";
  for (int a = 0; a < alphabet.size(); ++a) out += alphabet.glyph(static_cast<Letter>(a));
  out += '\n';
  out += "instances: " + std::to_string(report.instances) + '\n';
  out += "conditionsHeld: " + std::to_string(report.conditionsHeld) + '\n';
  out += "empiricalPeriodic: " + std::to_string(report.empiricalPeriodic) + '\n';
  out += "empiricalAperiodic: " + std::to_string(report.empiricalAperiodic) + '\n';
  out += "empiricalUnknown: " + std::to_string(report.empiricalUnknown) + '\n';
  out += "mismatches: " + std::to_string(report.mismatchCount) + '\n';
  if (!report.mismatches.empty()) {
    out += "mismatchDetails:\n";
    for (const ConjectureFinding& f : report.mismatches) {
      out += "  " + f.delta + " / " + f.theta + ": " + f.detail + '\n';
    }
  }
  return out;
}

}  // namespace pseudoword
