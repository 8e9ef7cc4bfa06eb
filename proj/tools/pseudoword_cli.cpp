// Command-line front end for the pseudoword library.
//
// Output comes in two modes (--output):
//   structured  (default) one self-describing record per result, rendered by
//               the library itself, so identical inputs through the library
//               API and the CLI produce byte-identical records
//   text        a short human-readable summary
// Exit codes:
//   0  success
//   1  a verification sweep or conjecture check found discrepancies
//   2  bad usage, parse errors, domain errors, or resource limits
//   3  internal errors
#include <algorithm>
#include <cstddef>
#include <exception>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "pseudoword/antimorphism.hpp"
#include "pseudoword/bisequence.hpp"
#include "pseudoword/closure.hpp"
#include "pseudoword/errors.hpp"
#include "pseudoword/normalize.hpp"
#include "pseudoword/oracle.hpp"
#include "pseudoword/periodicity.hpp"
#include "pseudoword/records.hpp"
#include "pseudoword/verify.hpp"

namespace {

using namespace pseudoword;

struct InputOptions {
  std::string alphabet = "2";
  std::string delta;
  std::string theta;
  std::vector<std::string> declarations;
};

// Adds the shared --alphabet/--delta/--theta/--antimorphism options.
void add_input_options(CLI::App& cmd, InputOptions& in, bool requireTracks) {
  cmd.add_option("-a,--alphabet", in.alphabet,
                 "Alphabet: a size (e.g. 3) or explicit glyphs (e.g. abc)")
      ->capture_default_str();
  CLI::Option* d = cmd.add_option("-d,--delta", in.delta,
                                  "Letter track, e.g. 01(10) for preamble 01 and cycle 10");
  CLI::Option* t = cmd.add_option("-t,--theta", in.theta,
                                  "Antimorphism track, e.g. RE(RE) or (R E0 E0)");
  if (requireTracks) {
    d->required();
    t->required();
  }
  cmd.add_option("-A,--antimorphism", in.declarations,
                 "Declare an antimorphism NAME:x>y,... (repeatable)");
}

bool structuredOutput = true;

void add_output_option(CLI::App& cmd) {
  cmd.add_option_function<std::string>(
         "-o,--output",
         [](const std::string& mode) { structuredOutput = (mode == "structured"); },
         "Output mode")
      ->check(CLI::IsMember({"structured", "text"}))
      ->default_str("structured");
}

AntimorphismRegistry make_registry(const Alphabet& alphabet,
                                   const std::vector<std::string>& declarations) {
  AntimorphismRegistry reg = builtin_registry(alphabet);
  for (const std::string& text : declarations) {
    reg.declare(parse_antimorphism_declaration(text, alphabet));
  }
  return reg;
}

DirectiveBiSequence parse_input(const InputOptions& in) {
  Alphabet alphabet = parse_alphabet(in.alphabet);
  AntimorphismRegistry reg = make_registry(alphabet, in.declarations);
  return DirectiveBiSequence(alphabet, parse_letter_track(in.delta, alphabet),
                             parse_antimorphism_track(in.theta, reg));
}

std::string presentation_of(const DirectiveBiSequence& bi) {
  return format_letter_track(bi.delta(), bi.alphabet()) + " / " +
         format_antimorphism_track(bi.theta());
}

int run_generate(const InputOptions& in, std::size_t steps, std::optional<std::size_t> length,
                 std::size_t maxLetters) {
  DirectiveBiSequence bi = parse_input(in);
  if (length) {
    Word w = word_prefix(bi, *length, maxLetters);
    if (structuredOutput) {
      std::cout << render_prefix_record(bi, w);
    } else {
      std::cout << bi.alphabet().render(w) << "\n";
    }
    return 0;
  }
  PrefixChain chain = generate_chain(bi, steps, maxLetters);
  if (structuredOutput) {
    std::cout << render_chain_record(chain);
  } else {
    for (std::size_t k = 1; k <= chain.steps(); ++k) {
      std::cout << "w" << k << ": " << bi.alphabet().render(chain.prefix(k)) << "\n";
    }
  }
  return 0;
}

int run_normalize(const InputOptions& in, std::optional<std::size_t> ternaryStep,
                  bool ternaryNormalForm, std::size_t checkDepth) {
  DirectiveBiSequence bi = parse_input(in);
  const Alphabet& alphabet = bi.alphabet();

  NormalizationOutcome outcome = [&] {
    if (ternaryStep) {
      DirectiveBiSequence out = ternary_rewrite_step(bi, *ternaryStep);
      return NormalizationOutcome{std::move(out), RewriteTrace{}, true};
    }
    if (ternaryNormalForm) {
      DirectiveBiSequence out = ternary_two_antimorphism_normal_form(bi);
      bool changed = presentation_of(out) != presentation_of(bi);
      return NormalizationOutcome{std::move(out), RewriteTrace{}, changed};
    }
    return alphabet.size() == 2 ? normalize_binary(bi) : ternary_exhaust_rewrites(bi);
  }();

  if (structuredOutput) {
    std::cout << render_normalization_record(bi, outcome);
  } else {
    std::cout << presentation_of(outcome.result) << "\n";
  }
  if (checkDepth >= 2) {
    std::string detail;
    bool ok = is_normalized_empirical(outcome.result, checkDepth, &detail);
    std::cout << "normalizedCheck: " << (ok ? "pass" : "fail") << "\n";
    if (!ok) std::cout << "normalizedCheckDetail: " << detail << "\n";
  }
  return 0;
}

int run_decide(const InputOptions& in) {
  DirectiveBiSequence bi = parse_input(in);
  PeriodicityResult r = decide(bi);
  if (structuredOutput) {
    std::cout << render_decision_record(bi, r);
  } else {
    std::cout << "kind=" << to_string(r.verdict);
    if (r.verdict == Verdict::Periodic) {
      std::cout << " period=" << bi.alphabet().render(r.minimalPeriod);
    }
    if (!r.evidence.empty()) std::cout << " evidence=" << r.evidence;
    std::cout << "\n";
  }
  return 0;
}

int run_complexity(const InputOptions& in, std::size_t length, std::size_t maxN) {
  DirectiveBiSequence bi = parse_input(in);
  Word w = word_prefix(bi, length);
  FactorProfile profile = factor_profile(w, maxN);
  if (structuredOutput) {
    std::cout << render_complexity_record(bi, w.size(), profile);
  } else {
    for (std::size_t n = 1; n <= maxN; ++n) {
      bool leftSpecial = std::find(profile.leftSpecialLengths.begin(),
                                   profile.leftSpecialLengths.end(),
                                   n) != profile.leftSpecialLengths.end();
      std::cout << "C(" << n << ") = " << profile.complexity[n - 1]
                << (leftSpecial ? " (left special)" : "") << "\n";
    }
  }
  return 0;
}

struct SweepOptions {
  std::string alphabet = "2";
  std::size_t maxPreamble = 1;
  std::size_t maxCycle = 2;
  std::size_t prefixLength = 2000;
  std::size_t periodBound = 200;
  unsigned threads = 0;
};

void add_sweep_options(CLI::App& cmd, SweepOptions& sw) {
  cmd.add_option("-a,--alphabet", sw.alphabet, "Alphabet: size or explicit glyphs")
      ->capture_default_str();
  cmd.add_option("--max-preamble", sw.maxPreamble, "Preamble length bound for both tracks")
      ->capture_default_str();
  cmd.add_option("--max-cycle", sw.maxCycle, "Cycle length bound for both tracks")
      ->capture_default_str();
  cmd.add_option("--prefix-length", sw.prefixLength, "Generated prefix length for the oracle")
      ->capture_default_str();
  cmd.add_option("--period-bound", sw.periodBound, "Largest period the oracle searches for")
      ->capture_default_str();
  cmd.add_option("--threads", sw.threads, "Worker threads (0 = hardware concurrency)")
      ->capture_default_str();
}

int run_verify(const SweepOptions& sw) {
  Alphabet alphabet = parse_alphabet(sw.alphabet);
  FamilyBounds bounds{sw.maxPreamble, sw.maxCycle};
  AgreementReport report = agreement_sweep(alphabet, bounds, bounds, sw.prefixLength,
                                           sw.periodBound, sw.threads);
  if (structuredOutput) {
    std::cout << render_agreement_record(alphabet, report);
  } else {
    std::cout << "instances=" << report.instances << " periodic=" << report.periodic
              << " aperiodic=" << report.aperiodic << " unknown=" << report.deciderUnknown
              << " disagreements=" << report.disagreementCount << "\n";
    for (const Disagreement& d : report.disagreements) {
      std::cout << d.delta << " / " << d.theta << ": " << d.detail << "\n";
    }
  }
  return report.disagreementCount == 0 ? 0 : 1;
}

int run_explore_single(const InputOptions& in, std::size_t prefixLength,
                       std::size_t periodBound) {
  DirectiveBiSequence bi = parse_input(in);
  ConjectureReport rep = check_conjecture(bi, prefixLength, periodBound);
  if (structuredOutput) {
    std::cout << render_conjecture_record(bi, rep);
  } else {
    std::cout << "conditionsHold=" << (rep.conditionsHold ? "true" : "false")
              << " empirical=" << to_string(rep.empirical.verdict)
              << " mismatch=" << (rep.mismatch ? "true" : "false") << "\n";
  }
  return rep.mismatch ? 1 : 0;
}

int run_explore_sweep(const SweepOptions& sw) {
  Alphabet alphabet = parse_alphabet(sw.alphabet);
  FamilyBounds bounds{sw.maxPreamble, sw.maxCycle};
  std::vector<DirectiveBiSequence> family =
      dedupe_family(enumerate_family(alphabet, bounds, bounds));
  ConjectureSweepReport report =
      conjecture_sweep(alphabet, family, sw.prefixLength, sw.periodBound, sw.threads);
  if (structuredOutput) {
    std::cout << render_conjecture_sweep_record(alphabet, report);
  } else {
    std::cout << "instances=" << report.instances << " conditionsHeld=" << report.conditionsHeld
              << " mismatches=" << report.mismatchCount << "\n";
    for (const ConjectureFinding& f : report.mismatches) {
      std::cout << f.delta << " / " << f.theta << ": " << f.detail << "\n";
    }
  }
  return report.mismatchCount == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized pseudostandard words: generation, normalization, periodicity"};
  app.require_subcommand(1);

  InputOptions genIn;
  std::size_t genSteps = 8;
  std::size_t genLength = 0;
  std::size_t genMaxLetters = 0;
  CLI::App* generate = app.add_subcommand(
      "generate", "Build prefixes by iterated pseudopalindromic closure");
  add_input_options(*generate, genIn, true);
  add_output_option(*generate);
  CLI::Option* stepsOpt =
      generate->add_option("-n,--steps", genSteps, "Closure steps to apply")
          ->capture_default_str();
  CLI::Option* lengthOpt =
      generate->add_option("-l,--length", genLength, "Generate a prefix of exactly this length");
  lengthOpt->excludes(stepsOpt);
  generate->add_option("--max-letters", genMaxLetters,
                       "Abort if the word would exceed this many letters (0 = default cap)");

  InputOptions normIn;
  std::size_t ternaryStepPos = 0;
  bool ternaryNormalForm = false;
  std::size_t checkDepth = 0;
  CLI::App* normalize = app.add_subcommand(
      "normalize", "Rewrite a directive bi-sequence into normalized form");
  add_input_options(*normalize, normIn, true);
  add_output_option(*normalize);
  CLI::Option* stepPosOpt = normalize->add_option(
      "--ternary-step", ternaryStepPos, "Apply one ternary rewrite at this 1-based position");
  CLI::Option* nfOpt = normalize->add_flag(
      "--ternary-normal-form", ternaryNormalForm,
      "Rewrite a reversal+exchange tail into its two-antimorphism normal form");
  nfOpt->excludes(stepPosOpt);
  normalize->add_option("--check-depth", checkDepth,
                        "Also verify the result empirically to this chain depth (>= 2)");

  InputOptions decIn;
  CLI::App* decideCmd = app.add_subcommand("decide", "Decide periodicity with a certificate");
  add_input_options(*decideCmd, decIn, true);
  add_output_option(*decideCmd);

  InputOptions perIn;
  CLI::App* period = app.add_subcommand(
      "period", "Decide periodicity (synonym of decide, reporting the explicit period)");
  add_input_options(*period, perIn, true);
  add_output_option(*period);

  InputOptions cxIn;
  std::size_t cxLength = 2000;
  std::size_t cxMaxN = 20;
  CLI::App* complexity = app.add_subcommand(
      "complexity", "Factor complexity and left-special counts of a generated prefix");
  add_input_options(*complexity, cxIn, true);
  add_output_option(*complexity);
  complexity->add_option("-l,--length", cxLength, "Prefix length to inspect")
      ->capture_default_str();
  complexity->add_option("--max-n", cxMaxN, "Largest factor length to profile")
      ->capture_default_str();

  SweepOptions verifySw;
  CLI::App* verify = app.add_subcommand(
      "verify", "Cross-check the decision procedure against the empirical oracle");
  add_sweep_options(*verify, verifySw);
  add_output_option(*verify);

  SweepOptions exploreSw;
  InputOptions exploreIn;
  CLI::App* explore = app.add_subcommand(
      "explore", "Evaluate the conjectured periodicity criterion (one instance or a sweep)");
  add_sweep_options(*explore, exploreSw);
  add_output_option(*explore);
  CLI::Option* exploreDelta =
      explore->add_option("-d,--delta", exploreIn.delta, "Letter track for a single instance");
  explore->add_option("-t,--theta", exploreIn.theta,
                      "Antimorphism track for a single instance")
      ->needs(exploreDelta);
  explore->add_option("-A,--antimorphism", exploreIn.declarations,
                      "Declare an antimorphism NAME:x>y,... (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (generate->parsed()) {
      std::optional<std::size_t> len;
      if (lengthOpt->count() > 0) len = genLength;
      return run_generate(genIn, genSteps, len, genMaxLetters);
    }
    if (normalize->parsed()) {
      std::optional<std::size_t> pos;
      if (stepPosOpt->count() > 0) pos = ternaryStepPos;
      return run_normalize(normIn, pos, ternaryNormalForm, checkDepth);
    }
    if (decideCmd->parsed()) return run_decide(decIn);
    if (period->parsed()) return run_decide(perIn);
    if (complexity->parsed()) return run_complexity(cxIn, cxLength, cxMaxN);
    if (verify->parsed()) return run_verify(verifySw);
    if (explore->parsed()) {
      if (exploreDelta->count() > 0) {
        exploreIn.alphabet = exploreSw.alphabet;
        return run_explore_single(exploreIn, exploreSw.prefixLength, exploreSw.periodBound);
      }
      return run_explore_sweep(exploreSw);
    }
    std::cerr << "error: no subcommand selected\n";
    return 2;
  } catch (const pseudoword::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const pseudoword::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const pseudoword::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 3;
  }
}
