// Acceptance gate: one self-contained check per release criterion, each
// printing exactly one "PASS criterion N: ..." or "FAIL criterion N: ..."
// line.  The process exits nonzero if any criterion fails.  All thresholds
// (sizes, bounds, time limits) are pinned in the code below.
#include <algorithm>
#include <chrono>
#include <cstddef>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "pseudoword/antimorphism.hpp"
#include "pseudoword/bisequence.hpp"
#include "pseudoword/closure.hpp"
#include "pseudoword/normalize.hpp"
#include "pseudoword/oracle.hpp"
#include "pseudoword/periodicity.hpp"
#include "pseudoword/verify.hpp"

using namespace pseudoword;

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
  int number;
  std::string description;
  double timeLimitSeconds;
};

int failures = 0;

// Runs one criterion body, enforcing its wall-clock budget.
template <typename Fn>
void run_criterion(const Criterion& c, Fn body) {
  std::ostringstream detail;
  bool ok = false;
  double elapsed = 0.0;
  try {
    Clock::time_point start = Clock::now();
    ok = body(detail);
    elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    if (ok && elapsed > c.timeLimitSeconds) {
      ok = false;
      detail << " [exceeded time limit of " << c.timeLimitSeconds << "s]";
    }
  } catch (const std::exception& e) {
    ok = false;
    detail << " [exception: " << e.what() << "]";
  }
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.description
            << " (" << elapsed << "s)";
  std::string extra = detail.str();
  if (!extra.empty()) std::cout << " --" << extra;
  std::cout << "\n";
  if (!ok) ++failures;
}

DirectiveBiSequence make_bi(const std::string& alphabetText, const std::string& deltaText,
                            const std::string& thetaText) {
  Alphabet a = parse_alphabet(alphabetText);
  AntimorphismRegistry reg = builtin_registry(a);
  return DirectiveBiSequence(a, parse_letter_track(deltaText, a),
                             parse_antimorphism_track(thetaText, reg));
}

bool check_chain(std::ostringstream& out, const std::string& alphabet,
                 const std::string& delta, const std::string& theta,
                 const std::vector<std::string>& expected) {
  DirectiveBiSequence bi = make_bi(alphabet, delta, theta);
  PrefixChain chain = generate_chain(bi, expected.size());
  for (std::size_t k = 1; k <= expected.size(); ++k) {
    std::string got = bi.alphabet().render(chain.prefix(k));
    if (got != expected[k - 1]) {
      out << " chain " << delta << "/" << theta << " step " << k << ": got " << got
          << ", want " << expected[k - 1];
      return false;
    }
  }
  return true;
}

// --- criterion 1: golden prefix chains -----------------------------------

bool criterion1(std::ostringstream& out) {
  bool ok = true;
  ok &= check_chain(out, "2", "(011)", "(EER)",
                    {"01", "011001", "01100110", "0110011001"});
  ok &= check_chain(out, "2", "01(10)", "RE(RE)",
                    {"0", "01", "0110", "011001", "01100110", "0110011001"});
  ok &= check_chain(out, "3", "0(211)", "(R E0 E0)",
                    {"0", "0210", "0210120210", "0210120210120"});
  ok &= check_chain(out, "3", "(102)", "(E2 E0 E1)",
                    {"10", "1002", "100221", "10022110", "1002211002"});
  ok &= check_chain(out, "3", "02(12)", "RE0(RE0)",
                    {"0", "0210", "0210120", "0210120210", "0210120210120"});
  // The five-step reversal/exchange illustration.
  DirectiveBiSequence bi = make_bi("3", "(210)", "(E0 E1 R)");
  PrefixChain chain = generate_chain(bi, 5);
  std::string w1 = bi.alphabet().render(chain.prefix(1));
  std::string w5 = bi.alphabet().render(chain.prefix(5));
  if (w1 != "21" || w5 != "2110011220022110022001122110") {
    out << " (210)/(E0E1R): w1 " << w1 << ", w5 " << w5;
    ok = false;
  }
  return ok;
}

// --- criterion 2: binary normalization ------------------------------------

bool criterion2(std::ostringstream& out) {
  // Exemplar: exact rewritten presentation, deep empirical check, word
  // preservation over a 10000-letter prefix.
  DirectiveBiSequence bi = make_bi("2", "(011)", "(EER)");
  NormalizationOutcome outcome = normalize_binary(bi);
  std::string gotDelta = format_letter_track(outcome.result.delta(), bi.alphabet());
  std::string gotTheta = format_antimorphism_track(outcome.result.theta());
  if (gotDelta != "01(10)" || gotTheta != "(RE)") {
    out << " exemplar rewrote to " << gotDelta << "/" << gotTheta;
    return false;
  }
  if (!is_normalized_empirical(outcome.result, 20)) {
    out << " exemplar output fails the depth-20 empirical check";
    return false;
  }
  if (word_prefix(bi, 10000) != word_prefix(outcome.result, 10000)) {
    out << " exemplar output changes the generated word";
    return false;
  }

  // Exhaustive family: every binary presentation with preambles <= 2 and
  // cycles of length 1..3 on both tracks.
  Alphabet a2(2);
  FamilyBounds bounds{2, 3};
  std::vector<DirectiveBiSequence> family = enumerate_family(a2, bounds, bounds);
  std::size_t failed = 0;
  for (const DirectiveBiSequence& member : family) {
    NormalizationOutcome o = normalize_binary(member);
    if (!is_normalized_empirical(o.result, 15) ||
        word_prefix(member, 2000) != word_prefix(o.result, 2000)) {
      if (failed == 0) {
        out << " first family failure: Delta="
            << format_letter_track(member.delta(), a2)
            << " Theta=" << format_antimorphism_track(member.theta());
      }
      ++failed;
    }
  }
  out << " [exemplar + " << family.size() << " family members, " << failed << " failures]";
  return failed == 0;
}

// --- criterion 3: periodicity on the worked instances ---------------------

bool criterion3(std::ostringstream& out) {
  struct Case {
    const char* alphabet;
    const char* delta;
    const char* theta;
    Verdict verdict;
    const char* minimalPeriod;  // empty for Aperiodic
  };
  const Case cases[] = {
      {"2", "(011)", "(EER)", Verdict::Periodic, "0110"},
      {"3", "0(211)", "(R E0 E0)", Verdict::Periodic, "021012"},
      {"3", "(102)", "(E2 E0 E1)", Verdict::Periodic, "100221"},
      {"3", "(01)", "(R E1)", Verdict::Aperiodic, ""},
  };
  bool ok = true;
  for (const Case& c : cases) {
    DirectiveBiSequence bi = make_bi(c.alphabet, c.delta, c.theta);
    PeriodicityResult r = decide(bi);
    std::string period = bi.alphabet().render(r.minimalPeriod);
    if (r.verdict != c.verdict || period != c.minimalPeriod) {
      out << " " << c.delta << "/" << c.theta << ": got " << to_string(r.verdict) << " '"
          << period << "'";
      ok = false;
    }
  }
  return ok;
}

// --- criterion 4: decider vs oracle sweeps --------------------------------

bool criterion4(std::ostringstream& out) {
  const std::size_t prefixLength = 2000;
  const std::size_t periodBound = 200;
  Alphabet a2(2);
  FamilyBounds binaryBounds{2, 3};
  AgreementReport binary =
      agreement_sweep(a2, binaryBounds, binaryBounds, prefixLength, periodBound);
  Alphabet a3(3);
  FamilyBounds ternaryBounds{1, 3};
  AgreementReport ternary =
      agreement_sweep(a3, ternaryBounds, ternaryBounds, prefixLength, periodBound);
  out << " [binary " << binary.instances << " instances, " << binary.disagreementCount
      << " disagreements; ternary " << ternary.instances << " instances, "
      << ternary.disagreementCount << " disagreements, " << ternary.deciderUnknown
      << " open verdicts with evidence]";
  for (const AgreementReport* rep : {&binary, &ternary}) {
    for (const Disagreement& d : rep->disagreements) {
      out << " | " << d.delta << " / " << d.theta << ": " << d.detail;
    }
  }
  return binary.disagreementCount == 0 && ternary.disagreementCount == 0;
}

// --- criterion 5: closure vs brute-force closure ---------------------------

bool criterion5(std::ostringstream& out) {
  std::size_t mismatches = 0;
  std::size_t checked = 0;
  // All binary words of length 1..10 against both binary antimorphisms.
  {
    std::vector<Antimorphism> thetas = {reversal(2), binary_exchange()};
    for (std::size_t len = 1; len <= 10; ++len) {
      Word w(len, 0);
      bool done = false;
      while (!done) {
        for (const Antimorphism& theta : thetas) {
          ++checked;
          if (theta_palindromic_closure(w, theta) != brute_force_closure(w, theta)) {
            ++mismatches;
          }
        }
        std::size_t i = len;
        while (i > 0 && w[i - 1] == 1) w[--i] = 0;
        if (i == 0) done = true;
        else ++w[i - 1];
      }
    }
  }
  // All ternary words of length 1..7 against all four involutions.
  {
    std::vector<Antimorphism> thetas = {reversal(3), ternary_exchange(0), ternary_exchange(1),
                                        ternary_exchange(2)};
    for (std::size_t len = 1; len <= 7; ++len) {
      Word w(len, 0);
      bool done = false;
      while (!done) {
        for (const Antimorphism& theta : thetas) {
          ++checked;
          if (theta_palindromic_closure(w, theta) != brute_force_closure(w, theta)) {
            ++mismatches;
          }
        }
        std::size_t i = len;
        while (i > 0 && w[i - 1] == 2) w[--i] = 0;
        if (i == 0) done = true;
        else ++w[i - 1];
      }
    }
  }
  out << " [" << checked << " closures, " << mismatches << " mismatches]";
  return mismatches == 0;
}

// --- criterion 6: the nine admissible pairings and their perturbations -----

bool criterion6(std::ostringstream& out) {
  Alphabet a3(3);
  AntimorphismRegistry reg = builtin_registry(a3);
  bool ok = true;
  int periodicCount = 0;
  int aperiodicCount = 0;
  for (Letter fixed = 0; fixed < 3; ++fixed) {
    Antimorphism exch = ternary_exchange(fixed);
    for (Letter x = 0; x < 3; ++x) {
      Letter y = exch.map(x);
      // Admissible: the exchange maps its paired letter onto the reversal's.
      {
        EventuallyPeriodicSeq<Letter> delta({}, {x, y});
        EventuallyPeriodicSeq<Antimorphism> theta({}, {reversal(3), exch});
        PeriodicityResult r = decide(DirectiveBiSequence(a3, delta, theta));
        if (r.verdict == Verdict::Periodic) {
          ++periodicCount;
        } else {
          out << " expected Periodic for (" << int(x) << int(y) << ")/(R " << exch.name()
              << "), got " << to_string(r.verdict);
          ok = false;
        }
      }
      // Both single-letter perturbations of x break the correspondence.
      for (Letter xp = 0; xp < 3; ++xp) {
        if (xp == x) continue;
        EventuallyPeriodicSeq<Letter> delta({}, {xp, y});
        EventuallyPeriodicSeq<Antimorphism> theta({}, {reversal(3), exch});
        PeriodicityResult r = decide(DirectiveBiSequence(a3, delta, theta));
        if (r.verdict == Verdict::Aperiodic) {
          ++aperiodicCount;
        } else {
          out << " expected Aperiodic for (" << int(xp) << int(y) << ")/(R " << exch.name()
              << "), got " << to_string(r.verdict);
          ok = false;
        }
      }
    }
  }
  out << " [" << periodicCount << " periodic, " << aperiodicCount << " aperiodic]";
  return ok && periodicCount == 9 && aperiodicCount == 18;
}

// --- criterion 7: aperiodicity evidence for the reversal/exchange mix ------

bool criterion7(std::ostringstream& out) {
  DirectiveBiSequence bi = make_bi("3", "(01)", "(R E1)");
  Word w = word_prefix(bi, 5000);
  FactorProfile profile = factor_profile(w, 100);
  for (std::size_t n = 1; n <= 100; ++n) {
    if (profile.complexity[n - 1] < n + 1) {
      out << " complexity C(" << n << ") = " << profile.complexity[n - 1] << " < " << (n + 1);
      return false;
    }
  }
  // Every prefix of length <= 40 is left special: both extensions occur.
  for (std::size_t len = 1; len <= 40; ++len) {
    Word p = w.substr(0, len);
    Word with1 = Word(1, 1) + p;
    Word with2 = Word(1, 2) + p;
    if (w.find(with1) == Word::npos || w.find(with2) == Word::npos) {
      out << " prefix of length " << len << " is missing an extension";
      return false;
    }
  }
  out << " [C(n) >= n+1 for n <= 100; prefixes left special to length 40]";
  return true;
}

// --- criterion 8: five-letter cross-check and conjecture flag --------------

bool criterion8(std::ostringstream& out) {
  Alphabet a5(5);
  Antimorphism e014("E014", {0, 1, 3, 2, 4});
  Antimorphism e2("E2", {1, 0, 2, 4, 3});
  EventuallyPeriodicSeq<Letter> delta({}, {0, 1});
  DirectiveBiSequence declared(a5, delta,
                               EventuallyPeriodicSeq<Antimorphism>({}, {e014, e2}));
  DirectiveBiSequence withReversal(a5, delta,
                                   EventuallyPeriodicSeq<Antimorphism>({}, {reversal(5), e2}));
  Word expected;
  for (int i = 0; i < 50; ++i) {
    expected.push_back(0);
    expected.push_back(1);
  }
  Word u1 = word_prefix(declared, 100);
  Word u2 = word_prefix(withReversal, 100);
  if (u1 != expected || u2 != expected) {
    out << " prefixes differ: " << a5.render(u1).substr(0, 20) << " vs "
        << a5.render(u2).substr(0, 20);
    return false;
  }
  ConjectureReport rep = check_conjecture(declared);
  if (!rep.mismatch || rep.empirical.verdict != Verdict::Periodic || rep.conditionsHold) {
    out << " conjecture check did not flag the mismatch (conditionsHold="
        << (rep.conditionsHold ? "true" : "false")
        << ", empirical=" << to_string(rep.empirical.verdict) << ")";
    return false;
  }
  out << " [prefixes agree; mismatch flagged]";
  return true;
}

// --- criterion 9: algebraic property suites --------------------------------

bool criterion9(std::ostringstream& out) {
  std::vector<Antimorphism> ternary = {reversal(3), ternary_exchange(0), ternary_exchange(1),
                                       ternary_exchange(2)};
  // Involution and the antimorphism law over all ternary words up to
  // length 5 (split as u|v in every way).
  for (std::size_t len = 0; len <= 5; ++len) {
    Word w(len, 0);
    bool done = false;
    while (!done) {
      for (const Antimorphism& theta : ternary) {
        if (theta.apply(theta.apply(w)) != w) {
          out << " involution fails on " << Alphabet(3).render(w);
          return false;
        }
        for (std::size_t cut = 0; cut <= len; ++cut) {
          Word u = w.substr(0, cut);
          Word v = w.substr(cut);
          if (theta.apply(u + v) != theta.apply(v) + theta.apply(u)) {
            out << " antimorphism law fails on " << Alphabet(3).render(w) << " cut " << cut;
            return false;
          }
        }
      }
      std::size_t i = len;
      while (i > 0 && w[i - 1] == 2) w[--i] = 0;
      if (i == 0) done = true;
      else ++w[i - 1];
    }
  }
  // Exchange composition identity: for distinct i, j, k the triple
  // composition acts like the middle exchange on every letter.
  const Letter idx[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const Letter* t : idx) {
    Antimorphism ei = ternary_exchange(t[0]);
    Antimorphism ej = ternary_exchange(t[1]);
    Antimorphism ek = ternary_exchange(t[2]);
    for (Letter x = 0; x < 3; ++x) {
      if (ei.map(ej.map(ek.map(x))) != ej.map(x)) {
        out << " triple exchange identity fails at " << int(x);
        return false;
      }
    }
  }
  // Consequence: the image of an Ei-palindrome under Ej is an Ek-palindrome,
  // for all ternary words up to length 9.
  std::size_t palindromesChecked = 0;
  for (std::size_t len = 1; len <= 9; ++len) {
    Word w(len, 0);
    bool done = false;
    while (!done) {
      for (const Letter* t : idx) {
        Antimorphism ei = ternary_exchange(t[0]);
        Antimorphism ej = ternary_exchange(t[1]);
        Antimorphism ek = ternary_exchange(t[2]);
        if (ei.apply(w) == w) {
          ++palindromesChecked;
          Word image = ej.apply(w);
          if (ek.apply(image) != image) {
            out << " exchange palindrome property fails on " << Alphabet(3).render(w);
            return false;
          }
        }
      }
      std::size_t i = len;
      while (i > 0 && w[i - 1] == 2) w[--i] = 0;
      if (i == 0) done = true;
      else ++w[i - 1];
    }
  }
  out << " [" << palindromesChecked << " exchange-palindrome images checked]";
  return palindromesChecked > 0;
}

}  // namespace

int main() {
  run_criterion({1, "golden prefix chains reproduce the worked examples", 1.0}, criterion1);
  run_criterion({2, "binary normalization is exact, checked, and word-preserving", 120.0},
                criterion2);
  run_criterion({3, "periodicity decisions match the worked instances", 1.0}, criterion3);
  run_criterion({4, "decider agrees with the empirical oracle across both families", 600.0},
                criterion4);
  run_criterion({5, "closure matches the brute-force oracle on all short words", 60.0},
                criterion5);
  run_criterion({6, "all nine admissible pairings are periodic; 18 perturbations are not", 5.0},
                criterion6);
  run_criterion({7, "the reversal/exchange mix shows aperiodic complexity growth", 30.0},
                criterion7);
  run_criterion({8, "declared five-letter antimorphisms match and flag the conjecture", 1.0},
                criterion8);
  run_criterion({9, "algebraic property suites hold at the stated ranges", 60.0}, criterion9);
  if (failures > 0) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all 9 criteria passed\n";
  return 0;
}
