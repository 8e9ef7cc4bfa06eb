#include "pseudoword/periodicity.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "pseudoword/closure.hpp"
#include "pseudoword/errors.hpp"
#include "pseudoword/normalize.hpp"

namespace pseudoword {

namespace {

constexpr const char* kCertBijection = "binary-bijection";
constexpr const char* kCertLeftSpecial = "aperiodic-left-special";
constexpr const char* kCertCase1 = "ternary-case-1";
constexpr const char* kCertCase2 = "ternary-case-2";
constexpr const char* kCertCase3 = "ternary-case-3";
constexpr const char* kCertManyWithR = "aperiodic-3plus-antimorphisms-with-R";
constexpr const char* kCertOpen = "open-ternary-exchange-tail";

PeriodicityResult aperiodic(const char* certificate) {
  PeriodicityResult r;
  r.verdict = Verdict::Aperiodic;
  r.certificate = certificate;
  return r;
}

// theta -> set of letters paired with it in the tail.
std::map<Antimorphism, std::set<Letter>> pair_map(const std::vector<TailPair>& pairs) {
  std::map<Antimorphism, std::set<Letter>> m;
  for (const TailPair& p : pairs) m[p.theta].insert(p.letter);
  return m;
}

bool is_functional(const std::map<Antimorphism, std::set<Letter>>& m) {
  for (const auto& [t, letters] : m) {
    if (letters.size() != 1) return false;
  }
  return true;
}

// Shared periodic-case construction.  From the tail anchor on, every
// closure step appends theta_{k+1}(p) for one fixed block p, so the word is
// purely periodic with period m*|p| (m = number of distinct appended
// blocks per cycle).  The operative presentation drives the chain; the
// period is reported on (and validated against) the original bi-sequence.
PeriodicityResult periodic_case(const DirectiveBiSequence& operative,
                                const DirectiveBiSequence& original, std::size_t m,
                                const char* certificate) {
  const std::size_t n0 = operative.tail_start();
  const PrefixChain chain = generate_chain(operative, n0 + 1 + m);
  const std::size_t L = chain.length(n0 + 2) - chain.length(n0 + 1);
  internal_check(L >= 1 && L <= chain.length(n0 + 1),
                 "periodic case: block length out of range");
  const Word p = chain.buffer().substr(0, L);

  for (std::size_t k = n0 + 1; k <= n0 + m; ++k) {
    internal_check(chain.length(k + 1) - chain.length(k) == L,
                   "periodic case: appended blocks have unequal lengths");
    const Word block = chain.buffer().substr(chain.length(k), L);
    internal_check(block == operative.theta().item(k + 1).apply(p),
                   "periodic case: appended block is not theta(p)");
  }

  const std::size_t periodLength = m * L;
  const Word wp = word_prefix(original, std::max<std::size_t>(10 * periodLength, 64));
  internal_check(has_period(wp, periodLength), "periodic case: period does not validate");
  const std::size_t minimal = minimal_period(wp);
  internal_check(periodLength % minimal == 0,
                 "periodic case: minimal period does not divide the constructed one");

  PeriodicityResult r;
  r.verdict = Verdict::Periodic;
  r.certificate = certificate;
  r.period = wp.substr(0, periodLength);
  r.minimalPeriod = wp.substr(0, minimal);
  return r;
}

std::string empirical_evidence(const DirectiveBiSequence& bi) {
  const EmpiricalClassification e = classify_empirically(bi, 2000, 200);
  return "empirical verdict: " + to_string(e.verdict) + " (" + e.evidence + ")";
}

// Permutation composition: (after o before)(x) = after[before[x]].
std::vector<Letter> compose(const std::vector<Letter>& after, const std::vector<Letter>& before) {
  std::vector<Letter> r(before.size());
  for (std::size_t x = 0; x < before.size(); ++x) r[x] = after[before[x]];
  return r;
}

}  // namespace

PeriodicityResult decide(const DirectiveBiSequence& bi) {
  switch (bi.alphabet().size()) {
    case 2:
      return decide_binary(bi);
    case 3:
      return decide_ternary(bi);
    default:
      throw std::invalid_argument(
          "decide: periodicity is only decided over alphabets of two or three letters");
  }
}

PeriodicityResult binary_period(const DirectiveBiSequence& normalizedBi) {
  if (normalizedBi.alphabet().size() != 2) {
    throw std::invalid_argument("binary_period: the alphabet must have exactly two letters");
  }
  const auto pairs = normalizedBi.tail_pairs();
  const auto pm = pair_map(pairs);
  bool bijective = is_functional(pm);
  if (bijective && pm.size() == 2) {
    const Letter l0 = *pm.begin()->second.begin();
    const Letter l1 = *std::next(pm.begin())->second.begin();
    bijective = l0 != l1;
  }
  if (!bijective) {
    throw std::invalid_argument("binary_period: tail pairs do not define a bijection");
  }

  const std::size_t n0 = normalizedBi.tail_start();
  const PrefixChain chain = generate_chain(normalizedBi, n0 + 1);
  const std::size_t qLen = chain.length(n0 + 1) - chain.length(n0);
  internal_check(qLen >= 1, "binary period: empty growth step");

  std::set<Antimorphism> thetas;
  for (const TailPair& p : pairs) thetas.insert(p.theta);
  const std::size_t periodLength = thetas.size() == 2 ? 2 * qLen : qLen;

  const Word wp = word_prefix(normalizedBi, std::max<std::size_t>(10 * periodLength, 64));
  internal_check(has_period(wp, periodLength), "binary period: period does not validate");
  const std::size_t minimal = minimal_period(wp);
  internal_check(periodLength % minimal == 0,
                 "binary period: minimal period does not divide the constructed one");

  PeriodicityResult r;
  r.verdict = Verdict::Periodic;
  r.certificate = kCertBijection;
  r.period = wp.substr(0, periodLength);
  r.minimalPeriod = wp.substr(0, minimal);
  return r;
}

PeriodicityResult decide_binary(const DirectiveBiSequence& bi) {
  if (bi.alphabet().size() != 2) {
    throw std::invalid_argument("decide_binary: the alphabet must have exactly two letters");
  }
  const auto pairs = bi.tail_pairs();
  const auto m = pair_map(pairs);

  // Periodic iff theta -> letter is a function and distinct antimorphisms
  // get distinct letters (then it extends to a bijection {R,E} -> {0,1}).
  bool bijective = is_functional(m);
  if (bijective && m.size() == 2) {
    const Letter l0 = *m.begin()->second.begin();
    const Letter l1 = *std::next(m.begin())->second.begin();
    bijective = l0 != l1;
  }
  if (!bijective) return aperiodic(kCertLeftSpecial);

  const NormalizationOutcome norm = normalize_binary(bi);
  return binary_period(norm.result);
}

PeriodicityResult decide_ternary(const DirectiveBiSequence& bi) {
  if (bi.alphabet().size() != 3) {
    throw std::invalid_argument("decide_ternary: the alphabet must have exactly three letters");
  }
  const auto pairs = bi.tail_pairs();
  const auto pm = pair_map(pairs);

  bool hasR = false;
  for (const auto& [t, letters] : pm) hasR = hasR || t.fixes_letters();

  // One antimorphism in the tail: periodic iff the tail letter is constant.
  if (pm.size() == 1) {
    if (pm.begin()->second.size() == 1) return periodic_case(bi, bi, 1, kCertCase1);
    return aperiodic(kCertLeftSpecial);
  }

  // Reversal plus one exchange antimorphism.
  if (pm.size() == 2 && hasR) {
    if (!is_functional(pm)) return aperiodic(kCertLeftSpecial);
    Antimorphism exch = reversal(3);
    Letter a = 0, b = 0;
    for (const auto& [t, letters] : pm) {
      if (t.fixes_letters()) {
        b = *letters.begin();
      } else {
        exch = t;
        a = *letters.begin();
      }
    }
    if (exch.map(a) != b) return aperiodic(kCertLeftSpecial);
    const DirectiveBiSequence nf = ternary_two_antimorphism_normal_form(bi);
    return periodic_case(nf, bi, 2, kCertCase2);
  }

  // Reversal plus at least two exchange antimorphisms.
  if (hasR) return aperiodic(kCertManyWithR);

  // Exchange antimorphisms only: exhaust the local rewrites first (they can
  // only fire near the preamble here), then test the three-cycle criterion.
  const NormalizationOutcome rewritten = ternary_exhaust_rewrites(bi);
  const DirectiveBiSequence& rw = rewritten.result;
  const auto pairs2 = rw.tail_pairs();
  const auto pm2 = pair_map(pairs2);
  for (const auto& [t, letters] : pm2) {
    internal_check(!t.fixes_letters(),
                   "ternary rewriting must not introduce reversal into an exchange-only tail");
  }

  if (!is_functional(pm2)) return aperiodic(kCertLeftSpecial);

  std::set<Letter> images;
  for (const auto& [t, letters] : pm2) images.insert(t.map(*letters.begin()));
  if (images.size() != 1) return aperiodic(kCertLeftSpecial);

  if (pm2.size() == 3) {
    const auto thetaCycle = rw.theta().canonical().cycle();
    if (thetaCycle.size() == 3) {
      std::set<Antimorphism> distinct(thetaCycle.begin(), thetaCycle.end());
      bool allExchange = true;
      for (const Antimorphism& t : thetaCycle) allExchange = allExchange && !t.fixes_letters();
      if (distinct.size() == 3 && allExchange) {
        return periodic_case(rw, bi, 3, kCertCase3);
      }
    }
  }

  PeriodicityResult r;
  r.verdict = Verdict::Unknown;
  r.certificate = kCertOpen;
  r.evidence = empirical_evidence(bi);
  return r;
}

ConjectureReport check_conjecture(const DirectiveBiSequence& bi, std::size_t prefixLength,
                                  std::size_t periodBound) {
  ConjectureReport report;

  DirectiveBiSequence work = bi;
  if (bi.alphabet().size() == 2) {
    work = normalize_binary(bi).result;
    report.testedOnNormalized = true;
  }

  const auto pairs = work.tail_pairs();
  std::set<Letter> images;
  for (const TailPair& p : pairs) images.insert(p.theta.map(p.letter));
  report.singleImage = images.size() == 1;

  const std::size_t start = work.tail_start();
  const std::size_t span = work.theta().cycle().size();
  report.tripleLaw = true;
  for (std::size_t n = start; n < start + span; ++n) {
    const auto& p1 = work.theta().item(n).permutation();
    const auto& p2 = work.theta().item(n + 1).permutation();
    const auto& p3 = work.theta().item(n + 2).permutation();
    if (compose(p3, compose(p2, p1)) != p2) {
      report.tripleLaw = false;
      break;
    }
  }
  report.conditionsHold = report.singleImage && report.tripleLaw;

  report.empirical = classify_empirically(bi, prefixLength, periodBound);
  report.mismatch =
      (report.empirical.verdict == Verdict::Periodic && !report.conditionsHold) ||
      (report.empirical.verdict == Verdict::Aperiodic && report.conditionsHold);
  return report;
}

}  // namespace pseudoword
