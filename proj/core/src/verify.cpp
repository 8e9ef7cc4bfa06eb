#include "pseudoword/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

#include "pseudoword/errors.hpp"

namespace pseudoword {

namespace {

constexpr std::size_t kMaxReportedFindings = 32;

void involutions_rec(std::vector<Letter>& perm, std::vector<bool>& used,
                     std::vector<std::vector<Letter>>& out) {
  std::size_t a = 0;
  while (a < used.size() && used[a]) ++a;
  if (a == used.size()) {
    out.push_back(perm);
    return;
  }
  used[a] = true;
  // Fix a.
  perm[a] = static_cast<Letter>(a);
  involutions_rec(perm, used, out);
  // Exchange a with a later letter.
  for (std::size_t b = a + 1; b < used.size(); ++b) {
    if (used[b]) continue;
    used[b] = true;
    perm[a] = static_cast<Letter>(b);
    perm[b] = static_cast<Letter>(a);
    involutions_rec(perm, used, out);
    used[b] = false;
  }
  used[a] = false;
}

std::string involution_name(const std::vector<Letter>& perm, const Alphabet& alphabet) {
  bool identity = true;
  for (std::size_t a = 0; a < perm.size(); ++a) identity = identity && perm[a] == a;
  if (identity) return "R";
  if (perm.size() == 2) return "E";
  if (perm.size() == 3) {
    for (Letter fixed = 0; fixed < 3; ++fixed) {
      if (ternary_exchange(fixed).permutation() == perm) {
        return "E" + std::to_string(int(fixed));
      }
    }
  }
  std::string name = "[";
  for (Letter img : perm) name += alphabet.glyph(img);
  name += ']';
  return name;
}

// Deterministic parallel map: workers claim indices from a shared counter;
// results land in preassigned slots, so aggregation order is fixed.
template <typename Item, typename Result, typename Fn>
std::vector<Result> parallel_map(const std::vector<Item>& items, unsigned threads, Fn fn) {
  const std::size_t n = items.size();
  std::vector<Result> results(n);
  if (n == 0) return results;

  unsigned workerCount = threads != 0 ? threads : std::thread::hardware_concurrency();
  if (workerCount == 0) workerCount = 1;
  workerCount = static_cast<unsigned>(
      std::min<std::size_t>(workerCount, n));

  std::atomic<std::size_t> next{0};
  std::exception_ptr firstError;
  std::mutex errorMutex;

  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        results[i] = fn(items[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(errorMutex);
        if (!firstError) firstError = std::current_exception();
        next.store(n);
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workerCount; ++t) pool.emplace_back(work);
  work();
  for (std::thread& t : pool) t.join();
  if (firstError) std::rethrow_exception(firstError);
  return results;
}

}  // namespace

std::vector<Antimorphism> all_involutions(const Alphabet& alphabet) {
  std::vector<std::vector<Letter>> perms;
  std::vector<Letter> perm(static_cast<std::size_t>(alphabet.size()), 0);
  std::vector<bool> used(static_cast<std::size_t>(alphabet.size()), false);
  involutions_rec(perm, used, perms);
  std::sort(perms.begin(), perms.end());

  std::vector<Antimorphism> out;
  out.reserve(perms.size());
  for (const auto& p : perms) out.emplace_back(involution_name(p, alphabet), p);
  // Identity (= lexicographically smallest involution) is already first.
  return out;
}

std::vector<DirectiveBiSequence> enumerate_family(const Alphabet& alphabet,
                                                  const FamilyBounds& deltaBounds,
                                                  const FamilyBounds& thetaBounds) {
  if (deltaBounds.maxCycle == 0 || thetaBounds.maxCycle == 0) {
    throw std::invalid_argument("enumerate_family: cycles must be allowed at least length 1");
  }
  const std::size_t d = static_cast<std::size_t>(alphabet.size());
  const std::vector<Antimorphism> inv = all_involutions(alphabet);

  // All tuples over `count` symbols of each length in [minLen, maxLen].
  const auto tuples = [](std::size_t count, std::size_t minLen, std::size_t maxLen) {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t len = minLen; len <= maxLen; ++len) {
      std::vector<std::size_t> t(len, 0);
      for (;;) {
        out.push_back(t);
        std::size_t i = 0;
        while (i < len && ++t[i] == count) {
          t[i] = 0;
          ++i;
        }
        if (i == len) break;
      }
    }
    return out;
  };

  const auto dPres = tuples(d, 0, deltaBounds.maxPreamble);
  const auto dCycs = tuples(d, 1, deltaBounds.maxCycle);
  const auto tPres = tuples(inv.size(), 0, thetaBounds.maxPreamble);
  const auto tCycs = tuples(inv.size(), 1, thetaBounds.maxCycle);

  std::vector<DirectiveBiSequence> family;
  family.reserve(dPres.size() * dCycs.size() * tPres.size() * tCycs.size());
  for (const auto& dp : dPres) {
    for (const auto& dc : dCycs) {
      std::vector<Letter> pre(dp.size()), cyc(dc.size());
      for (std::size_t i = 0; i < dp.size(); ++i) pre[i] = static_cast<Letter>(dp[i]);
      for (std::size_t i = 0; i < dc.size(); ++i) cyc[i] = static_cast<Letter>(dc[i]);
      EventuallyPeriodicSeq<Letter> delta(pre, cyc);
      for (const auto& tp : tPres) {
        for (const auto& tc : tCycs) {
          std::vector<Antimorphism> tPre, tCyc;
          tPre.reserve(tp.size());
          tCyc.reserve(tc.size());
          for (std::size_t i : tp) tPre.push_back(inv[i]);
          for (std::size_t i : tc) tCyc.push_back(inv[i]);
          family.emplace_back(alphabet, delta,
                              EventuallyPeriodicSeq<Antimorphism>(std::move(tPre), std::move(tCyc)));
        }
      }
    }
  }
  return family;
}

std::vector<DirectiveBiSequence> dedupe_family(std::vector<DirectiveBiSequence> family) {
  std::set<std::string> seen;
  std::vector<DirectiveBiSequence> unique;
  unique.reserve(family.size());
  for (DirectiveBiSequence& bi : family) {
    std::string key = format_letter_track(bi.delta().canonical(), bi.alphabet()) + "|" +
                      format_antimorphism_track(bi.theta().canonical());
    if (seen.insert(std::move(key)).second) unique.push_back(std::move(bi));
  }
  return unique;
}

AgreementReport agreement_sweep(const Alphabet& alphabet, const FamilyBounds& deltaBounds,
                                const FamilyBounds& thetaBounds, std::size_t prefixLength,
                                std::size_t periodBound, unsigned threads) {
  return agreement_sweep(alphabet, enumerate_family(alphabet, deltaBounds, thetaBounds),
                         prefixLength, periodBound, threads);
}

AgreementReport agreement_sweep(const Alphabet& alphabet,
                                const std::vector<DirectiveBiSequence>& family,
                                std::size_t prefixLength, std::size_t periodBound,
                                unsigned threads) {
  struct Row {
    Verdict decider = Verdict::Unknown;
    Verdict oracle = Verdict::Unknown;
    std::string detail;  // nonempty = disagreement
  };

  const auto rows = parallel_map<DirectiveBiSequence, Row>(
      family, threads, [&](const DirectiveBiSequence& bi) {
        Row row;
        const PeriodicityResult dec = decide(bi);
        const EmpiricalClassification emp = classify_empirically(bi, prefixLength, periodBound);
        row.decider = dec.verdict;
        row.oracle = emp.verdict;
        if (dec.verdict == Verdict::Unknown) {
          if (dec.evidence.empty()) {
            row.detail = "decider returned Unknown without evidence";
          }
        } else if (emp.verdict != Verdict::Unknown && emp.verdict != dec.verdict) {
          row.detail = "decider says " + to_string(dec.verdict) + ", oracle says " +
                       to_string(emp.verdict) + " (" + emp.evidence + ")";
        } else if (dec.verdict == Verdict::Periodic && emp.verdict == Verdict::Periodic &&
                   dec.minimalPeriod != emp.period) {
          row.detail = "minimal periods differ: decider " +
                       std::to_string(dec.minimalPeriod.size()) + ", oracle " +
                       std::to_string(emp.period.size());
        }
        return row;
      });

  AgreementReport report;
  report.instances = family.size();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Row& row = rows[i];
    switch (row.decider) {
      case Verdict::Periodic:
        ++report.periodic;
        break;
      case Verdict::Aperiodic:
        ++report.aperiodic;
        break;
      case Verdict::Unknown:
        ++report.deciderUnknown;
        break;
    }
    if (row.oracle == Verdict::Unknown) ++report.oracleUnknown;
    if (!row.detail.empty()) {
      ++report.disagreementCount;
      if (report.disagreements.size() < kMaxReportedFindings) {
        report.disagreements.push_back(
            Disagreement{format_letter_track(family[i].delta(), alphabet),
                         format_antimorphism_track(family[i].theta()), row.detail});
      }
    }
  }
  return report;
}

ConjectureSweepReport conjecture_sweep(const Alphabet& alphabet, const FamilyBounds& deltaBounds,
                                       const FamilyBounds& thetaBounds, std::size_t prefixLength,
                                       std::size_t periodBound, unsigned threads) {
  return conjecture_sweep(alphabet, enumerate_family(alphabet, deltaBounds, thetaBounds),
                          prefixLength, periodBound, threads);
}

ConjectureSweepReport conjecture_sweep(const Alphabet& alphabet,
                                       const std::vector<DirectiveBiSequence>& family,
                                       std::size_t prefixLength, std::size_t periodBound,
                                       unsigned threads) {
  struct Row {
    bool conditionsHold = false;
    Verdict empirical = Verdict::Unknown;
    bool mismatch = false;
    std::string detail;
  };

  const auto rows = parallel_map<DirectiveBiSequence, Row>(
      family, threads, [&](const DirectiveBiSequence& bi) {
        Row row;
        const ConjectureReport rep = check_conjecture(bi, prefixLength, periodBound);
        row.conditionsHold = rep.conditionsHold;
        row.empirical = rep.empirical.verdict;
        row.mismatch = rep.mismatch;
        if (rep.mismatch) {
          row.detail = std::string("conditions ") + (rep.conditionsHold ? "hold" : "fail") +
                       " but the word is empirically " + to_string(rep.empirical.verdict) + " (" +
                       rep.empirical.evidence + ")";
        }
        return row;
      });

  ConjectureSweepReport report;
  report.instances = family.size();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Row& row = rows[i];
    if (row.conditionsHold) ++report.conditionsHeld;
    switch (row.empirical) {
      case Verdict::Periodic:
        ++report.empiricalPeriodic;
        break;
      case Verdict::Aperiodic:
        ++report.empiricalAperiodic;
        break;
      case Verdict::Unknown:
        ++report.empiricalUnknown;
        break;
    }
    if (row.mismatch) {
      ++report.mismatchCount;
      if (report.mismatches.size() < kMaxReportedFindings) {
        report.mismatches.push_back(
            ConjectureFinding{format_letter_track(family[i].delta(), alphabet),
                              format_antimorphism_track(family[i].theta()), row.detail});
      }
    }
  }
  return report;
}

}  // namespace pseudoword
