#include "pseudoword/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "pseudoword/closure.hpp"
#include "pseudoword/errors.hpp"

namespace pseudoword {

namespace {

// Border array (failure function): border[i] = length of the longest proper
// border of w[0..i].
std::vector<std::size_t> border_array(const Word& w) {
  std::vector<std::size_t> border(w.size(), 0);
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::size_t b = border[i - 1];
    while (b > 0 && w[i] != w[b]) b = border[b - 1];
    if (w[i] == w[b]) ++b;
    border[i] = b;
  }
  return border;
}

// Suffix array by rank doubling; fine for the word sizes handled here.
std::vector<int> suffix_array(const Word& w) {
  const int n = static_cast<int>(w.size());
  std::vector<int> sa(n), rank(n), next(n);
  std::iota(sa.begin(), sa.end(), 0);
  for (int i = 0; i < n; ++i) rank[i] = static_cast<unsigned char>(w[i]);
  for (int k = 1;; k <<= 1) {
    auto cmp = [&](int a, int b) {
      if (rank[a] != rank[b]) return rank[a] < rank[b];
      const int ra = a + k < n ? rank[a + k] : -1;
      const int rb = b + k < n ? rank[b + k] : -1;
      return ra < rb;
    };
    std::sort(sa.begin(), sa.end(), cmp);
    next[sa[0]] = 0;
    for (int i = 1; i < n; ++i) next[sa[i]] = next[sa[i - 1]] + (cmp(sa[i - 1], sa[i]) ? 1 : 0);
    rank = next;
    if (rank[sa[n - 1]] == n - 1) break;
  }
  return sa;
}

// Kasai: lcp[i] = longest common prefix of the suffixes sa[i-1] and sa[i].
std::vector<int> lcp_array(const Word& w, const std::vector<int>& sa) {
  const int n = static_cast<int>(w.size());
  std::vector<int> inv(n), lcp(n, 0);
  for (int i = 0; i < n; ++i) inv[sa[i]] = i;
  int h = 0;
  for (int i = 0; i < n; ++i) {
    if (inv[i] == 0) {
      h = 0;
      continue;
    }
    const int j = sa[inv[i] - 1];
    while (i + h < n && j + h < n && w[i + h] == w[j + h]) ++h;
    lcp[inv[i]] = h;
    if (h > 0) --h;
  }
  return lcp;
}

// Z-function: z[i] = longest common prefix of s and s[i..).
std::vector<std::size_t> z_function(const std::string& s) {
  const std::size_t n = s.size();
  std::vector<std::size_t> z(n, 0);
  if (n == 0) return z;
  z[0] = n;
  std::size_t l = 0, r = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (i < r) z[i] = std::min(r - i, z[i - l]);
    while (i + z[i] < n && s[z[i]] == s[i + z[i]]) ++z[i];
    if (i + z[i] > r) {
      l = i;
      r = i + z[i];
    }
  }
  return z;
}

}  // namespace

std::size_t minimal_period(const Word& w) {
  if (w.empty()) throw std::invalid_argument("minimal_period: empty word");
  const auto border = border_array(w);
  return w.size() - border[w.size() - 1];
}

bool has_period(const Word& w, std::size_t p) {
  if (p == 0) throw std::invalid_argument("has_period: period must be positive");
  for (std::size_t i = p; i < w.size(); ++i) {
    if (w[i] != w[i - p]) return false;
  }
  return true;
}

FactorProfile factor_profile(const Word& w, std::size_t maxLen) {
  const std::size_t n = w.size();
  if (maxLen == 0 || maxLen > n) {
    throw std::invalid_argument("factor_profile: maxLen must be in 1..|w|");
  }
  const auto sa = suffix_array(w);
  const auto lcp = lcp_array(w, sa);

  FactorProfile out;
  out.complexity.resize(maxLen, 0);

  // #distinct factors of length L = (number of suffixes of length >= L)
  // minus (adjacent suffix pairs sharing a prefix of length >= L).
  std::vector<std::size_t> geCount(maxLen + 2, 0);
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t v = std::min<std::size_t>(static_cast<std::size_t>(lcp[i]), maxLen);
    ++geCount[v];
  }
  // geCount[v] currently = #lcp clamped to exactly v; make it a suffix sum.
  for (std::size_t v = maxLen; v-- > 0;) geCount[v] += geCount[v + 1];
  for (std::size_t L = 1; L <= maxLen; ++L) {
    out.complexity[L - 1] = (n - L + 1) - geCount[L];
  }

  // Left-special factors: walk the suffix array in blocks of suffixes
  // sharing a length-L prefix; a block whose members are preceded (inside w)
  // by two distinct letters witnesses a left-special factor of length L.
  for (std::size_t L = 1; L <= maxLen; ++L) {
    bool found = false;
    std::size_t i = 0;
    while (i < n && !found) {
      std::size_t j = i;
      while (j + 1 < n && static_cast<std::size_t>(lcp[j + 1]) >= L) ++j;
      if (j > i && static_cast<std::size_t>(sa[i]) + L <= n) {
        int first = -1;
        for (std::size_t k = i; k <= j; ++k) {
          if (sa[k] == 0) continue;
          const int prev = static_cast<unsigned char>(w[sa[k] - 1]);
          if (first == -1) {
            first = prev;
          } else if (prev != first) {
            found = true;
            break;
          }
        }
      }
      i = j + 1;
    }
    if (found) out.leftSpecialLengths.push_back(L);
  }
  return out;
}

FactorProfile factor_profile_naive(const Word& w, std::size_t maxLen) {
  const std::size_t n = w.size();
  if (maxLen == 0 || maxLen > n) {
    throw std::invalid_argument("factor_profile_naive: maxLen must be in 1..|w|");
  }
  FactorProfile out;
  out.complexity.resize(maxLen, 0);
  for (std::size_t L = 1; L <= maxLen; ++L) {
    std::set<std::string> factors;
    std::map<std::string, std::set<char>> before;
    for (std::size_t q = 0; q + L <= n; ++q) {
      std::string f = w.substr(q, L);
      factors.insert(f);
      if (q > 0) before[f].insert(w[q - 1]);
    }
    out.complexity[L - 1] = factors.size();
    for (const auto& [f, prevs] : before) {
      if (prevs.size() >= 2) {
        out.leftSpecialLengths.push_back(L);
        break;
      }
    }
  }
  return out;
}

Word brute_force_closure(const Word& w, const Antimorphism& theta) {
  const std::size_t n = w.size();
  if (n == 0) return Word{};
  for (std::size_t L = n; L <= 2 * n; ++L) {
    Word c = w;
    c.resize(L);
    for (std::size_t i = n; i < L; ++i) {
      c[i] = static_cast<char>(theta.map(static_cast<Letter>(c[L - 1 - i])));
    }
    bool ok = true;
    for (std::size_t i = 0; i < L && ok; ++i) {
      ok = static_cast<Letter>(c[i]) == theta.map(static_cast<Letter>(c[L - 1 - i]));
    }
    if (ok) return c;
  }
  throw InternalError("brute_force_closure: no closure up to twice the length");
}

std::vector<std::size_t> theta_palindromic_prefix_lengths(const Word& w,
                                                          const Antimorphism& theta) {
  const std::size_t n = w.size();
  std::vector<std::size_t> out;
  if (n == 0) return out;
  // The prefix of length l is a theta-palindrome iff it equals the last l
  // letters of theta(w); match all suffixes of theta(w) against w at once.
  std::string s = w;
  s.push_back('\x7F');
  s += theta.apply(w);
  const auto z = z_function(s);
  for (std::size_t l = 1; l <= n; ++l) {
    if (z[n + 1 + (n - l)] == l) out.push_back(l);
  }
  return out;
}

std::vector<std::size_t> theta_palindromic_prefix_lengths_naive(const Word& w,
                                                                const Antimorphism& theta) {
  std::vector<std::size_t> out;
  for (std::size_t l = 1; l <= w.size(); ++l) {
    if (theta.is_palindrome(w.substr(0, l))) out.push_back(l);
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Periodic:
      return "Periodic";
    case Verdict::Aperiodic:
      return "Aperiodic";
    case Verdict::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

EmpiricalClassification classify_empirically(const DirectiveBiSequence& bi,
                                             std::size_t prefixLength, std::size_t periodBound) {
  if (periodBound == 0 || prefixLength < 4 * periodBound) {
    throw std::invalid_argument(
        "classify_empirically: need prefixLength >= 4*periodBound and a positive bound");
  }
  EmpiricalClassification out;
  out.prefixLength = prefixLength;
  out.periodBound = periodBound;

  const Word w = word_prefix(bi, prefixLength);
  const std::size_t p = minimal_period(w);
  if (p <= periodBound) {
    out.verdict = Verdict::Periodic;
    out.period = w.substr(0, p);
    out.evidence = "minimal period " + std::to_string(p) + " on the length-" +
                   std::to_string(prefixLength) + " prefix";
    return out;
  }

  const std::size_t nMax = std::max<std::size_t>(1, prefixLength / 10);
  const FactorProfile profile = factor_profile(w, nMax);
  std::size_t growthFailsAt = 0;
  for (std::size_t L = 1; L <= nMax; ++L) {
    if (profile.complexity[L - 1] < L + 1) {
      growthFailsAt = L;
      break;
    }
  }
  const std::size_t lsLimit = std::min<std::size_t>(40, nMax);
  std::size_t lsMissingAt = 0;
  {
    std::set<std::size_t> ls(profile.leftSpecialLengths.begin(),
                             profile.leftSpecialLengths.end());
    for (std::size_t L = 1; L <= lsLimit; ++L) {
      if (ls.count(L) == 0) {
        lsMissingAt = L;
        break;
      }
    }
  }
  if (growthFailsAt == 0 && lsMissingAt == 0) {
    out.verdict = Verdict::Aperiodic;
    out.evidence = "no period <= " + std::to_string(periodBound) + "; complexity >= n+1 for n <= " +
                   std::to_string(nMax) + "; left-special factors at every length <= " +
                   std::to_string(lsLimit);
    return out;
  }
  out.verdict = Verdict::Unknown;
  out.evidence = "no period <= " + std::to_string(periodBound);
  if (growthFailsAt != 0) {
    out.evidence += "; complexity growth fails at n = " + std::to_string(growthFailsAt);
  }
  if (lsMissingAt != 0) {
    out.evidence += "; no left-special factor of length " + std::to_string(lsMissingAt);
  }
  return out;
}

}  // namespace pseudoword
