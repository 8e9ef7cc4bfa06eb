#include "pseudoword/closure.hpp"

#include <cstdint>
#include <cstdlib>

#include "pseudoword/errors.hpp"

namespace pseudoword {

namespace {

// Rolling-hash arithmetic modulo the Mersenne prime 2^61 - 1, with two
// independent bases.  Hash equality is necessary for string equality, so a
// downward scan that confirms every hash hit exactly stays exact: a false
// positive costs one failed comparison, a false negative cannot happen.
using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kMod = (u64{1} << 61) - 1;
constexpr u64 kBase[2] = {1859897622953ull, 498758643356941ull};

inline u64 mod_mul(u64 a, u64 b) {
  const u128 r = static_cast<u128>(a) * b;
  u64 s = static_cast<u64>(r & kMod) + static_cast<u64>(r >> 61);
  if (s >= kMod) s -= kMod;
  return s;
}

inline u64 mod_add(u64 a, u64 b) {
  u64 s = a + b;
  if (s >= kMod) s -= kMod;
  return s;
}

inline u64 mod_sub(u64 a, u64 b) { return a >= b ? a - b : a + kMod - b; }

u64 mod_pow(u64 a, u64 e) {
  u64 r = 1;
  while (e != 0) {
    if (e & 1) r = mod_mul(r, a);
    a = mod_mul(a, a);
    e >>= 1;
  }
  return r;
}

// Incremental chain builder.  For each base it keeps prefix sums
//   A[i]    = sum_{k<i} (w[k]+1)     * B^k
//   D[t][i] = sum_{k<i} (p_t(w[k])+1) * B^-k     (p_t = permutation of theta t)
// so that w[a..b) being a theta_t-palindrome is equivalent (up to hash
// collisions) to  A[b]-A[a] == B^{a+b-1} * (D[t][b]-D[t][a]).
class ChainBuilder {
 public:
  ChainBuilder(const DirectiveBiSequence& bi, std::size_t maxLen)
      : bi_(bi), maxLen_(maxLen) {
    collect(bi_.theta().preamble());
    collect(bi_.theta().cycle());
    for (int h = 0; h < 2; ++h) {
      invBase_[h] = mod_pow(kBase[h], kMod - 2);
      pow_[h] = {1};
      ipow_[h] = {1};
      A_[h] = {0};
      D_[h].assign(thetas_.size(), {0});
    }
  }

  void run_steps(std::size_t n) {
    while (stepIndex_ < n) step();
  }

  void run_until_length(std::size_t len) {
    while (w_.size() < len) step();
  }

  Word take_word() { return std::move(w_); }
  std::vector<std::size_t> take_lengths() { return std::move(lengths_); }
  const Word& word() const { return w_; }

 private:
  void collect(const std::vector<Antimorphism>& part) {
    for (const Antimorphism& t : part) {
      if (theta_index(t) == thetas_.size()) thetas_.push_back(t);
    }
  }

  std::size_t theta_index(const Antimorphism& t) const {
    for (std::size_t i = 0; i < thetas_.size(); ++i) {
      if (thetas_[i] == t) return i;
    }
    return thetas_.size();
  }

  void ensure_pow(std::size_t n) {
    for (int h = 0; h < 2; ++h) {
      while (pow_[h].size() <= n) {
        pow_[h].push_back(mod_mul(pow_[h].back(), kBase[h]));
        ipow_[h].push_back(mod_mul(ipow_[h].back(), invBase_[h]));
      }
    }
  }

  void push_letter(Letter c) {
    const std::size_t i = w_.size();
    ensure_pow(i + 1);
    w_.push_back(static_cast<char>(c));
    for (int h = 0; h < 2; ++h) {
      A_[h].push_back(mod_add(A_[h].back(), mod_mul(u64{c} + 1, pow_[h][i])));
      for (std::size_t t = 0; t < thetas_.size(); ++t) {
        const u64 image = u64{thetas_[t].map(c)} + 1;
        D_[h][t].push_back(mod_add(D_[h][t].back(), mod_mul(image, ipow_[h][i])));
      }
    }
  }

  bool hash_pal(std::size_t a, std::size_t b, std::size_t t) {
    ensure_pow(a + b);  // exponent a+b-1
    for (int h = 0; h < 2; ++h) {
      const u64 lhs = mod_sub(A_[h][b], A_[h][a]);
      const u64 rhs = mod_mul(pow_[h][a + b - 1], mod_sub(D_[h][t][b], D_[h][t][a]));
      if (lhs != rhs) return false;
    }
    return true;
  }

  bool exact_pal(std::size_t a, std::size_t b, const Antimorphism& th) const {
    std::size_t i = a, j = b - 1;
    while (i <= j) {
      if (static_cast<Letter>(w_[i]) != th.map(static_cast<Letter>(w_[j]))) return false;
      if (i == j) break;
      ++i;
      --j;
    }
    return true;
  }

  // Longest theta-palindromic suffix length of the current word: scan from
  // the full length downward, stopping at the first verified hit.  The scan
  // tests (appended letters + 1) lengths per step, so a whole chain costs
  // O(final length) hash tests overall.
  std::size_t longest_pal_suffix(std::size_t t, const Antimorphism& th) {
    const std::size_t len = w_.size();
    for (std::size_t k = len; k >= 1; --k) {
      if (hash_pal(len - k, len, t) && exact_pal(len - k, len, th)) return k;
    }
    return 0;
  }

  void step() {
    const std::size_t n = stepIndex_ + 1;
    const Letter c = bi_.delta().item(n);
    const Antimorphism& th = bi_.theta().item(n);
    const std::size_t t = theta_index(th);
    internal_check(t < thetas_.size(), "chain builder: antimorphism not precollected");

    if (w_.size() + 1 > maxLen_) {
      throw ResourceLimitError("generated word would exceed the length cap of " +
                               std::to_string(maxLen_) + " letters at step " + std::to_string(n));
    }
    push_letter(c);

    const std::size_t len = w_.size();
    const std::size_t k = longest_pal_suffix(t, th);
    const std::size_t plen = len - k;
    if (len + plen > maxLen_) {
      throw ResourceLimitError("generated word would exceed the length cap of " +
                               std::to_string(maxLen_) + " letters at step " + std::to_string(n));
    }
    for (std::size_t i = plen; i-- > 0;) {
      push_letter(th.map(static_cast<Letter>(w_[i])));
    }

    ++stepIndex_;
    lengths_.push_back(w_.size());
    internal_check(lengths_.size() < 2 || w_.size() > lengths_[lengths_.size() - 2],
                   "chain builder: prefix lengths must strictly increase");
  }

  const DirectiveBiSequence& bi_;
  std::size_t maxLen_;
  std::size_t stepIndex_ = 0;
  Word w_;
  std::vector<std::size_t> lengths_;
  std::vector<Antimorphism> thetas_;

  u64 invBase_[2];
  std::vector<u64> pow_[2], ipow_[2];
  std::vector<u64> A_[2];
  std::vector<std::vector<u64>> D_[2];
};

}  // namespace

std::size_t longest_theta_palindromic_suffix_length(const Word& w, const Antimorphism& theta) {
  const std::size_t n = w.size();
  for (std::size_t k = n; k >= 1; --k) {
    bool ok = true;
    for (std::size_t i = 0; i < k; ++i) {
      const Letter x = static_cast<Letter>(w[n - k + i]);
      const Letter y = static_cast<Letter>(w[n - 1 - i]);
      if (x != theta.map(y)) {
        ok = false;
        break;
      }
      if (i >= k - 1 - i) break;
    }
    if (ok) return k;
  }
  return 0;
}

Word longest_theta_palindromic_suffix(const Word& w, const Antimorphism& theta) {
  return w.substr(w.size() - longest_theta_palindromic_suffix_length(w, theta));
}

Word theta_palindromic_closure(const Word& w, const Antimorphism& theta) {
  const std::size_t k = longest_theta_palindromic_suffix_length(w, theta);
  const Word p = w.substr(0, w.size() - k);
  return w + theta.apply(p);
}

std::size_t PrefixChain::length(std::size_t k) const {
  if (k == 0) return 0;
  if (k > lengths_.size()) {
    throw std::out_of_range("prefix chain has only " + std::to_string(lengths_.size()) + " steps");
  }
  return lengths_[k - 1];
}

Word PrefixChain::prefix(std::size_t k) const { return buffer_.substr(0, length(k)); }

std::size_t max_prefix_length() {
  static const std::size_t cap = [] {
    constexpr std::size_t kDefault = std::size_t{1} << 24;
    const char* env = std::getenv("PSEUDOWORD_MAX_PREFIX");
    if (env == nullptr || *env == '\0') return kDefault;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == nullptr || *end != '\0' || v == 0) return kDefault;
    return static_cast<std::size_t>(v);
  }();
  return cap;
}

PrefixChain generate_chain(const DirectiveBiSequence& bi, std::size_t n, std::size_t maxLen) {
  if (maxLen == 0) maxLen = max_prefix_length();
  ChainBuilder builder(bi, maxLen);
  builder.run_steps(n);
  return PrefixChain(bi, builder.take_word(), builder.take_lengths());
}

Word word_prefix(const DirectiveBiSequence& bi, std::size_t len, std::size_t maxLen) {
  if (maxLen == 0) maxLen = max_prefix_length();
  if (len > maxLen) {
    throw ResourceLimitError("requested prefix of " + std::to_string(len) +
                             " letters exceeds the length cap of " + std::to_string(maxLen));
  }
  if (len == 0) return Word{};
  // One closure step at most doubles the word, so the last step cannot
  // overshoot 2*len; the cap below never fires for a legitimate request.
  ChainBuilder builder(bi, 2 * len + 4);
  builder.run_until_length(len);
  return builder.word().substr(0, len);
}

}  // namespace pseudoword
