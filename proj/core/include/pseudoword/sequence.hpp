// Eventually periodic infinite sequences, presented as a finite preamble
// followed by a nonempty cycle repeated forever.
//
// Presentations are not unique; canonical() computes the unique minimal one
// (primitive cycle, shortest preamble).  Two presentations describe the same
// infinite sequence iff their canonical forms are equal.
//
// Positions are 1-based throughout: item(1) is the first element.

#pragma once

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pseudoword {

template <typename T>
class EventuallyPeriodicSeq {
 public:
  EventuallyPeriodicSeq(std::vector<T> preamble, std::vector<T> cycle)
      : preamble_(std::move(preamble)), cycle_(std::move(cycle)) {
    if (cycle_.empty()) {
      throw std::invalid_argument("eventually periodic sequence: cycle must be nonempty");
    }
  }

  const std::vector<T>& preamble() const { return preamble_; }
  const std::vector<T>& cycle() const { return cycle_; }

  // 1-based access; item(0) is rejected.
  const T& item(std::size_t n) const {
    if (n == 0) {
      throw std::out_of_range("sequence positions are 1-based; item(0) is invalid");
    }
    const std::size_t i = n - 1;
    if (i < preamble_.size()) return preamble_[i];
    return cycle_[(i - preamble_.size()) % cycle_.size()];
  }

  // First n items as a vector.
  std::vector<T> unroll(std::size_t n) const {
    std::vector<T> out;
    out.reserve(n);
    for (std::size_t k = 1; k <= n; ++k) out.push_back(item(k));
    return out;
  }

  // Equivalent presentation whose preamble has length exactly preLen
  // (>= the current preamble length): cycle items are absorbed into the
  // preamble and the cycle is rotated to match.
  EventuallyPeriodicSeq padded_to(std::size_t preLen) const {
    if (preLen < preamble_.size()) {
      throw std::invalid_argument("padded_to: target preamble is shorter than current");
    }
    std::vector<T> pre = preamble_;
    std::vector<T> cyc = cycle_;
    while (pre.size() < preLen) {
      pre.push_back(cyc.front());
      // rotate left by one
      cyc.push_back(cyc.front());
      cyc.erase(cyc.begin());
    }
    return EventuallyPeriodicSeq(std::move(pre), std::move(cyc));
  }

  // Equivalent presentation whose cycle is repeated to length exactly
  // cycLen (a multiple of the current cycle length).
  EventuallyPeriodicSeq cycle_repeated_to(std::size_t cycLen) const {
    if (cycLen == 0 || cycLen % cycle_.size() != 0) {
      throw std::invalid_argument("cycle_repeated_to: target is not a multiple of the cycle length");
    }
    std::vector<T> cyc;
    cyc.reserve(cycLen);
    while (cyc.size() < cycLen) cyc.insert(cyc.end(), cycle_.begin(), cycle_.end());
    return EventuallyPeriodicSeq(preamble_, std::move(cyc));
  }

  // Unique minimal presentation: the cycle is primitive (not a proper power)
  // and no preamble suffix could be absorbed into the cycle.
  EventuallyPeriodicSeq canonical() const {
    std::vector<T> cyc = primitive_root(cycle_);
    std::vector<T> pre = preamble_;
    while (!pre.empty() && pre.back() == cyc.back()) {
      pre.pop_back();
      // rotate right by one
      cyc.insert(cyc.begin(), cyc.back());
      cyc.pop_back();
    }
    return EventuallyPeriodicSeq(std::move(pre), std::move(cyc));
  }

  // Whether the two presentations denote the same infinite sequence.
  bool same_sequence(const EventuallyPeriodicSeq& other) const {
    const EventuallyPeriodicSeq a = canonical();
    const EventuallyPeriodicSeq b = other.canonical();
    return a.preamble_ == b.preamble_ && a.cycle_ == b.cycle_;
  }

  friend bool operator==(const EventuallyPeriodicSeq& x, const EventuallyPeriodicSeq& y) {
    return x.preamble_ == y.preamble_ && x.cycle_ == y.cycle_;
  }

 private:
  static std::vector<T> primitive_root(const std::vector<T>& cyc) {
    const std::size_t n = cyc.size();
    for (std::size_t len = 1; len <= n / 2; ++len) {
      if (n % len != 0) continue;
      bool ok = true;
      for (std::size_t i = len; i < n && ok; ++i) ok = cyc[i] == cyc[i - len];
      if (ok) return std::vector<T>(cyc.begin(), cyc.begin() + static_cast<std::ptrdiff_t>(len));
    }
    return cyc;
  }

  std::vector<T> preamble_;
  std::vector<T> cycle_;
};

// Least common multiple of two positive sizes.
inline std::size_t lcm_size(std::size_t a, std::size_t b) { return std::lcm(a, b); }

}  // namespace pseudoword
