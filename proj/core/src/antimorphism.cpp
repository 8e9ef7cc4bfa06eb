#include "pseudoword/antimorphism.hpp"

#include <algorithm>
#include <stdexcept>

namespace pseudoword {

Antimorphism::Antimorphism(std::string name, std::vector<Letter> perm)
    : name_(std::move(name)), perm_(std::move(perm)) {
  const std::size_t d = perm_.size();
  if (d < 2) {
    throw std::invalid_argument("antimorphism permutation needs at least two letters");
  }
  std::vector<bool> seen(d, false);
  for (Letter image : perm_) {
    if (image >= d) {
      throw std::invalid_argument("antimorphism '" + name_ + "': image out of range");
    }
    if (seen[image]) {
      throw std::invalid_argument("antimorphism '" + name_ + "': map is not a permutation");
    }
    seen[image] = true;
  }
  for (std::size_t a = 0; a < d; ++a) {
    if (perm_[perm_[a]] != a) {
      throw std::invalid_argument("antimorphism '" + name_ + "': permutation is not an involution");
    }
  }
}

Letter Antimorphism::map(Letter a) const {
  if (a >= perm_.size()) {
    throw std::invalid_argument("antimorphism '" + name_ + "': letter out of range");
  }
  return perm_[a];
}

bool Antimorphism::fixes_letters() const {
  for (std::size_t a = 0; a < perm_.size(); ++a) {
    if (perm_[a] != a) return false;
  }
  return true;
}

Word Antimorphism::apply(const Word& w) const {
  Word out;
  out.resize(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    out[w.size() - 1 - i] = static_cast<char>(map(static_cast<Letter>(w[i])));
  }
  return out;
}

bool Antimorphism::is_palindrome(const Word& w) const {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (static_cast<Letter>(w[i]) != map(static_cast<Letter>(w[n - 1 - i]))) return false;
    if (i >= n - 1 - i) break;
  }
  return true;
}

Antimorphism reversal(int d) {
  std::vector<Letter> perm(static_cast<std::size_t>(d));
  for (int a = 0; a < d; ++a) perm[static_cast<std::size_t>(a)] = static_cast<Letter>(a);
  return Antimorphism("R", std::move(perm));
}

Antimorphism binary_exchange() { return Antimorphism("E", {1, 0}); }

Antimorphism ternary_exchange(Letter fixed) {
  if (fixed > 2) {
    throw std::invalid_argument("ternary exchange antimorphism: fixed letter must be 0, 1 or 2");
  }
  std::vector<Letter> perm = {0, 1, 2};
  const Letter x = (fixed + 1) % 3;
  const Letter y = (fixed + 2) % 3;
  std::swap(perm[x], perm[y]);
  return Antimorphism("E" + std::to_string(int(fixed)), std::move(perm));
}

}  // namespace pseudoword
