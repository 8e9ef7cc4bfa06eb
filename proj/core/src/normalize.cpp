#include "pseudoword/normalize.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>

#include "pseudoword/closure.hpp"
#include "pseudoword/errors.hpp"
#include "pseudoword/oracle.hpp"

namespace pseudoword {

namespace {

std::string render_element(const BiElement& e, const Alphabet& alphabet) {
  return std::string(1, alphabet.glyph(e.letter)) + ":" + e.theta.name();
}

std::string render_elements(const std::vector<BiElement>& es, const Alphabet& alphabet) {
  std::string out;
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (i > 0) out += ' ';
    out += render_element(es[i], alphabet);
  }
  return out;
}

// Grow `head` by absorbing cycle elements (rotating the cycle) until it has
// at least `len` elements; the denoted infinite sequence is unchanged.
void absorb(std::vector<BiElement>& head, std::vector<BiElement>& cycle, std::size_t len) {
  while (head.size() < len) {
    head.push_back(cycle.front());
    std::rotate(cycle.begin(), cycle.begin() + 1, cycle.end());
  }
}

struct RuleMatch {
  const char* rule;
  std::vector<BiElement> replacement;
};

using RuleFn = std::function<std::optional<RuleMatch>(const BiElement&, const BiElement&,
                                                      const BiElement&)>;

std::string state_token(const BiElement& e) {
  std::string s(1, static_cast<char>('0' + e.letter));
  for (Letter img : e.theta.permutation()) s.push_back(static_cast<char>('0' + img));
  s.push_back('|');
  return s;
}

struct StreamOutcome {
  std::vector<BiElement> preamble;
  std::vector<BiElement> cycle;
  std::vector<RewriteStep> steps;
  std::size_t settled = 0;
};

// Stream the infinite sequence head + cycle^w through a three-element
// window, applying `rule` wherever it matches (a replacement is re-examined
// as the window slides).  The output is folded back into preamble + cycle by
// detecting a repeated machine state (cycle phase of the next pull plus
// window content); `elementKinds` bounds the number of distinct elements,
// giving a hard cap on the number of states.
StreamOutcome stream_rewrite(std::vector<BiElement> head, std::vector<BiElement> cycle,
                             const RuleFn& rule, std::size_t elementKinds) {
  StreamOutcome out;
  std::deque<BiElement> pending;
  std::size_t pulled = 0;

  const auto pull = [&] {
    if (pulled < head.size()) {
      pending.push_back(head[pulled]);
    } else {
      pending.push_back(cycle[(pulled - head.size()) % cycle.size()]);
    }
    ++pulled;
  };

  std::map<std::string, std::size_t> seen;
  const std::size_t cap =
      elementKinds * elementKinds * elementKinds * cycle.size() + head.size() + 64;
  std::size_t foldStart = 0;
  for (std::size_t scan = 0;; ++scan) {
    internal_check(scan <= cap, "streaming rewriter exceeded its state bound");
    while (pending.size() < 3) pull();

    if (pulled >= head.size()) {
      std::string key = std::to_string((pulled - head.size()) % cycle.size());
      key += '#';
      for (const BiElement& e : pending) key += state_token(e);
      auto [it, inserted] = seen.try_emplace(key, out.preamble.size());
      if (!inserted) {
        foldStart = it->second;
        break;
      }
    }

    if (auto m = rule(pending[0], pending[1], pending[2])) {
      RewriteStep step;
      step.rule = m->rule;
      step.position = out.preamble.size() + 1;
      step.before = {pending[0], pending[1], pending[2]};
      step.after = m->replacement;
      out.steps.push_back(std::move(step));
      pending.assign(m->replacement.begin(), m->replacement.end());
    }
    out.preamble.push_back(pending.front());
    pending.pop_front();
  }

  out.settled = out.preamble.size();
  out.cycle.assign(out.preamble.begin() + static_cast<std::ptrdiff_t>(foldStart),
                   out.preamble.end());
  out.preamble.erase(out.preamble.begin() + static_cast<std::ptrdiff_t>(foldStart),
                     out.preamble.end());
  internal_check(!out.cycle.empty(), "streaming rewriter folded an empty cycle");
  out.settled = foldStart + out.cycle.size();
  return out;
}

bool is_reversal(const BiElement& e) { return e.theta.fixes_letters(); }

// Binary factor rule: (a,t)(b,t')(b',t') -> (a,t)(b,t')(b',t)(b,t') for
// t' != t and b' != b.
std::optional<RuleMatch> binary_factor_rule(const BiElement& e1, const BiElement& e2,
                                            const BiElement& e3) {
  if (e2.theta == e1.theta) return std::nullopt;
  if (!(e3.theta == e2.theta)) return std::nullopt;
  if (e3.letter == e2.letter) return std::nullopt;
  return RuleMatch{"F", {e1, e2, BiElement{e3.letter, e1.theta}, e2}};
}

// Ternary factor rules; theta must exchange two letters (not fix all).
std::optional<RuleMatch> ternary_factor_rule(const BiElement& e1, const BiElement& e2,
                                             const BiElement& e3) {
  // (x,theta)(y,R)(z,R) -> (x,theta)(y,R)(z,theta)(y,R), theta(y) == z
  if (!is_reversal(e1) && is_reversal(e2) && is_reversal(e3) &&
      e1.theta.map(e2.letter) == e3.letter) {
    return RuleMatch{"T1", {e1, e2, BiElement{e3.letter, e1.theta}, e2}};
  }
  // (x,R)(y,theta)(z,theta) -> (x,R)(y,theta)(z,R)(y,theta), theta(y) == z
  if (is_reversal(e1) && !is_reversal(e2) && e2.theta == e3.theta &&
      e2.theta.map(e2.letter) == e3.letter) {
    return RuleMatch{"T2", {e1, e2, BiElement{e3.letter, e1.theta}, e2}};
  }
  return std::nullopt;
}

// One application of a binary prefix rule to head + cycle^w, in place.
// Returns the recorded step, or nullopt when no prefix rule matches.
std::optional<RewriteStep> apply_binary_prefix_rule(std::vector<BiElement>& head,
                                                    std::vector<BiElement>& cycle) {
  const std::size_t look = head.size() + cycle.size() + 3;
  absorb(head, cycle, look);

  const Antimorphism R2 = reversal(2);
  const Antimorphism E2 = binary_exchange();
  const Letter a = head[0].letter;
  const Letter b = static_cast<Letter>(1 - a);

  auto makeStep = [&](const char* rule, std::size_t pos, std::vector<BiElement> before,
                      std::vector<BiElement> after) {
    RewriteStep s;
    s.rule = rule;
    s.position = pos;
    s.before = std::move(before);
    s.after = std::move(after);
    return s;
  };

  // (a,R)(b,R) ... -> (a,R)(b,E)(a,R) ...
  if (is_reversal(head[0]) && is_reversal(head[1]) && head[1].letter == b) {
    const BiElement old = head[1];
    head[1] = BiElement{b, E2};
    head.insert(head.begin() + 2, BiElement{a, R2});
    return makeStep("P1", 2, {old}, {head[1], head[2]});
  }

  // Longest run of (a,R) from the front.
  std::size_t j = 0;
  while (j + 2 < look && head[j].letter == a && is_reversal(head[j])) ++j;

  // (a,R)^[i-1] (a,E) ... -> (a,R)^i (b,E) ...
  if (head[j].letter == a && head[j].theta == E2) {
    const BiElement old = head[j];
    head[j] = BiElement{a, R2};
    head.insert(head.begin() + static_cast<std::ptrdiff_t>(j) + 1, BiElement{b, E2});
    return makeStep("P2", j + 1, {old}, {head[j], head[j + 1]});
  }

  // (a,R)^i (b,E)(b,E) ... -> (a,R)^i (b,E)(b,R)(a,E) ...
  if (j >= 1 && head[j].letter == b && head[j].theta == E2 && head[j + 1].letter == b &&
      head[j + 1].theta == E2) {
    const BiElement old = head[j + 1];
    head[j + 1] = BiElement{b, R2};
    head.insert(head.begin() + static_cast<std::ptrdiff_t>(j) + 2, BiElement{a, E2});
    return makeStep("P3", j + 2, {old}, {head[j + 1], head[j + 2]});
  }

  return std::nullopt;
}

}  // namespace

std::string render_step(const RewriteStep& step, const Alphabet& alphabet) {
  return step.rule + ("@" + std::to_string(step.position)) + ": " +
         render_elements(step.before, alphabet) + " -> " + render_elements(step.after, alphabet);
}

std::string render_trace(const RewriteTrace& trace, const Alphabet& alphabet) {
  std::string out;
  for (const RewriteStep& s : trace.steps) {
    out += render_step(s, alphabet);
    out += '\n';
  }
  out += "settledPrefixLength: " + std::to_string(trace.settledPrefixLength) + "\n";
  return out;
}

NormalizationOutcome normalize_binary(const DirectiveBiSequence& bi) {
  if (bi.alphabet().size() != 2) {
    throw std::invalid_argument("normalize_binary: the alphabet must have exactly two letters");
  }
  const auto paired = bi.paired();
  std::vector<BiElement> head = paired.preamble();
  std::vector<BiElement> cycle = paired.cycle();

  RewriteTrace trace;

  // Phase 1: prefix rules to fixpoint.
  const std::size_t prefixCap = 64 + head.size() + cycle.size();
  for (std::size_t round = 0;; ++round) {
    internal_check(round <= prefixCap, "binary prefix rewriting did not reach a fixpoint");
    auto step = apply_binary_prefix_rule(head, cycle);
    if (!step) break;
    trace.steps.push_back(std::move(*step));
  }

  // Phase 2: one streaming factor pass (4 element kinds over two letters
  // and two antimorphisms).
  StreamOutcome streamed = stream_rewrite(std::move(head), std::move(cycle), binary_factor_rule, 4);
  for (RewriteStep& s : streamed.steps) trace.steps.push_back(std::move(s));
  trace.settledPrefixLength = streamed.settled;

  EventuallyPeriodicSeq<BiElement> folded(std::move(streamed.preamble), std::move(streamed.cycle));
  NormalizationOutcome out{DirectiveBiSequence::from_paired(bi.alphabet(), folded),
                           std::move(trace), false};
  out.changed = !out.trace.steps.empty();
  return out;
}

DirectiveBiSequence ternary_rewrite_step(const DirectiveBiSequence& bi, std::size_t position) {
  if (bi.alphabet().size() != 3) {
    throw std::invalid_argument("ternary_rewrite_step: the alphabet must have three letters");
  }
  if (position == 0) {
    throw std::invalid_argument("ternary_rewrite_step: positions are 1-based");
  }
  const auto paired = bi.paired();
  std::vector<BiElement> head = paired.preamble();
  std::vector<BiElement> cycle = paired.cycle();
  absorb(head, cycle, position + 2);

  const std::size_t i = position - 1;
  const auto match = ternary_factor_rule(head[i], head[i + 1], head[i + 2]);
  if (!match) {
    throw std::invalid_argument("ternary_rewrite_step: no rewrite rule matches at position " +
                                std::to_string(position));
  }
  head[i + 2] = match->replacement[2];
  head.insert(head.begin() + static_cast<std::ptrdiff_t>(i) + 3, match->replacement[3]);
  return DirectiveBiSequence::from_paired(
      bi.alphabet(), EventuallyPeriodicSeq<BiElement>(std::move(head), std::move(cycle)));
}

NormalizationOutcome ternary_exhaust_rewrites(const DirectiveBiSequence& bi) {
  if (bi.alphabet().size() != 3) {
    throw std::invalid_argument("ternary_exhaust_rewrites: the alphabet must have three letters");
  }
  const auto paired = bi.paired();

  // Element kinds: three letters times at most four distinct antimorphisms.
  std::set<std::vector<Letter>> perms;
  for (const BiElement& e : paired.preamble()) perms.insert(e.theta.permutation());
  for (const BiElement& e : paired.cycle()) perms.insert(e.theta.permutation());
  const std::size_t kinds = 3 * (perms.size() + 1);

  StreamOutcome streamed =
      stream_rewrite(paired.preamble(), paired.cycle(), ternary_factor_rule, kinds);

  RewriteTrace trace;
  trace.steps = std::move(streamed.steps);
  trace.settledPrefixLength = streamed.settled;

  EventuallyPeriodicSeq<BiElement> folded(std::move(streamed.preamble), std::move(streamed.cycle));
  NormalizationOutcome out{DirectiveBiSequence::from_paired(bi.alphabet(), folded),
                           std::move(trace), false};
  out.changed = !out.trace.steps.empty();
  return out;
}

DirectiveBiSequence ternary_two_antimorphism_normal_form(const DirectiveBiSequence& bi) {
  if (bi.alphabet().size() != 3) {
    throw std::invalid_argument(
        "ternary_two_antimorphism_normal_form: the alphabet must have three letters");
  }
  const auto pairs = bi.tail_pairs();
  if (pairs.size() != 2) {
    throw std::invalid_argument(
        "ternary_two_antimorphism_normal_form: the tail must use exactly two (antimorphism, "
        "letter) pairs");
  }
  const bool firstIsR = pairs[0].theta.fixes_letters();
  const TailPair& rPair = firstIsR ? pairs[0] : pairs[1];
  const TailPair& xPair = firstIsR ? pairs[1] : pairs[0];
  if (!rPair.theta.fixes_letters() || xPair.theta.fixes_letters()) {
    throw std::invalid_argument(
        "ternary_two_antimorphism_normal_form: the tail must pair reversal with one exchange "
        "antimorphism");
  }
  const Antimorphism& th = xPair.theta;
  const Letter a = xPair.letter;
  const Letter b = rPair.letter;
  if (th.map(a) != b) {
    throw std::invalid_argument(
        "ternary_two_antimorphism_normal_form: tail pairs do not satisfy theta(a) == b");
  }

  const auto& delta = bi.delta();
  const auto& theta = bi.theta();
  const auto conforms = [&](std::size_t n) {
    const Antimorphism& t = theta.item(n);
    const Letter next = delta.item(n + 1);
    if (t.fixes_letters()) return next == b;
    return t == th && next == a;
  };

  // Extend the conforming tail backward as far as possible.
  std::size_t m = bi.tail_start();
  while (m > 1 && conforms(m - 1)) --m;

  // First R followed by theta at or after m.
  const std::size_t span = lcm_size(delta.cycle().size(), theta.cycle().size());
  std::size_t l = 0;
  for (std::size_t n = m; n <= m + 2 * span + 2; ++n) {
    if (theta.item(n).fixes_letters() && theta.item(n + 1) == th) {
      l = n;
      break;
    }
  }
  internal_check(l != 0, "two-antimorphism normal form: no R->theta transition in the tail");

  std::vector<Letter> vPre;
  std::vector<Antimorphism> sPre;
  for (std::size_t n = 1; n <= l + 1; ++n) {
    vPre.push_back(delta.item(n));
    sPre.push_back(theta.item(n));
  }
  EventuallyPeriodicSeq<Letter> newDelta(std::move(vPre), {a, b});
  EventuallyPeriodicSeq<Antimorphism> newTheta(std::move(sPre), {reversal(3), th});
  return DirectiveBiSequence(bi.alphabet(), std::move(newDelta), std::move(newTheta));
}

bool is_normalized_empirical(const DirectiveBiSequence& bi, std::size_t depth,
                             std::string* detail) {
  if (depth < 2) {
    throw std::invalid_argument("is_normalized_empirical: depth must be at least 2");
  }
  const PrefixChain chain = generate_chain(bi, depth);
  const Word& w = chain.buffer();
  const std::size_t bound = chain.length(depth - 1);

  std::set<std::size_t> chainLengths;
  for (std::size_t k = 1; k <= depth; ++k) chainLengths.insert(chain.length(k));

  std::vector<Antimorphism> checkSet;
  if (bi.alphabet().size() == 2) {
    checkSet = {reversal(2), binary_exchange()};
  } else {
    for (const Antimorphism& t : bi.theta().preamble()) {
      if (std::find(checkSet.begin(), checkSet.end(), t) == checkSet.end()) checkSet.push_back(t);
    }
    for (const Antimorphism& t : bi.theta().cycle()) {
      if (std::find(checkSet.begin(), checkSet.end(), t) == checkSet.end()) checkSet.push_back(t);
    }
  }

  for (const Antimorphism& th : checkSet) {
    for (std::size_t l : theta_palindromic_prefix_lengths(w, th)) {
      if (l > bound) break;
      if (chainLengths.count(l) == 0) {
        if (detail != nullptr) {
          *detail = "prefix of length " + std::to_string(l) + " is a " + th.name() +
                    "-palindrome but is not in the chain";
        }
        return false;
      }
    }
  }
  return true;
}

}  // namespace pseudoword
