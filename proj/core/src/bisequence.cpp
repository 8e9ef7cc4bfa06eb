#include "pseudoword/bisequence.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "pseudoword/errors.hpp"

namespace pseudoword {

DirectiveBiSequence::DirectiveBiSequence(Alphabet alphabet,
                                         EventuallyPeriodicSeq<Letter> delta,
                                         EventuallyPeriodicSeq<Antimorphism> theta)
    : alphabet_(std::move(alphabet)), delta_(std::move(delta)), theta_(std::move(theta)) {
  auto checkLetters = [&](const std::vector<Letter>& part) {
    for (Letter a : part) {
      if (!alphabet_.contains(a)) {
        throw std::invalid_argument("directive letter outside the alphabet");
      }
    }
  };
  checkLetters(delta_.preamble());
  checkLetters(delta_.cycle());
  auto checkThetas = [&](const std::vector<Antimorphism>& part) {
    for (const Antimorphism& t : part) {
      if (t.alphabet_size() != alphabet_.size()) {
        throw std::invalid_argument("antimorphism '" + t.name() +
                                    "' acts on a different alphabet size");
      }
    }
  };
  checkThetas(theta_.preamble());
  checkThetas(theta_.cycle());
}

EventuallyPeriodicSeq<BiElement> DirectiveBiSequence::paired() const {
  const std::size_t preLen = std::max(delta_.preamble().size(), theta_.preamble().size());
  const auto d = delta_.padded_to(preLen);
  const auto t = theta_.padded_to(preLen);
  const std::size_t cycLen = lcm_size(d.cycle().size(), t.cycle().size());
  const auto dc = d.cycle_repeated_to(cycLen);
  const auto tc = t.cycle_repeated_to(cycLen);

  std::vector<BiElement> pre;
  pre.reserve(preLen);
  for (std::size_t i = 0; i < preLen; ++i) {
    pre.push_back(BiElement{dc.preamble()[i], tc.preamble()[i]});
  }
  std::vector<BiElement> cyc;
  cyc.reserve(cycLen);
  for (std::size_t i = 0; i < cycLen; ++i) {
    cyc.push_back(BiElement{dc.cycle()[i], tc.cycle()[i]});
  }
  return EventuallyPeriodicSeq<BiElement>(std::move(pre), std::move(cyc));
}

DirectiveBiSequence DirectiveBiSequence::from_paired(
    const Alphabet& alphabet, const EventuallyPeriodicSeq<BiElement>& paired) {
  std::vector<Letter> dPre, dCyc;
  std::vector<Antimorphism> tPre, tCyc;
  for (const BiElement& e : paired.preamble()) {
    dPre.push_back(e.letter);
    tPre.push_back(e.theta);
  }
  for (const BiElement& e : paired.cycle()) {
    dCyc.push_back(e.letter);
    tCyc.push_back(e.theta);
  }
  EventuallyPeriodicSeq<Letter> delta(std::move(dPre), std::move(dCyc));
  EventuallyPeriodicSeq<Antimorphism> theta(std::move(tPre), std::move(tCyc));
  return DirectiveBiSequence(alphabet, delta.canonical(), theta.canonical());
}

std::size_t DirectiveBiSequence::tail_start() const {
  return std::max(delta_.preamble().size(), theta_.preamble().size()) + 1;
}

std::vector<TailPair> DirectiveBiSequence::tail_pairs() const {
  const std::size_t start = tail_start();
  const std::size_t span = lcm_size(delta_.cycle().size(), theta_.cycle().size());
  std::set<TailPair> pairs;
  for (std::size_t n = start; n < start + span; ++n) {
    pairs.insert(TailPair{theta_.item(n), delta_.item(n + 1)});
  }
  return std::vector<TailPair>(pairs.begin(), pairs.end());
}

bool DirectiveBiSequence::same_bisequence(const DirectiveBiSequence& other) const {
  if (!(alphabet_ == other.alphabet_)) return false;
  return paired().same_sequence(other.paired());
}

DirectiveBiSequence DirectiveBiSequence::tracks_canonical() const {
  return DirectiveBiSequence(alphabet_, delta_.canonical(), theta_.canonical());
}

AntimorphismRegistry::AntimorphismRegistry(const Alphabet& alphabet) : alphabet_(alphabet) {}

void AntimorphismRegistry::declare(const Antimorphism& theta) {
  if (theta.alphabet_size() != alphabet_.size()) {
    throw std::invalid_argument("antimorphism '" + theta.name() +
                                "' does not act on this alphabet");
  }
  if (byName_.count(theta.name()) != 0) {
    throw std::invalid_argument("antimorphism name '" + theta.name() + "' already declared");
  }
  byName_.emplace(theta.name(), theta);
  byLength_.push_back(theta.name());
  std::sort(byLength_.begin(), byLength_.end(), [](const std::string& a, const std::string& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
}

bool AntimorphismRegistry::has(const std::string& name) const { return byName_.count(name) != 0; }

const Antimorphism& AntimorphismRegistry::get(const std::string& name) const {
  auto it = byName_.find(name);
  if (it == byName_.end()) {
    throw std::invalid_argument("unknown antimorphism '" + name + "'");
  }
  return it->second;
}

AntimorphismRegistry builtin_registry(const Alphabet& alphabet) {
  AntimorphismRegistry reg(alphabet);
  reg.declare(reversal(alphabet.size()));
  if (alphabet.size() == 2) {
    reg.declare(binary_exchange());
  } else if (alphabet.size() == 3) {
    reg.declare(ternary_exchange(0));
    reg.declare(ternary_exchange(1));
    reg.declare(ternary_exchange(2));
  }
  return reg;
}

Alphabet parse_alphabet(const std::string& text) {
  if (text.empty()) throw ParseError("empty alphabet", 0);
  bool allDigits = true;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      allDigits = false;
      break;
    }
  }
  if (allDigits && text.size() <= 2) {
    const int size = std::stoi(text);
    if (size < 2 || size > 10) {
      throw ParseError("alphabet size must be between 2 and 10", 0);
    }
    return Alphabet(size);
  }
  try {
    return Alphabet(text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

Antimorphism parse_antimorphism_declaration(const std::string& text, const Alphabet& alphabet) {
  const std::size_t colon = text.find(':');
  if (colon == std::string::npos) {
    throw ParseError("antimorphism declaration needs NAME:maps", text.size());
  }
  const std::string name = text.substr(0, colon);
  if (name.empty()) throw ParseError("antimorphism declaration: empty name", 0);
  for (std::size_t i = 0; i < name.size(); ++i) {
    const char c = name[i];
    if (c <= ' ' || c == '(' || c == ')' || c == ':' || c == ',' || c == '>') {
      throw ParseError("antimorphism name contains an invalid character", i);
    }
  }

  const int d = alphabet.size();
  std::vector<int> perm(static_cast<std::size_t>(d), -1);
  std::size_t pos = colon + 1;
  while (pos < text.size()) {
    // entry: GLYPH '>' GLYPH, entries separated by ','
    if (pos + 2 >= text.size()) throw ParseError("incomplete mapping entry", pos);
    const int from = alphabet.letter_of(text[pos]);
    if (from < 0) throw ParseError("mapping source is not an alphabet glyph", pos);
    if (text[pos + 1] != '>') throw ParseError("expected '>' in mapping entry", pos + 1);
    const int to = alphabet.letter_of(text[pos + 2]);
    if (to < 0) throw ParseError("mapping target is not an alphabet glyph", pos + 2);
    if (perm[static_cast<std::size_t>(from)] != -1) {
      throw ParseError("duplicate mapping for one letter", pos);
    }
    perm[static_cast<std::size_t>(from)] = to;
    pos += 3;
    if (pos < text.size()) {
      if (text[pos] != ',') throw ParseError("expected ',' between mapping entries", pos);
      ++pos;
      if (pos == text.size()) throw ParseError("trailing ',' in mapping list", pos - 1);
    }
  }
  std::vector<Letter> letters;
  letters.reserve(perm.size());
  for (std::size_t a = 0; a < perm.size(); ++a) {
    if (perm[a] == -1) {
      throw ParseError("mapping does not cover letter '" + std::string(1, alphabet.glyph(static_cast<Letter>(a))) + "'",
                       text.size());
    }
    letters.push_back(static_cast<Letter>(perm[a]));
  }
  try {
    return Antimorphism(name, std::move(letters));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), colon + 1);
  }
}

namespace {

// Shared PREAMBLE '(' CYCLE ')' scaffold: splits the text and hands each
// token region to `scan`, which consumes one token at `pos` (after spaces)
// and appends to `out`.
template <typename T, typename Scan>
EventuallyPeriodicSeq<T> parse_track(const std::string& text, Scan scan) {
  std::vector<T> pre, cyc;
  std::vector<T>* target = &pre;
  bool sawOpen = false, sawClose = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (c == '(') {
      if (sawOpen) throw ParseError("unexpected second '('", pos);
      sawOpen = true;
      target = &cyc;
      ++pos;
      continue;
    }
    if (c == ')') {
      if (!sawOpen) throw ParseError("')' without '('", pos);
      if (sawClose) throw ParseError("unexpected second ')'", pos);
      sawClose = true;
      ++pos;
      continue;
    }
    if (sawClose) throw ParseError("trailing input after ')'", pos);
    scan(text, pos, *target);
  }
  if (!sawOpen) throw ParseError("missing '(' cycle marker", text.size());
  if (!sawClose) throw ParseError("missing ')' after cycle", text.size());
  if (cyc.empty()) throw ParseError("cycle must be nonempty", text.size());
  return EventuallyPeriodicSeq<T>(std::move(pre), std::move(cyc));
}

}  // namespace

EventuallyPeriodicSeq<Letter> parse_letter_track(const std::string& text, const Alphabet& alphabet) {
  return parse_track<Letter>(text, [&](const std::string& s, std::size_t& pos, std::vector<Letter>& out) {
    const int a = alphabet.letter_of(s[pos]);
    if (a < 0) {
      throw ParseError(std::string("'") + s[pos] + "' is not an alphabet glyph", pos);
    }
    out.push_back(static_cast<Letter>(a));
    ++pos;
  });
}

EventuallyPeriodicSeq<Antimorphism> parse_antimorphism_track(const std::string& text,
                                                             const AntimorphismRegistry& registry) {
  return parse_track<Antimorphism>(
      text, [&](const std::string& s, std::size_t& pos, std::vector<Antimorphism>& out) {
        for (const std::string& name : registry.names_longest_first()) {
          if (s.compare(pos, name.size(), name) == 0) {
            out.push_back(registry.get(name));
            pos += name.size();
            return;
          }
        }
        throw ParseError("no antimorphism name matches here", pos);
      });
}

std::string format_letter_track(const EventuallyPeriodicSeq<Letter>& seq, const Alphabet& alphabet) {
  std::string out;
  for (Letter a : seq.preamble()) out.push_back(alphabet.glyph(a));
  out.push_back('(');
  for (Letter a : seq.cycle()) out.push_back(alphabet.glyph(a));
  out.push_back(')');
  return out;
}

std::string format_antimorphism_track(const EventuallyPeriodicSeq<Antimorphism>& seq) {
  bool allShort = true;
  for (const Antimorphism& t : seq.preamble()) allShort = allShort && t.name().size() == 1;
  for (const Antimorphism& t : seq.cycle()) allShort = allShort && t.name().size() == 1;
  const char* sep = allShort ? "" : " ";

  std::string out;
  bool first = true;
  for (const Antimorphism& t : seq.preamble()) {
    if (!first) out += sep;
    out += t.name();
    first = false;
  }
  out += '(';
  first = true;
  for (const Antimorphism& t : seq.cycle()) {
    if (!first) out += sep;
    out += t.name();
    first = false;
  }
  out += ')';
  return out;
}

}  // namespace pseudoword
