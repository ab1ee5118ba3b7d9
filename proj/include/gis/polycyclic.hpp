#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gis/element.hpp"
#include "gis/error.hpp"
#include "gis/graph.hpp"
#include "gis/path.hpp"

namespace gis {

//! Ordered finite label set for a polycyclic monoid P_lambda.  The empty
//! alphabet is allowed: P_0 degenerates to the two-element semilattice
//! {0, 1} under min.
class Alphabet;
using AlphabetPtr = std::shared_ptr<const Alphabet>;

class Alphabet {
 public:
  static AlphabetPtr make(std::vector<std::string> labels) {
    return AlphabetPtr(new Alphabet(std::move(labels)));
  }

  std::vector<std::string> const& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }

  bool has(std::string const& label) const {
    return std::binary_search(labels_.begin(), labels_.end(), label);
  }

  void require(std::string const& label) const {
    if (!has(label)) {
      throw Error("unknown label \"" + label + "\"");
    }
  }

  friend bool operator==(Alphabet const& a, Alphabet const& b) {
    return a.labels_ == b.labels_;
  }

 private:
  explicit Alphabet(std::vector<std::string> labels)
      : labels_(std::move(labels)) {
    std::sort(labels_.begin(), labels_.end());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i].empty()) {
        throw Error("empty label");
      }
      if (i > 0 && labels_[i] == labels_[i - 1]) {
        throw Error("duplicate label \"" + labels_[i] + "\"");
      }
    }
  }

  std::vector<std::string> labels_;
};

namespace detail {

inline void require_same_alphabet(AlphabetPtr const& a, AlphabetPtr const& b) {
  if (a != b && !(*a == *b)) {
    throw Error("operands belong to different alphabets");
  }
}

}  // namespace detail

//! Zero, or a canonical pair (pos, neg) of label words denoting
//! pos . neg^{-1}; the pair of empty words is the identity 1.
class PolyElement {
 public:
  using Word = std::vector<std::string>;

  static PolyElement zero(AlphabetPtr alphabet) {
    return PolyElement(std::move(alphabet));
  }

  static PolyElement identity(AlphabetPtr alphabet) {
    return make(std::move(alphabet), {}, {});
  }

  static PolyElement make(AlphabetPtr alphabet, Word pos, Word neg) {
    for (auto const* word : {&pos, &neg}) {
      for (auto const& label : *word) {
        alphabet->require(label);
      }
    }
    return PolyElement(std::move(alphabet),
                       std::make_pair(std::move(pos), std::move(neg)));
  }

  AlphabetPtr const& alphabet() const { return alphabet_; }
  bool is_zero() const { return !words_.has_value(); }
  bool is_identity() const {
    return words_ && words_->first.empty() && words_->second.empty();
  }

  Word const& pos() const { return nonzero().first; }
  Word const& neg() const { return nonzero().second; }

  friend bool operator==(PolyElement const& a, PolyElement const& b) {
    if (a.alphabet_ != b.alphabet_ && !(*a.alphabet_ == *b.alphabet_)) {
      return false;
    }
    return a.words_ == b.words_;
  }

 private:
  explicit PolyElement(AlphabetPtr alphabet,
                       std::optional<std::pair<Word, Word>> words = std::nullopt)
      : alphabet_(std::move(alphabet)), words_(std::move(words)) {}

  std::pair<Word, Word> const& nonzero() const {
    if (!words_) {
      throw Error("zero element has no word components");
    }
    return *words_;
  }

  AlphabetPtr alphabet_;
  std::optional<std::pair<Word, Word>> words_;
};

namespace detail {

//! If long_word = short_word + w, returns w.
inline std::optional<PolyElement::Word> strip_word_prefix(
    PolyElement::Word const& short_word, PolyElement::Word const& long_word) {
  if (short_word.size() > long_word.size()) {
    return std::nullopt;
  }
  for (std::size_t i = 0; i < short_word.size(); ++i) {
    if (short_word[i] != long_word[i]) {
      return std::nullopt;
    }
  }
  return PolyElement::Word(long_word.begin() +
                               static_cast<std::ptrdiff_t>(short_word.size()),
                           long_word.end());
}

inline PolyElement::Word word_concat(PolyElement::Word a,
                                     PolyElement::Word const& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace detail

//! Same prefix-cancellation rule as the path algebra, with words in place
//! of paths.
inline PolyElement poly_multiply(PolyElement const& x, PolyElement const& y) {
  detail::require_same_alphabet(x.alphabet(), y.alphabet());
  if (x.is_zero() || y.is_zero()) {
    return PolyElement::zero(x.alphabet());
  }
  if (auto w = detail::strip_word_prefix(x.neg(), y.pos())) {
    return PolyElement::make(x.alphabet(),
                             detail::word_concat(x.pos(), *w), y.neg());
  }
  if (auto w = detail::strip_word_prefix(y.pos(), x.neg())) {
    return PolyElement::make(x.alphabet(), x.pos(),
                             detail::word_concat(y.neg(), *w));
  }
  return PolyElement::zero(x.alphabet());
}

inline PolyElement poly_inverse(PolyElement const& x) {
  if (x.is_zero()) {
    return x;
  }
  return PolyElement::make(x.alphabet(), x.neg(), x.pos());
}

//! One token of a generator word: a generator, its inverse, or one of the
//! constants 1 and 0.
struct GenToken {
  enum class Kind { Positive, Inverse, One, Zero };

  Kind kind;
  std::string label;  // empty for the constants

  static GenToken positive(std::string label) {
    return GenToken{Kind::Positive, std::move(label)};
  }
  static GenToken inverse(std::string label) {
    return GenToken{Kind::Inverse, std::move(label)};
  }
  static GenToken one() { return GenToken{Kind::One, {}}; }
  static GenToken zero() { return GenToken{Kind::Zero, {}}; }

  friend bool operator==(GenToken const&, GenToken const&) = default;
};

using GeneratorWord = std::vector<GenToken>;

//! Reduces a generator word to its normal form under the defining relations
//!   a^{-1} a = 1,     b^{-1} a = 0  (b != a).
//! A single left-to-right pass with a stack suffices: the only reducible
//! pattern is an inverse immediately followed by a generator, and each
//! arriving generator either cancels the inverse on top of the stack,
//! annihilates the whole word, or lands on a generator and is inert.  The
//! rewriting system is length-reducing and confluent, so the strategy does
//! not matter; the tests cross-check leftmost against rightmost rewriting.
inline PolyElement poly_reduce(AlphabetPtr const& alphabet,
                               GeneratorWord const& word) {
  std::vector<GenToken> stack;
  for (auto const& token : word) {
    switch (token.kind) {
      case GenToken::Kind::Zero:
        return PolyElement::zero(alphabet);
      case GenToken::Kind::One:
        break;
      case GenToken::Kind::Inverse:
        alphabet->require(token.label);
        stack.push_back(token);
        break;
      case GenToken::Kind::Positive: {
        alphabet->require(token.label);
        if (!stack.empty() && stack.back().kind == GenToken::Kind::Inverse) {
          if (stack.back().label != token.label) {
            return PolyElement::zero(alphabet);
          }
          stack.pop_back();  // a^{-1} a = 1
        } else {
          stack.push_back(token);
        }
        break;
      }
    }
  }
  // the stack now reads  p_... p_...  q^{-1}_... q^{-1}_...; as a canonical
  // pair the inverse run spells neg reversed
  PolyElement::Word pos, neg;
  for (auto const& token : stack) {
    if (token.kind == GenToken::Kind::Positive) {
      pos.push_back(token.label);
    } else {
      neg.push_back(token.label);
    }
  }
  std::reverse(neg.begin(), neg.end());
  return PolyElement::make(alphabet, std::move(pos), std::move(neg));
}

//! Word syntax: tokens separated by spaces; "p" is a generator, "p'" its
//! inverse, "1" and "0" the constants.
inline GeneratorWord parse_generator_word(AlphabetPtr const& alphabet,
                                          std::string_view text) {
  GeneratorWord word;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && text[pos] == ' ') {
      ++pos;
    }
    if (pos == text.size()) {
      break;
    }
    std::size_t end = text.find(' ', pos);
    std::string token(text.substr(
        pos, end == std::string_view::npos ? end : end - pos));
    pos = end == std::string_view::npos ? text.size() : end + 1;
    if (token == "0") {
      word.push_back(GenToken::zero());
    } else if (token == "1") {
      word.push_back(GenToken::one());
    } else if (token.size() > 1 && token.back() == '\'') {
      std::string label = token.substr(0, token.size() - 1);
      alphabet->require(label);
      word.push_back(GenToken::inverse(std::move(label)));
    } else {
      alphabet->require(token);
      word.push_back(GenToken::positive(token));
    }
  }
  return word;
}

//! Canonical rendering: generators of pos, then the inverses of neg in
//! reverse order; "1" for the identity, "0" for zero.
inline std::string to_literal(PolyElement const& x) {
  if (x.is_zero()) {
    return "0";
  }
  if (x.is_identity()) {
    return "1";
  }
  std::string out;
  for (auto const& label : x.pos()) {
    if (!out.empty()) {
      out += ' ';
    }
    out += label;
  }
  for (auto it = x.neg().rbegin(); it != x.neg().rend(); ++it) {
    if (!out.empty()) {
      out += ' ';
    }
    out += *it + "'";
  }
  return out;
}

//! A rose is a single-vertex graph; its loops are the alphabet of the
//! polycyclic monoid it presents.
inline AlphabetPtr rose_alphabet(GraphPtr const& g) {
  if (g->vertices().size() != 1) {
    throw Error("not a rose: expected exactly one vertex");
  }
  std::vector<std::string> labels;
  for (auto const& e : g->edges()) {
    labels.push_back(e.id);
  }
  return Alphabet::make(std::move(labels));
}

//! Transliterations between the graph inverse semigroup of a rose and the
//! polycyclic monoid over its loops: a path at the unique vertex IS its
//! edge-id word.  Both directions are used as oracle pairs in the tests.
inline PolyElement poly_from_rose(GraphPtr const& g, AlphabetPtr const& alphabet,
                                  GisElement const& x) {
  detail::require_same_graph(g, x.graph());
  if (!(*alphabet == *rose_alphabet(g))) {
    throw Error("alphabet does not match the rose's loops");
  }
  if (x.is_zero()) {
    return PolyElement::zero(alphabet);
  }
  return PolyElement::make(alphabet, x.u().edges(), x.v().edges());
}

inline GisElement rose_from_poly(GraphPtr const& g, PolyElement const& x) {
  AlphabetPtr expected = rose_alphabet(g);
  if (!(*x.alphabet() == *expected)) {
    throw Error("alphabet does not match the rose's loops");
  }
  if (x.is_zero()) {
    return GisElement::zero(g);
  }
  std::string const& vertex = g->vertices().front();
  auto lift = [&](PolyElement::Word const& word) {
    return word.empty() ? Path::at_vertex(g, vertex) : Path::along(g, word);
  };
  return GisElement::make(lift(x.pos()), lift(x.neg()));
}

}  // namespace gis
