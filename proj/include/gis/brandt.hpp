#pragma once

#include <algorithm>
#include <concepts>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gis/element.hpp"
#include "gis/error.hpp"
#include "gis/polycyclic.hpp"

namespace gis {

//! The payload capability: a semigroup with zero, supplied as product, zero
//! constant, equality, and a rendering hook.  Any conforming type slots in;
//! no payload-specific code exists below this concept.
template <typename S>
concept SemigroupWithZero = requires(S const& s, typename S::Element const& a,
                                     typename S::Element const& b) {
  { s.product(a, b) } -> std::convertible_to<typename S::Element>;
  { s.zero() } -> std::convertible_to<typename S::Element>;
  { s.equal(a, b) } -> std::convertible_to<bool>;
  { s.to_text(a) } -> std::convertible_to<std::string>;
};

//! Zero, or a triple (a, s, b) of index labels around a nonzero payload.
//! Zero-payload triples never exist: the Rees quotient collapses them at
//! construction and multiplication time.
template <typename PayloadElement>
class BrandtElement {
 public:
  static BrandtElement zero() { return BrandtElement(); }

  static BrandtElement triple(std::string a, PayloadElement payload,
                              std::string b) {
    BrandtElement out;
    out.triple_.emplace(Triple{std::move(a), std::move(payload), std::move(b)});
    return out;
  }

  bool is_zero() const { return !triple_.has_value(); }

  std::string const& left() const { return nonzero().left; }
  std::string const& right() const { return nonzero().right; }
  PayloadElement const& payload() const { return nonzero().payload; }

 private:
  struct Triple {
    std::string left;
    PayloadElement payload;
    std::string right;
  };

  Triple const& nonzero() const {
    if (!triple_) {
      throw Error("zero element has no triple components");
    }
    return *triple_;
  }

  std::optional<Triple> triple_;
};

//! The Brandt X0-extension of a payload semigroup-with-zero: index-matching
//! multiplication through the Rees quotient,
//!   (a, s, b)(c, t, d) = (a, s t, d)  if b = c and s t != 0,
//!                        0            otherwise.
//! The non-quotient form is never materialized; the zero-payload invariant
//! stands in for it.  A BrandtSemigroup is itself a SemigroupWithZero, so
//! extensions nest.
template <SemigroupWithZero S>
class BrandtSemigroup {
 public:
  using Element = BrandtElement<typename S::Element>;

  BrandtSemigroup(std::vector<std::string> indices, S payload)
      : indices_(std::move(indices)), payload_(std::move(payload)) {
    std::sort(indices_.begin(), indices_.end());
    if (indices_.empty()) {
      throw Error("empty index set");
    }
    for (std::size_t i = 0; i < indices_.size(); ++i) {
      if (indices_[i].empty()) {
        throw Error("empty index label");
      }
      if (i > 0 && indices_[i] == indices_[i - 1]) {
        throw Error("duplicate index label \"" + indices_[i] + "\"");
      }
    }
  }

  std::vector<std::string> const& indices() const { return indices_; }
  S const& payload_semigroup() const { return payload_; }

  Element zero() const { return Element::zero(); }

  //! Validating constructor for nonzero elements.
  Element triple(std::string a, typename S::Element payload,
                 std::string b) const {
    require_index(a);
    require_index(b);
    if (payload_.equal(payload, payload_.zero())) {
      throw Error("zero payload is not a triple (Rees quotient)");
    }
    return Element::triple(std::move(a), std::move(payload), std::move(b));
  }

  Element product(Element const& x, Element const& y) const {
    if (x.is_zero() || y.is_zero()) {
      return zero();
    }
    require_index(x.left());
    require_index(x.right());
    require_index(y.left());
    require_index(y.right());
    if (x.right() != y.left()) {
      return zero();
    }
    typename S::Element s = payload_.product(x.payload(), y.payload());
    if (payload_.equal(s, payload_.zero())) {
      return zero();
    }
    return Element::triple(x.left(), std::move(s), y.right());
  }

  bool equal(Element const& x, Element const& y) const {
    if (x.is_zero() || y.is_zero()) {
      return x.is_zero() == y.is_zero();
    }
    return x.left() == y.left() && x.right() == y.right() &&
           payload_.equal(x.payload(), y.payload());
  }

  std::string to_text(Element const& x) const {
    if (x.is_zero()) {
      return "0";
    }
    return "(" + x.left() + " | " + payload_.to_text(x.payload()) + " | " +
           x.right() + ")";
  }

 private:
  void require_index(std::string const& label) const {
    if (!std::binary_search(indices_.begin(), indices_.end(), label)) {
      throw Error("unknown index label \"" + label + "\"");
    }
  }

  std::vector<std::string> indices_;
  S payload_;
};

template <SemigroupWithZero S>
typename BrandtSemigroup<S>::Element brandt_multiply(
    BrandtSemigroup<S> const& semigroup,
    typename BrandtSemigroup<S>::Element const& x,
    typename BrandtSemigroup<S>::Element const& y) {
  return semigroup.product(x, y);
}

//! The two-element semilattice ({0, 1}, min) — the payload that turns a
//! Brandt extension into matrix units.
struct BoolSemilattice {
  using Element = bool;

  bool product(bool a, bool b) const { return a && b; }
  bool zero() const { return false; }
  bool equal(bool a, bool b) const { return a == b; }
  std::string to_text(bool a) const { return a ? "1" : "0"; }
};

//! Polycyclic monoid as a payload.
class PolySemigroup {
 public:
  using Element = PolyElement;

  explicit PolySemigroup(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

  AlphabetPtr const& alphabet() const { return alphabet_; }

  Element product(Element const& a, Element const& b) const {
    detail::require_same_alphabet(alphabet_, a.alphabet());
    return poly_multiply(a, b);
  }
  Element zero() const { return PolyElement::zero(alphabet_); }
  bool equal(Element const& a, Element const& b) const { return a == b; }
  std::string to_text(Element const& a) const { return to_literal(a); }

 private:
  AlphabetPtr alphabet_;
};

//! A whole graph inverse semigroup as a payload.
class GisSemigroup {
 public:
  using Element = GisElement;

  explicit GisSemigroup(GraphPtr graph) : graph_(std::move(graph)) {}

  GraphPtr const& graph() const { return graph_; }

  Element product(Element const& a, Element const& b) const {
    detail::require_same_graph(graph_, a.graph());
    return multiply(a, b);
  }
  Element zero() const { return GisElement::zero(graph_); }
  bool equal(Element const& a, Element const& b) const { return a == b; }
  std::string to_text(Element const& a) const { return to_literal(a); }

 private:
  GraphPtr graph_;
};

//! Independent matrix-unit arithmetic, used as the oracle against
//! BrandtSemigroup<BoolSemilattice>:  (a, b)(c, d) = (a, d) if b = c, else 0.
struct MatrixUnit {
  bool zero = true;
  std::string a;
  std::string b;

  static MatrixUnit unit(std::string a, std::string b) {
    return MatrixUnit{false, std::move(a), std::move(b)};
  }

  friend bool operator==(MatrixUnit const& x, MatrixUnit const& y) {
    if (x.zero || y.zero) {
      return x.zero == y.zero;
    }
    return x.a == y.a && x.b == y.b;
  }
};

inline MatrixUnit matrix_unit_multiply(std::vector<std::string> const& indices,
                                       MatrixUnit const& x,
                                       MatrixUnit const& y) {
  auto require_index = [&](std::string const& label) {
    if (std::find(indices.begin(), indices.end(), label) == indices.end()) {
      throw Error("unknown index label \"" + label + "\"");
    }
  };
  if (x.zero || y.zero) {
    return MatrixUnit{};
  }
  require_index(x.a);
  require_index(x.b);
  require_index(y.a);
  require_index(y.b);
  if (x.b != y.a) {
    return MatrixUnit{};
  }
  return MatrixUnit::unit(x.a, y.b);
}

}  // namespace gis
