#pragma once

// Computable commutative rings with unity, their elements and their ideals.
//
// Four rings are supported, each with an explicit capability tier:
//
//   Z        integers                         membership sum intersect decompose
//   ZMod(m)  integers modulo m, m >= 2        all five
//   W        F2[x,y]/(x^2, xy, y^2), 8 elems  all five
//   ZPoly    Z[x], principal membership only  membership sum
//
// W is the smallest convenient ring whose ideal lattice is not distributive
// (it contains the diamond M3 formed by <x>, <y>, <x+y>), which makes every
// counterexample construction checkable by exhaustive search.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "udpkit/errors.hpp"

namespace udpkit {

using BigInt = boost::multiprecision::cpp_int;

enum class RingKind { Z, ZMod, W, ZPoly };

enum class Capability : unsigned {
  Membership = 1u << 0,
  Sum = 1u << 1,
  Intersect = 1u << 2,
  Decompose = 1u << 3,
  Enumerate = 1u << 4,
};

std::string_view capability_name(Capability c);

class Ring {
 public:
  static Ring integers();
  static Ring modular(std::uint64_t m);
  static Ring witness();
  static Ring polynomials();

  RingKind kind() const { return kind_; }
  /// Modulus for ZMod, 0 otherwise.
  std::uint64_t modulus() const { return modulus_; }

  bool has(Capability c) const;
  /// Throws CapabilityError naming `operation` when the capability is missing.
  void require(Capability c, std::string_view operation) const;

  bool is_finite() const { return kind_ == RingKind::ZMod || kind_ == RingKind::W; }
  /// Number of elements; finite rings only.
  std::uint64_t size() const;

  /// Ring literal as accepted by parse_ring ("z", "zmod 12", "w", "zpoly").
  std::string literal() const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  Ring(RingKind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

  RingKind kind_;
  std::uint64_t modulus_;
};

Ring parse_ring(std::string_view text);

/// Integer coefficient vector, constant term first, no trailing zeros.
using Poly = std::vector<BigInt>;

/// An element of a Ring. Finite-ring elements are stored by index: the residue
/// for ZMod, and the coefficient bits (1 -> bit 0, x -> bit 1, y -> bit 2) for
/// W. Element order is index order for finite rings.
class Element {
 public:
  static Element zero(const Ring& ring);
  static Element one(const Ring& ring);
  static Element integer(const Ring& ring, const BigInt& value);
  static Element from_index(const Ring& ring, std::uint64_t index);
  static Element polynomial(Poly coefficients);
  /// W element a*1 + b*x + c*y.
  static Element w(bool a, bool b, bool c);

  const Ring& ring() const { return ring_; }
  bool is_zero() const;
  /// Finite rings only.
  std::uint64_t index() const;
  /// Z only.
  const BigInt& as_integer() const;
  /// ZPoly only.
  const Poly& as_poly() const;

  std::string to_string() const;

  friend bool operator==(const Element& a, const Element& b);
  friend bool operator<(const Element& a, const Element& b);

 private:
  Element(Ring ring, std::variant<BigInt, std::uint64_t, Poly> value)
      : ring_(ring), value_(std::move(value)) {}

  friend Element elem_add(const Element&, const Element&);
  friend Element elem_mul(const Element&, const Element&);
  friend Element elem_neg(const Element&);

  Ring ring_;
  std::variant<BigInt, std::uint64_t, Poly> value_;
};

Element elem_add(const Element& a, const Element& b);
Element elem_mul(const Element& a, const Element& b);
Element elem_neg(const Element& a);
Element elem_sub(const Element& a, const Element& b);

inline Element operator+(const Element& a, const Element& b) { return elem_add(a, b); }
inline Element operator-(const Element& a, const Element& b) { return elem_sub(a, b); }
inline Element operator*(const Element& a, const Element& b) { return elem_mul(a, b); }
inline Element operator-(const Element& a) { return elem_neg(a); }

/// Every element of a finite ring in index order.
std::vector<Element> ring_elements(const Ring& ring);

Element parse_element(const Ring& ring, std::string_view text);

/// A finitely generated ideal. Over Z, ZMod and W a canonical form is kept
/// and equality is decided on it; over ZPoly only the generator list exists
/// and equality raises CapabilityError.
class Ideal {
 public:
  static Ideal generated(const Ring& ring, std::vector<Element> generators);
  static Ideal principal(const Element& generator);
  static Ideal zero(const Ring& ring);
  static Ideal unit(const Ring& ring);

  const Ring& ring() const { return ring_; }
  const std::vector<Element>& generators() const { return generators_; }
  bool has_canonical_form() const { return ring_.kind() != RingKind::ZPoly; }

  /// Canonical generator list: the gcd for Z, the divisor of m for ZMod, and a
  /// minimal generating set picked in element order for W. ZPoly returns the
  /// generators as given.
  std::vector<Element> canonical_generators() const;

  /// W only: bit i set iff element with index i is in the ideal.
  std::uint8_t w_mask() const;
  /// ZMod only: the divisor d of m with I = <d> (d == m for the zero ideal).
  std::uint64_t zmod_divisor() const;
  /// Z only: the nonnegative generator.
  const BigInt& z_generator() const;

  bool is_zero() const;
  bool is_unit() const;

  /// "<g1, g2, ...>" using canonical generators.
  std::string to_string() const;

  friend bool operator==(const Ideal& a, const Ideal& b);
  /// Total order on canonical forms (not inclusion); for containers only.
  friend bool operator<(const Ideal& a, const Ideal& b);

 private:
  Ideal(Ring ring, std::vector<Element> generators);

  Ring ring_;
  std::vector<Element> generators_;
  std::variant<std::monostate, BigInt, std::uint64_t> canonical_;
};

Ideal parse_ideal(const Ring& ring, std::string_view text);

bool ideal_member(const Element& r, const Ideal& ideal);
Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_sum(std::span<const Ideal> ideals);
Ideal ideal_intersect(const Ideal& a, const Ideal& b);
/// a ⊆ b; needs canonical forms.
bool ideal_contains(const Ideal& b, const Ideal& a);

/// Exact element set in index order; finite rings only.
std::vector<Element> ideal_elements(const Ideal& ideal);

/// Returns (a_1, ..., a_k) with a_i in ideals[i] and a_1 + ... + a_k == r.
/// Deterministic. Throws NoDecompositionError when r is not in the sum.
std::vector<Element> decompose_in_sum(const Element& r, std::span<const Ideal> ideals);

/// Every ideal of a finite ring exactly once, ordered by size then by element
/// set.
std::vector<Ideal> all_ideals(const Ring& ring);

struct IdealTriple {
  Ideal i;
  Ideal j;
  Ideal k;
};

/// I ∩ (J + K) == (I ∩ J) + (I ∩ K).
bool is_distributive_triple(const Ideal& i, const Ideal& j, const Ideal& k);

/// I + (J ∩ K) == (I + J) ∩ (I + K). The counterexample constructions need a
/// triple violating this form.
bool is_sum_distributive_triple(const Ideal& i, const Ideal& j, const Ideal& k);

/// First triple of nonzero ideals (in all_ideals order) violating
/// is_distributive_triple, if any.
std::optional<IdealTriple> find_nondistributive_triple(const Ring& ring);

/// First triple of nonzero ideals violating is_sum_distributive_triple.
std::optional<IdealTriple> find_sum_nondistributive_triple(const Ring& ring);

/// Extended gcd on integers: returns (g, s, t) with s*a + t*b == g >= 0.
struct Bezout {
  BigInt g;
  BigInt s;
  BigInt t;
};
Bezout extended_gcd(const BigInt& a, const BigInt& b);

}  // namespace udpkit
