#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>

#include "udpkit/ring.hpp"
#include "w_arith.hpp"

namespace udpkit {

namespace {

std::uint8_t add_to_group(std::uint8_t mask, unsigned element) {
  if (mask & (1u << element)) return mask;
  std::uint8_t out = mask;
  for (unsigned s = 0; s < 8; ++s) {
    if (mask & (1u << s)) out |= static_cast<std::uint8_t>(1u << (s ^ element));
  }
  return out;
}

/// Element-set mask of the W ideal generated by `generators` (bit masks of
/// element indices are used for the generators too).
std::uint8_t w_closure(const std::vector<std::uint8_t>& generators) {
  std::uint8_t mask = 1;  // {0}
  for (auto g : generators) {
    for (unsigned r = 0; r < 8; ++r) mask = add_to_group(mask, detail::w_mul(g, static_cast<std::uint8_t>(r)));
  }
  return mask;
}

std::vector<Element> w_generators_of(std::uint8_t mask) {
  std::vector<std::uint8_t> chosen;
  std::uint8_t span = 1;
  for (unsigned e = 1; e < 8; ++e) {
    if ((mask & (1u << e)) && !(span & (1u << e))) {
      chosen.push_back(static_cast<std::uint8_t>(e));
      span = w_closure(chosen);
    }
  }
  std::vector<Element> out;
  if (chosen.empty()) out.push_back(Element::zero(Ring::witness()));
  for (auto c : chosen) out.push_back(Element::from_index(Ring::witness(), c));
  return out;
}

BigInt big_gcd(const BigInt& a, const BigInt& b) { return extended_gcd(a, b).g; }

std::uint64_t u64_gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

void require_same_ring(const Ideal& a, const Ideal& b, std::string_view op) {
  if (!(a.ring() == b.ring())) {
    throw RingMismatchError(std::string(op) + ": ideals from " + a.ring().literal() + " and " +
                            b.ring().literal());
  }
}

void require_same_ring(const Element& r, const Ideal& b, std::string_view op) {
  if (!(r.ring() == b.ring())) {
    throw RingMismatchError(std::string(op) + ": element from " + r.ring().literal() + ", ideal from " +
                            b.ring().literal());
  }
}

/// Exact divisibility in Z[x]: is `r` a Z[x]-multiple of `g`?
bool poly_divides(const Poly& g, Poly r) {
  if (g.empty()) return r.empty();
  const BigInt& lead = g.back();
  while (!r.empty()) {
    if (r.size() < g.size()) return false;
    if (r.back() % lead != 0) return false;
    const BigInt q = r.back() / lead;
    const std::size_t shift = r.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) r[shift + i] -= q * g[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return true;
}

}  // namespace

Ideal::Ideal(Ring ring, std::vector<Element> generators)
    : ring_(ring), generators_(std::move(generators)) {
  if (generators_.empty()) generators_.push_back(Element::zero(ring_));
  for (const auto& g : generators_) {
    if (!(g.ring() == ring_)) {
      throw RingMismatchError("ideal generator " + g.to_string() + " is not in ring " + ring_.literal());
    }
  }
  switch (ring_.kind()) {
    case RingKind::Z: {
      BigInt g = 0;
      for (const auto& e : generators_) g = big_gcd(g, e.as_integer());
      canonical_ = g;
      break;
    }
    case RingKind::ZMod: {
      std::uint64_t d = ring_.modulus();
      for (const auto& e : generators_) d = u64_gcd(d, e.index());
      canonical_ = d;
      break;
    }
    case RingKind::W: {
      std::vector<std::uint8_t> gens;
      for (const auto& e : generators_) gens.push_back(static_cast<std::uint8_t>(e.index()));
      canonical_ = std::uint64_t{w_closure(gens)};
      break;
    }
    case RingKind::ZPoly:
      break;
  }
}

Ideal Ideal::generated(const Ring& ring, std::vector<Element> generators) {
  return Ideal(ring, std::move(generators));
}

Ideal Ideal::principal(const Element& generator) { return Ideal(generator.ring(), {generator}); }

Ideal Ideal::zero(const Ring& ring) { return Ideal(ring, {Element::zero(ring)}); }

Ideal Ideal::unit(const Ring& ring) { return Ideal(ring, {Element::one(ring)}); }

std::vector<Element> Ideal::canonical_generators() const {
  switch (ring_.kind()) {
    case RingKind::Z: return {Element::integer(ring_, std::get<BigInt>(canonical_))};
    case RingKind::ZMod:
      return {Element::integer(ring_, BigInt(std::get<std::uint64_t>(canonical_)))};
    case RingKind::W: return w_generators_of(w_mask());
    case RingKind::ZPoly: return generators_;
  }
  return generators_;
}

std::uint8_t Ideal::w_mask() const {
  if (ring_.kind() != RingKind::W) throw RingMismatchError("w_mask() needs ring w");
  return static_cast<std::uint8_t>(std::get<std::uint64_t>(canonical_));
}

std::uint64_t Ideal::zmod_divisor() const {
  if (ring_.kind() != RingKind::ZMod) throw RingMismatchError("zmod_divisor() needs a zmod ring");
  return std::get<std::uint64_t>(canonical_);
}

const BigInt& Ideal::z_generator() const {
  if (ring_.kind() != RingKind::Z) throw RingMismatchError("z_generator() needs ring z");
  return std::get<BigInt>(canonical_);
}

bool Ideal::is_zero() const {
  switch (ring_.kind()) {
    case RingKind::Z: return z_generator() == 0;
    case RingKind::ZMod: return zmod_divisor() == ring_.modulus();
    case RingKind::W: return w_mask() == 1;
    case RingKind::ZPoly:
      return std::all_of(generators_.begin(), generators_.end(), [](const Element& e) { return e.is_zero(); });
  }
  return false;
}

bool Ideal::is_unit() const {
  switch (ring_.kind()) {
    case RingKind::Z: return z_generator() == 1;
    case RingKind::ZMod: return zmod_divisor() == 1;
    case RingKind::W: return w_mask() == 0xff;
    case RingKind::ZPoly: {
      // A generator +-1 certifies the unit ideal; anything else is not decidable here.
      for (const auto& g : generators_) {
        const auto& p = g.as_poly();
        if (p.size() == 1 && (p[0] == 1 || p[0] == -1)) return true;
      }
      if (generators_.size() == 1) return false;
      throw CapabilityError("is_unit on a non-principal zpoly ideal is not supported");
    }
  }
  return false;
}

std::string Ideal::to_string() const {
  std::string out = "<";
  const auto gens = canonical_generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ", ";
    out += gens[i].to_string();
  }
  return out + ">";
}

bool operator==(const Ideal& a, const Ideal& b) {
  if (!(a.ring_ == b.ring_)) return false;
  if (!a.has_canonical_form()) {
    throw CapabilityError("ideal equality is undefined over zpoly (no canonical form)");
  }
  return a.canonical_ == b.canonical_;
}

bool operator<(const Ideal& a, const Ideal& b) {
  if (!(a.ring_ == b.ring_)) return a.ring_.literal() < b.ring_.literal();
  if (!a.has_canonical_form()) {
    return std::lexicographical_compare(a.generators_.begin(), a.generators_.end(), b.generators_.begin(),
                                        b.generators_.end());
  }
  return a.canonical_ < b.canonical_;
}

Ideal parse_ideal(const Ring& ring, std::string_view text) {
  std::string s(text);
  const auto open = s.find('<');
  const auto close = s.rfind('>');
  if (open == std::string::npos || close == std::string::npos || close < open) {
    throw ParseError("ideal literal must look like <e1, e2, ...>: '" + s + "'");
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    if ((i < open || i > close) && !std::isspace(static_cast<unsigned char>(s[i]))) {
      throw ParseError("trailing characters around ideal literal '" + s + "'");
    }
  }
  const std::string body = s.substr(open + 1, close - open - 1);
  std::vector<Element> gens;
  std::size_t pos = 0;
  while (true) {
    const auto comma = body.find(',', pos);
    gens.push_back(parse_element(ring, body.substr(pos, comma == std::string::npos ? std::string::npos
                                                                                     : comma - pos)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Ideal::generated(ring, std::move(gens));
}

bool ideal_member(const Element& r, const Ideal& ideal) {
  require_same_ring(r, ideal, "ideal_member");
  const Ring& ring = ideal.ring();
  switch (ring.kind()) {
    case RingKind::Z: {
      const BigInt& g = ideal.z_generator();
      return g == 0 ? r.as_integer() == 0 : r.as_integer() % g == 0;
    }
    case RingKind::ZMod: return r.index() % ideal.zmod_divisor() == 0;
    case RingKind::W: return (ideal.w_mask() >> r.index()) & 1u;
    case RingKind::ZPoly: {
      if (ideal.generators().size() != 1) {
        throw CapabilityError("ideal_member over zpoly needs a principal ideal; got " + ideal.to_string());
      }
      return poly_divides(ideal.generators().front().as_poly(), r.as_poly());
    }
  }
  return false;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b, "ideal_sum");
  a.ring().require(Capability::Sum, "ideal_sum");
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  if (a.has_canonical_form()) {
    // keep generator lists short; the canonical form determines the ideal
    gens = a.canonical_generators();
    auto more = b.canonical_generators();
    gens.insert(gens.end(), more.begin(), more.end());
    Ideal joined = Ideal::generated(a.ring(), gens);
    return Ideal::generated(a.ring(), joined.canonical_generators());
  }
  return Ideal::generated(a.ring(), std::move(gens));
}

Ideal ideal_sum(std::span<const Ideal> ideals) {
  if (ideals.empty()) throw Error("ideal_sum of an empty list");
  Ideal acc = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = ideal_sum(acc, ideals[i]);
  return acc;
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b, "ideal_intersect");
  const Ring& ring = a.ring();
  ring.require(Capability::Intersect, "ideal_intersect");
  switch (ring.kind()) {
    case RingKind::Z: {
      const BigInt& x = a.z_generator();
      const BigInt& y = b.z_generator();
      if (x == 0 || y == 0) return Ideal::zero(ring);
      return Ideal::principal(Element::integer(ring, BigInt(x / big_gcd(x, y) * y)));
    }
    case RingKind::ZMod: {
      const auto x = a.zmod_divisor();
      const auto y = b.zmod_divisor();
      const auto l = x / u64_gcd(x, y) * y;  // divides m since x | m and y | m
      return Ideal::principal(Element::integer(ring, BigInt(l % ring.modulus())));
    }
    case RingKind::W: return Ideal::generated(ring, w_generators_of(a.w_mask() & b.w_mask()));
    case RingKind::ZPoly: break;
  }
  throw CapabilityError("ideal_intersect unsupported");
}

bool ideal_contains(const Ideal& b, const Ideal& a) { return ideal_sum(a, b) == b; }

std::vector<Element> ideal_elements(const Ideal& ideal) {
  const Ring& ring = ideal.ring();
  ring.require(Capability::Enumerate, "ideal_elements");
  std::vector<Element> out;
  if (ring.kind() == RingKind::ZMod) {
    const auto d = ideal.zmod_divisor();
    for (std::uint64_t v = 0; v < ring.modulus(); v += d) out.push_back(Element::from_index(ring, v));
  } else {
    const auto mask = ideal.w_mask();
    for (unsigned e = 0; e < 8; ++e) {
      if (mask & (1u << e)) out.push_back(Element::from_index(ring, e));
    }
  }
  return out;
}

std::vector<Element> decompose_in_sum(const Element& r, std::span<const Ideal> ideals) {
  const Ring& ring = r.ring();
  ring.require(Capability::Decompose, "decompose_in_sum");
  for (const auto& ideal : ideals) require_same_ring(r, ideal, "decompose_in_sum");
  if (ideals.empty()) {
    if (!r.is_zero()) throw NoDecompositionError("nonzero element cannot be an empty sum");
    return {};
  }
  switch (ring.kind()) {
    case RingKind::Z:
    case RingKind::ZMod: {
      std::vector<BigInt> gens;
      for (const auto& ideal : ideals) {
        gens.push_back(ring.kind() == RingKind::Z ? ideal.z_generator() : BigInt(ideal.zmod_divisor()));
      }
      const BigInt target = ring.kind() == RingKind::Z ? r.as_integer() : BigInt(r.index());
      // fold Bezout coefficients: sum coeffs[i] * gens[i] == g
      std::vector<BigInt> coeffs{1};
      BigInt g = gens.front();
      for (std::size_t i = 1; i < gens.size(); ++i) {
        const auto b = extended_gcd(g, gens[i]);
        for (auto& c : coeffs) c *= b.s;
        coeffs.push_back(b.t);
        g = b.g;
      }
      if (g == 0 ? target != 0 : target % g != 0) {
        throw NoDecompositionError(r.to_string() + " is not in the sum of the given ideals");
      }
      const BigInt scale = g == 0 ? BigInt(0) : BigInt(target / g);
      std::vector<Element> out;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        out.push_back(Element::integer(ring, BigInt(scale * coeffs[i] * gens[i])));
      }
      return out;
    }
    case RingKind::W: {
      std::vector<std::vector<Element>> choices;
      for (const auto& ideal : ideals) choices.push_back(ideal_elements(ideal));
      std::vector<Element> picked;
      // depth-first over the first k-1 components; the last one is forced
      auto search = [&](auto& self, std::size_t depth, const Element& remaining) -> bool {
        if (depth + 1 == choices.size()) {
          if (!ideal_member(remaining, ideals[depth])) return false;
          picked.push_back(remaining);
          return true;
        }
        for (const auto& c : choices[depth]) {
          picked.push_back(c);
          if (self(self, depth + 1, remaining - c)) return true;
          picked.pop_back();
        }
        return false;
      };
      if (!search(search, 0, r)) {
        throw NoDecompositionError(r.to_string() + " is not in the sum of the given ideals");
      }
      return picked;
    }
    case RingKind::ZPoly: break;
  }
  throw CapabilityError("decompose_in_sum unsupported");
}

std::vector<Ideal> all_ideals(const Ring& ring) {
  ring.require(Capability::Enumerate, "all_ideals");
  std::vector<Ideal> out;
  if (ring.kind() == RingKind::ZMod) {
    const auto m = ring.modulus();
    std::vector<std::uint64_t> divisors;
    for (std::uint64_t d = 1; d * d <= m; ++d) {
      if (m % d == 0) {
        divisors.push_back(d);
        if (d != m / d) divisors.push_back(m / d);
      }
    }
    std::sort(divisors.begin(), divisors.end(), std::greater<>());
    for (auto d : divisors) out.push_back(Ideal::principal(Element::integer(ring, BigInt(d % m))));
    return out;
  }
  // W: saturate {<0>} under "add one more generator"
  std::vector<std::uint8_t> masks{1};
  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (unsigned e = 0; e < 8; ++e) {
      std::vector<std::uint8_t> gens;
      for (const auto& g : w_generators_of(masks[i])) gens.push_back(static_cast<std::uint8_t>(g.index()));
      gens.push_back(static_cast<std::uint8_t>(e));
      const auto m = w_closure(gens);
      if (std::find(masks.begin(), masks.end(), m) == masks.end()) masks.push_back(m);
    }
  }
  auto element_list = [](std::uint8_t m) {
    std::vector<unsigned> v;
    for (unsigned e = 0; e < 8; ++e) {
      if (m & (1u << e)) v.push_back(e);
    }
    return v;
  };
  std::sort(masks.begin(), masks.end(), [&](std::uint8_t a, std::uint8_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return element_list(a) < element_list(b);
  });
  for (auto m : masks) out.push_back(Ideal::generated(ring, w_generators_of(m)));
  return out;
}

bool is_distributive_triple(const Ideal& i, const Ideal& j, const Ideal& k) {
  return ideal_intersect(i, ideal_sum(j, k)) == ideal_sum(ideal_intersect(i, j), ideal_intersect(i, k));
}

bool is_sum_distributive_triple(const Ideal& i, const Ideal& j, const Ideal& k) {
  return ideal_sum(i, ideal_intersect(j, k)) == ideal_intersect(ideal_sum(i, j), ideal_sum(i, k));
}

namespace {

template <typename Law>
std::optional<IdealTriple> find_violation(const Ring& ring, Law law) {
  std::vector<Ideal> nonzero;
  for (auto& ideal : all_ideals(ring)) {
    if (!ideal.is_zero()) nonzero.push_back(std::move(ideal));
  }
  for (const auto& i : nonzero) {
    for (const auto& j : nonzero) {
      for (const auto& k : nonzero) {
        if (!law(i, j, k)) return IdealTriple{i, j, k};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<IdealTriple> find_nondistributive_triple(const Ring& ring) {
  return find_violation(ring, is_distributive_triple);
}

std::optional<IdealTriple> find_sum_nondistributive_triple(const Ring& ring) {
  return find_violation(ring, is_sum_distributive_triple);
}

}  // namespace udpkit
