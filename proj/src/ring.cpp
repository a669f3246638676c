#include "udpkit/ring.hpp"

#include "w_arith.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace udpkit {

namespace {

constexpr unsigned kAll = 0x1f;

unsigned capability_bits(RingKind kind) {
  switch (kind) {
    case RingKind::Z:
      return unsigned(Capability::Membership) | unsigned(Capability::Sum) |
             unsigned(Capability::Intersect) | unsigned(Capability::Decompose);
    case RingKind::ZMod:
    case RingKind::W:
      return kAll;
    case RingKind::ZPoly:
      return unsigned(Capability::Membership) | unsigned(Capability::Sum);
  }
  return 0;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

void strip(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) + b) % m);
}

BigInt parse_integer(std::string_view text) {
  text = trim(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty() || !std::all_of(text.begin(), text.end(),
                                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw ParseError("invalid integer literal");
  }
  BigInt value{std::string(text)};
  return negative ? BigInt(-value) : value;
}

void require_same_ring(const Element& a, const Element& b, std::string_view op) {
  if (!(a.ring() == b.ring())) {
    throw RingMismatchError(std::string(op) + ": operands from " + a.ring().literal() + " and " +
                            b.ring().literal());
  }
}

Poly parse_poly(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw ParseError("empty polynomial literal");
  Poly result;
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      throw ParseError("expected '+' or '-' in polynomial literal '" + s + "'");
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string_view term(s.data() + pos, end - pos);
    if (term.empty()) throw ParseError("empty term in polynomial literal '" + s + "'");
    BigInt coefficient = 1;
    std::size_t degree = 0;
    const auto xpos = term.find('x');
    if (xpos == std::string_view::npos) {
      coefficient = parse_integer(term);
    } else {
      std::string_view coeff_part = term.substr(0, xpos);
      if (!coeff_part.empty() && coeff_part.back() == '*') coeff_part.remove_suffix(1);
      if (!coeff_part.empty()) coefficient = parse_integer(coeff_part);
      std::string_view rest = term.substr(xpos + 1);
      degree = 1;
      if (!rest.empty()) {
        if (rest.front() != '^') throw ParseError("bad exponent in term '" + std::string(term) + "'");
        rest.remove_prefix(1);
        auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), degree);
        if (ec != std::errc() || ptr != rest.data() + rest.size()) {
          throw ParseError("bad exponent in term '" + std::string(term) + "'");
        }
      }
    }
    if (result.size() <= degree) result.resize(degree + 1);
    result[degree] += negative ? BigInt(-coefficient) : coefficient;
    pos = end;
  }
  strip(result);
  return result;
}

std::string poly_to_string(const Poly& p) {
  if (p.empty()) return "0";
  std::string out;
  for (std::size_t i = p.size(); i-- > 0;) {
    const BigInt& c = p[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? '-' : '+';
    }
    if (i == 0) {
      out += magnitude.str();
    } else {
      if (magnitude != 1) out += magnitude.str() + "*";
      out += 'x';
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace

std::string_view capability_name(Capability c) {
  switch (c) {
    case Capability::Membership: return "membership";
    case Capability::Sum: return "sum";
    case Capability::Intersect: return "intersect";
    case Capability::Decompose: return "decompose";
    case Capability::Enumerate: return "enumerate";
  }
  return "?";
}

Ring Ring::integers() { return Ring(RingKind::Z, 0); }

Ring Ring::modular(std::uint64_t m) {
  if (m < 2) throw Error("zmod modulus must be at least 2");
  return Ring(RingKind::ZMod, m);
}

Ring Ring::witness() { return Ring(RingKind::W, 0); }

Ring Ring::polynomials() { return Ring(RingKind::ZPoly, 0); }

bool Ring::has(Capability c) const { return (capability_bits(kind_) & unsigned(c)) != 0; }

void Ring::require(Capability c, std::string_view operation) const {
  if (!has(c)) {
    throw CapabilityError(std::string(operation) + " needs capability '" +
                          std::string(capability_name(c)) + "', which ring " + literal() +
                          " does not provide");
  }
}

std::uint64_t Ring::size() const {
  switch (kind_) {
    case RingKind::ZMod: return modulus_;
    case RingKind::W: return 8;
    default: throw CapabilityError("ring " + literal() + " is infinite");
  }
}

std::string Ring::literal() const {
  switch (kind_) {
    case RingKind::Z: return "z";
    case RingKind::ZMod: return "zmod " + std::to_string(modulus_);
    case RingKind::W: return "w";
    case RingKind::ZPoly: return "zpoly";
  }
  return "?";
}

Ring parse_ring(std::string_view text) {
  std::string s;
  for (char c : trim(text)) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s == "z") return Ring::integers();
  if (s == "w") return Ring::witness();
  if (s == "zpoly") return Ring::polynomials();
  if (s.rfind("zmod", 0) == 0) {
    std::string_view rest = trim(std::string_view(s).substr(4));
    if (!rest.empty() && rest.front() == ':') rest = trim(rest.substr(1));
    std::uint64_t m = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), m);
    if (rest.empty() || ec != std::errc() || ptr != rest.data() + rest.size()) {
      throw ParseError("invalid zmod modulus in ring literal '" + std::string(text) + "'");
    }
    if (m < 2) throw ParseError("zmod modulus must be at least 2");
    return Ring::modular(m);
  }
  throw ParseError("unknown ring '" + std::string(text) + "'");
}

// --- Element ---------------------------------------------------------------

Element Element::zero(const Ring& ring) {
  switch (ring.kind()) {
    case RingKind::Z: return Element(ring, BigInt(0));
    case RingKind::ZMod:
    case RingKind::W: return Element(ring, std::uint64_t{0});
    case RingKind::ZPoly: return Element(ring, Poly{});
  }
  throw Error("unreachable");
}

Element Element::one(const Ring& ring) {
  switch (ring.kind()) {
    case RingKind::Z: return Element(ring, BigInt(1));
    case RingKind::ZMod:
    case RingKind::W: return Element(ring, std::uint64_t{1});
    case RingKind::ZPoly: return Element(ring, Poly{BigInt(1)});
  }
  throw Error("unreachable");
}

Element Element::integer(const Ring& ring, const BigInt& value) {
  switch (ring.kind()) {
    case RingKind::Z: return Element(ring, value);
    case RingKind::ZMod: {
      BigInt r = value % ring.modulus();
      if (r < 0) r += ring.modulus();
      return Element(ring, static_cast<std::uint64_t>(r));
    }
    case RingKind::W: return Element(ring, std::uint64_t{(value % 2) != 0 ? 1u : 0u});
    case RingKind::ZPoly: {
      Poly p{value};
      strip(p);
      return Element(ring, std::move(p));
    }
  }
  throw Error("unreachable");
}

Element Element::from_index(const Ring& ring, std::uint64_t index) {
  if (!ring.is_finite()) throw CapabilityError("from_index needs a finite ring");
  if (index >= ring.size()) throw Error("element index out of range");
  return Element(ring, index);
}

Element Element::polynomial(Poly coefficients) {
  strip(coefficients);
  return Element(Ring::polynomials(), std::move(coefficients));
}

Element Element::w(bool a, bool b, bool c) {
  return Element(Ring::witness(), std::uint64_t((a ? 1u : 0u) | (b ? 2u : 0u) | (c ? 4u : 0u)));
}

bool Element::is_zero() const {
  switch (ring_.kind()) {
    case RingKind::Z: return std::get<BigInt>(value_) == 0;
    case RingKind::ZMod:
    case RingKind::W: return std::get<std::uint64_t>(value_) == 0;
    case RingKind::ZPoly: return std::get<Poly>(value_).empty();
  }
  return false;
}

std::uint64_t Element::index() const {
  if (!ring_.is_finite()) throw CapabilityError("index() needs a finite ring");
  return std::get<std::uint64_t>(value_);
}

const BigInt& Element::as_integer() const {
  if (ring_.kind() != RingKind::Z) throw RingMismatchError("as_integer() needs ring z");
  return std::get<BigInt>(value_);
}

const Poly& Element::as_poly() const {
  if (ring_.kind() != RingKind::ZPoly) throw RingMismatchError("as_poly() needs ring zpoly");
  return std::get<Poly>(value_);
}

std::string Element::to_string() const {
  switch (ring_.kind()) {
    case RingKind::Z: return std::get<BigInt>(value_).str();
    case RingKind::ZMod: return std::to_string(std::get<std::uint64_t>(value_));
    case RingKind::W: {
      const auto bits = std::get<std::uint64_t>(value_);
      if (bits == 0) return "0";
      std::string out;
      const char* names[] = {"1", "x", "y"};
      for (int i = 0; i < 3; ++i) {
        if (bits & (1u << i)) {
          if (!out.empty()) out += '+';
          out += names[i];
        }
      }
      return out;
    }
    case RingKind::ZPoly: return poly_to_string(std::get<Poly>(value_));
  }
  return "?";
}

bool operator==(const Element& a, const Element& b) {
  return a.ring_ == b.ring_ && a.value_ == b.value_;
}

bool operator<(const Element& a, const Element& b) {
  if (!(a.ring_ == b.ring_)) return a.ring_.literal() < b.ring_.literal();
  if (a.ring_.kind() == RingKind::ZPoly) {
    const auto& p = std::get<Poly>(a.value_);
    const auto& q = std::get<Poly>(b.value_);
    if (p.size() != q.size()) return p.size() < q.size();
    return std::lexicographical_compare(p.rbegin(), p.rend(), q.rbegin(), q.rend());
  }
  return a.value_ < b.value_;
}

Element elem_add(const Element& a, const Element& b) {
  require_same_ring(a, b, "elem_add");
  const Ring& ring = a.ring_;
  switch (ring.kind()) {
    case RingKind::Z: return Element(ring, BigInt(std::get<BigInt>(a.value_) + std::get<BigInt>(b.value_)));
    case RingKind::ZMod:
      return Element(ring, addmod(std::get<std::uint64_t>(a.value_), std::get<std::uint64_t>(b.value_),
                                  ring.modulus()));
    case RingKind::W:
      return Element(ring, std::get<std::uint64_t>(a.value_) ^ std::get<std::uint64_t>(b.value_));
    case RingKind::ZPoly: {
      const auto& p = std::get<Poly>(a.value_);
      const auto& q = std::get<Poly>(b.value_);
      Poly r(std::max(p.size(), q.size()));
      for (std::size_t i = 0; i < p.size(); ++i) r[i] += p[i];
      for (std::size_t i = 0; i < q.size(); ++i) r[i] += q[i];
      strip(r);
      return Element(ring, std::move(r));
    }
  }
  throw Error("unreachable");
}

Element elem_mul(const Element& a, const Element& b) {
  require_same_ring(a, b, "elem_mul");
  const Ring& ring = a.ring_;
  switch (ring.kind()) {
    case RingKind::Z: return Element(ring, BigInt(std::get<BigInt>(a.value_) * std::get<BigInt>(b.value_)));
    case RingKind::ZMod:
      return Element(ring, mulmod(std::get<std::uint64_t>(a.value_), std::get<std::uint64_t>(b.value_),
                                  ring.modulus()));
    case RingKind::W:
      return Element(ring, std::uint64_t{detail::w_mul(static_cast<std::uint8_t>(std::get<std::uint64_t>(a.value_)),
                                               static_cast<std::uint8_t>(std::get<std::uint64_t>(b.value_)))});
    case RingKind::ZPoly: {
      const auto& p = std::get<Poly>(a.value_);
      const auto& q = std::get<Poly>(b.value_);
      if (p.empty() || q.empty()) return Element(ring, Poly{});
      Poly r(p.size() + q.size() - 1);
      for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
      }
      strip(r);
      return Element(ring, std::move(r));
    }
  }
  throw Error("unreachable");
}

Element elem_neg(const Element& a) {
  const Ring& ring = a.ring_;
  switch (ring.kind()) {
    case RingKind::Z: return Element(ring, BigInt(-std::get<BigInt>(a.value_)));
    case RingKind::ZMod: {
      const auto v = std::get<std::uint64_t>(a.value_);
      return Element(ring, v == 0 ? std::uint64_t{0} : ring.modulus() - v);
    }
    case RingKind::W: return a;
    case RingKind::ZPoly: {
      Poly r = std::get<Poly>(a.value_);
      for (auto& c : r) c = -c;
      return Element(ring, std::move(r));
    }
  }
  throw Error("unreachable");
}

Element elem_sub(const Element& a, const Element& b) {
  require_same_ring(a, b, "elem_sub");
  return elem_add(a, elem_neg(b));
}

std::vector<Element> ring_elements(const Ring& ring) {
  std::vector<Element> out;
  const auto n = ring.size();
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(Element::from_index(ring, i));
  return out;
}

Element parse_element(const Ring& ring, std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty element literal");
  switch (ring.kind()) {
    case RingKind::Z:
    case RingKind::ZMod: return Element::integer(ring, parse_integer(text));
    case RingKind::W: {
      std::uint64_t bits = 0;
      std::size_t pos = 0;
      while (pos <= text.size()) {
        const auto plus = text.find('+', pos);
        const auto term = trim(text.substr(pos, plus == std::string_view::npos ? std::string_view::npos
                                                                               : plus - pos));
        if (term == "0") {
        } else if (term == "1") {
          bits ^= 1u;
        } else if (term == "x") {
          bits ^= 2u;
        } else if (term == "y") {
          bits ^= 4u;
        } else {
          throw ParseError("invalid w element literal '" + std::string(text) + "'");
        }
        if (plus == std::string_view::npos) break;
        pos = plus + 1;
      }
      return Element::from_index(ring, bits);
    }
    case RingKind::ZPoly: return Element::polynomial(parse_poly(text));
  }
  throw Error("unreachable");
}

Bezout extended_gcd(const BigInt& a, const BigInt& b) {
  BigInt old_r = a, r = b;
  BigInt old_s = 1, s = 0;
  BigInt old_t = 0, t = 1;
  while (r != 0) {
    const BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

}  // namespace udpkit
