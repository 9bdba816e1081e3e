#include "burau/ring.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <tuple>
#include <ostream>

namespace burau {
namespace {

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t r0 = p, r1 = ((a % p) + p) % p;
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t quot = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - quot * r1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - quot * t1);
  }
  if (r0 != 1) {
    throw std::domain_error(std::to_string(a) + " is not invertible mod " + std::to_string(p));
  }
  return ((t0 % p) + p) % p;
}

Rational power(const CoefficientRing& ring, Rational base, int exponent) {
  Rational result = ring.reduce(1);
  base = ring.reduce(base);
  while (exponent > 0) {
    if (exponent & 1) result = ring.reduce(result * base);
    base = ring.reduce(base * base);
    exponent >>= 1;
  }
  return result;
}

Rational inverse_in(const CoefficientRing& ring, const Rational& value) {
  switch (ring.kind()) {
    case RingKind::Rationals:
      if (value.is_zero()) throw std::domain_error("0 is not invertible");
      return Rational(1) / value;
    case RingKind::Integers:
      if (value == Rational(1) || value == Rational(-1)) return value;
      throw std::domain_error(value.to_string() + " is not invertible in Z");
    case RingKind::IntegersMod:
      return mod_inverse(value.num(), ring.modulus());
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_exponent(std::string_view text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw std::invalid_argument("invalid exponent: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

CoefficientRing CoefficientRing::integers_mod(std::int64_t p) {
  if (p < 2) throw std::invalid_argument("modulus must be at least 2, got " + std::to_string(p));
  return CoefficientRing(RingKind::IntegersMod, p);
}

Rational CoefficientRing::reduce(const Rational& value) const {
  switch (kind_) {
    case RingKind::Rationals:
      return value;
    case RingKind::Integers:
      if (!value.is_integer()) {
        throw std::domain_error("non-integer coefficient " + value.to_string() + " over Z");
      }
      return value;
    case RingKind::IntegersMod: {
      if (value.is_integer()) return ((value.num() % modulus_) + modulus_) % modulus_;
      std::int64_t num = ((value.num() % modulus_) + modulus_) % modulus_;
      __int128 prod = static_cast<__int128>(num) * mod_inverse(value.den(), modulus_);
      return static_cast<std::int64_t>(prod % modulus_);
    }
  }
  return value;
}

std::string CoefficientRing::name() const {
  switch (kind_) {
    case RingKind::Integers:
      return "Z";
    case RingKind::Rationals:
      return "Q";
    case RingKind::IntegersMod:
      return "Z/" + std::to_string(modulus_) + "Z";
  }
  return "?";
}

CoefficientRing CoefficientRing::parse(std::string_view name) {
  name = trim(name);
  if (name == "Z") return integers();
  if (name == "Q") return rationals();
  if (name.size() > 3 && name.substr(0, 2) == "Z/" && name.back() == 'Z') {
    return integers_mod(Rational::parse(name.substr(2, name.size() - 3)).num());
  }
  throw std::invalid_argument("unknown ring '" + std::string(name) + "'");
}

LaurentPoly LaurentPoly::constant(CoefficientRing ring, const Rational& c) {
  return monomial(ring, c, 0);
}

LaurentPoly LaurentPoly::monomial(CoefficientRing ring, const Rational& c, int exponent) {
  LaurentPoly p(ring);
  Rational r = ring.reduce(c);
  if (!r.is_zero()) p.terms_.emplace_back(exponent, r);
  return p;
}

LaurentPoly LaurentPoly::from_terms(CoefficientRing ring, std::vector<Term> terms) {
  LaurentPoly p(ring);
  p.terms_ = std::move(terms);
  p.canonicalize();
  return p;
}

void LaurentPoly::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& [e, c] : terms_) {
    if (!merged.empty() && merged.back().first == e) {
      merged.back().second += c;
    } else {
      merged.emplace_back(e, c);
    }
  }
  terms_.clear();
  for (auto& [e, c] : merged) {
    Rational r = ring_.reduce(c);
    if (!r.is_zero()) terms_.emplace_back(e, r);
  }
}

void LaurentPoly::require_same_ring(const LaurentPoly& other) const {
  if (!(ring_ == other.ring_)) {
    throw RingMismatch("ring mismatch: " + ring_.name() + " vs " + other.ring_.name());
  }
}

Rational LaurentPoly::coefficient(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return 0;
}

std::optional<std::pair<Rational, int>> LaurentPoly::as_monomial() const {
  if (terms_.size() != 1) return std::nullopt;
  return std::make_pair(terms_.front().second, terms_.front().first);
}

std::optional<std::pair<int, int>> LaurentPoly::degree_span() const {
  if (terms_.empty()) return std::nullopt;
  return std::make_pair(terms_.front().first, terms_.back().first);
}

LaurentPoly LaurentPoly::operator-() const { return scaled(-1); }

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  require_same_ring(other);
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      Rational c = ring_.reduce(a->second + b->second);
      if (!c.is_zero()) out.emplace_back(a->first, c);
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) { return *this += -other; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.require_same_ring(b);
  LaurentPoly out(a.ring_);
  if (a.is_zero() || b.is_zero()) return out;
  out.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.terms_.emplace_back(ea + eb, a.ring_.reduce(ca * cb));
    }
  }
  out.canonicalize();
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out = *this;
  for (auto& term : out.terms_) term.first += k;
  return out;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  LaurentPoly out(ring_);
  for (const auto& [e, coeff] : terms_) {
    Rational r = ring_.reduce(coeff * c);
    if (!r.is_zero()) out.terms_.emplace_back(e, r);
  }
  return out;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly out(ring_);
  out.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    out.terms_.emplace_back(-it->first, it->second);
  }
  return out;
}

Rational LaurentPoly::evaluate(const Rational& q0) const {
  Rational value = ring_.reduce(q0);
  std::optional<Rational> inverse;
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational factor;
    if (e >= 0) {
      factor = power(ring_, value, e);
    } else {
      if (!inverse) inverse = inverse_in(ring_, value);
      factor = power(ring_, *inverse, -e);
    }
    total = ring_.reduce(total + ring_.reduce(c * factor));
  }
  return total;
}

LaurentPoly LaurentPoly::reduce_mod(std::int64_t p) const {
  if (ring_.kind() != RingKind::Integers) {
    throw RingMismatch("reduce_mod expects an integer polynomial, got " + ring_.name());
  }
  CoefficientRing target = CoefficientRing::integers_mod(p);
  LaurentPoly out(target);
  for (const auto& [e, c] : terms_) {
    Rational r = target.reduce(c);
    if (!r.is_zero()) out.terms_.emplace_back(e, r);
  }
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool negative = c.num() < 0;
    Rational magnitude = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string var;
    if (e == 1) {
      var = "q";
    } else if (e != 0) {
      var = "q^" + std::to_string(e);
    }
    if (var.empty()) {
      out += magnitude.to_string();
    } else if (magnitude == Rational(1)) {
      out += var;
    } else {
      out += magnitude.to_string() + "*" + var;
    }
  }
  return out;
}

LaurentPoly LaurentPoly::parse(std::string_view text, CoefficientRing ring) {
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty polynomial");
  std::vector<Term> terms;
  std::size_t pos = 0;
  bool first = true;
  while (pos < text.size()) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    int sign = 1;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      while (pos < text.size() && text[pos] == ' ') ++pos;
    } else if (!first) {
      throw std::invalid_argument("expected '+' or '-' in '" + std::string(text) + "'");
    }
    std::size_t end = pos;
    while (end < text.size() && text[end] != '+' && text[end] != ' ' &&
           !(text[end] == '-' && end > pos && text[end - 1] != '^')) {
      ++end;
    }
    std::string_view token = text.substr(pos, end - pos);
    if (token.empty()) throw std::invalid_argument("dangling sign in '" + std::string(text) + "'");
    Rational coeff = 1;
    int exponent = 0;
    auto qpos = token.find('q');
    if (qpos == std::string_view::npos) {
      coeff = Rational::parse(token);
    } else {
      std::string_view head = token.substr(0, qpos);
      if (!head.empty()) {
        if (head.back() != '*') throw std::invalid_argument("bad term '" + std::string(token) + "'");
        coeff = Rational::parse(head.substr(0, head.size() - 1));
      }
      std::string_view tail = token.substr(qpos + 1);
      if (tail.empty()) {
        exponent = 1;
      } else if (tail.front() == '^') {
        exponent = parse_exponent(tail.substr(1));
      } else {
        throw std::invalid_argument("bad term '" + std::string(token) + "'");
      }
    }
    terms.emplace_back(exponent, sign < 0 ? -coeff : coeff);
    pos = end;
    first = false;
  }
  // "0" parses to a zero term, which canonicalize drops.
  return from_terms(ring, std::move(terms));
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

}  // namespace burau
