#include <string>

#include "tutte/bipoly.hpp"
#include "tutte/error.hpp"

namespace tutte {

UniPoly::UniPoly(long constant) {
  if (constant != 0) terms_.emplace(0U, Rational(constant));
}

UniPoly::UniPoly(const Rational& constant) {
  if (constant != 0) terms_.emplace(0U, constant);
}

UniPoly UniPoly::var(unsigned power) {
  UniPoly p;
  p.terms_.emplace(power, Rational(1));
  return p;
}

unsigned UniPoly::degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

Rational UniPoly::coefficient(unsigned power) const {
  auto it = terms_.find(power);
  return it == terms_.end() ? Rational(0) : it->second;
}

void UniPoly::add_term(const Rational& c, unsigned power) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(power, c);
  if (!inserted) {
    it->second += c;
    it->second.canonicalize();
    if (it->second == 0) terms_.erase(it);
  }
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
  for (const auto& [k, c] : other.terms_) add_term(c, k);
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& other) {
  for (const auto& [k, c] : other.terms_) add_term(-c, k);
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  UniPoly out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) out.add_term(ca * cb, ka + kb);
  }
  return out;
}

Rational UniPoly::eval(const Rational& v) const {
  Rational acc = 0;
  unsigned k = degree();
  // Horner over the dense range, reading missing powers as zero.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    while (k > it->first) {
      acc *= v;
      --k;
    }
    acc += it->second;
  }
  for (; k > 0; --k) acc *= v;
  acc.canonicalize();
  return acc;
}

bool UniPoly::is_integral() const {
  for (const auto& [k, c] : terms_) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

BiPoly UniPoly::to_bipoly_x() const {
  BiPoly out;
  for (const auto& [k, c] : terms_) {
    if (c.get_den() != 1) {
      fail(ErrorKind::NonExactDivision, "coefficient " + c.get_str() + " is not an integer");
    }
    out.add_term(c.get_num(), k, 0);
  }
  return out;
}

UniPoly UniPoly::from_bipoly_x(const BiPoly& p) {
  UniPoly out;
  for (const auto& [e, c] : p.terms()) {
    if (e.y != 0) fail(ErrorKind::InvalidParameters, "polynomial depends on the second variable");
    out.add_term(Rational(c), e.x);
  }
  return out;
}

UniPoly interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
  const std::size_t n = points.size();
  std::vector<Rational> coeff(n);
  for (std::size_t i = 0; i < n; ++i) coeff[i] = points[i].second;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      const Rational gap = points[i].first - points[i - level].first;
      if (gap == 0) fail(ErrorKind::InvalidParameters, "interpolation nodes must be distinct");
      coeff[i] = (coeff[i] - coeff[i - 1]) / gap;
      coeff[i].canonicalize();
    }
  }
  UniPoly result;
  for (std::size_t i = n; i-- > 0;) {
    result = result * (UniPoly::var() - UniPoly(points[i].first)) + UniPoly(coeff[i]);
  }
  return result;
}

std::string to_text(const UniPoly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [k, c] = *it;
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational m = abs(c);
    std::string mono;
    if (m != 1 || k == 0) mono = m.get_str();
    if (k > 0) {
      if (!mono.empty()) mono += '*';
      mono += var;
      if (k > 1) mono += "^" + std::to_string(k);
    }
    out += mono;
    first = false;
  }
  return out;
}

}  // namespace tutte
