#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "tutte/bipoly.hpp"
#include "tutte/error.hpp"

namespace tutte {

namespace {

using Term = std::pair<Exponent, Integer>;

std::vector<Term> display_order(const BiPoly& p) {
  std::vector<Term> out(p.terms().begin(), p.terms().end());
  std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) {
    if (a.first.y != b.first.y) return a.first.y < b.first.y;
    return a.first.x > b.first.x;
  });
  return out;
}

void append_monomial(std::string& out, const Integer& magnitude, const Exponent& e,
                     const VariableNames& names) {
  std::vector<std::string> factors;
  if (magnitude != 1 || (e.x == 0 && e.y == 0)) factors.push_back(magnitude.get_str());
  if (e.x == 1) factors.push_back(names.x);
  if (e.x > 1) factors.push_back(names.x + "^" + std::to_string(e.x));
  if (e.y == 1) factors.push_back(names.y);
  if (e.y > 1) factors.push_back(names.y + "^" + std::to_string(e.y));
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) out += '*';
    out += factors[i];
  }
}

void append_latex_monomial(std::string& out, const Integer& magnitude, const Exponent& e,
                           const VariableNames& names) {
  if (magnitude != 1 || (e.x == 0 && e.y == 0)) out += magnitude.get_str();
  auto power = [&](const std::string& v, unsigned k) {
    if (k == 0) return;
    out += v;
    if (k > 1) out += "^{" + std::to_string(k) + "}";
  };
  power(names.x, e.x);
  power(names.y, e.y);
}

template <typename Emit>
std::string join_signed(const BiPoly& p, Emit emit) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : display_order(p)) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    emit(out, abs(c), e);
    first = false;
  }
  return out;
}

// Recursive-descent reader for sums of products of integers, variables and
// parenthesised subexpressions, with non-negative integer powers.
class Parser {
 public:
  Parser(std::string_view text, const VariableNames& names) : text_(text), names_(names) {}

  BiPoly parse() {
    BiPoly p = expression();
    skip_space();
    if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::ParseError, what + " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_factor_start() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' ||
           text_.substr(pos_).starts_with(names_.x) || text_.substr(pos_).starts_with(names_.y);
  }

  BiPoly expression() {
    BiPoly sum;
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    for (;;) {
      BiPoly t = product();
      sum += negate ? -t : t;
      if (accept('+')) {
        negate = false;
      } else if (accept('-')) {
        negate = true;
      } else {
        return sum;
      }
    }
  }

  BiPoly product() {
    BiPoly p = power();
    for (;;) {
      if (accept('*')) {
        p = p * power();
      } else if (at_factor_start()) {
        p = p * power();
      } else {
        return p;
      }
    }
  }

  BiPoly power() {
    BiPoly base = atom();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) error("expected an exponent");
      const unsigned long k = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (k > 100000) error("exponent too large");
      return pow(base, static_cast<unsigned>(k));
    }
    return base;
  }

  BiPoly atom() {
    skip_space();
    if (pos_ >= text_.size()) error("unexpected end of input");
    if (accept('(')) {
      BiPoly inner = expression();
      if (!accept(')')) error("expected ')'");
      return inner;
    }
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return BiPoly(Integer(std::string(text_.substr(start, pos_ - start))));
    }
    // Longest name first so that names sharing a prefix resolve correctly.
    const bool x_first = names_.x.size() >= names_.y.size();
    const std::string& first = x_first ? names_.x : names_.y;
    const std::string& second = x_first ? names_.y : names_.x;
    if (text_.substr(pos_).starts_with(first)) {
      pos_ += first.size();
      return x_first ? BiPoly::x() : BiPoly::y();
    }
    if (text_.substr(pos_).starts_with(second)) {
      pos_ += second.size();
      return x_first ? BiPoly::y() : BiPoly::x();
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const VariableNames& names_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_text(const BiPoly& p, const VariableNames& names) {
  return join_signed(p, [&](std::string& out, const Integer& m, const Exponent& e) {
    append_monomial(out, m, e, names);
  });
}

std::string to_latex(const BiPoly& p, const VariableNames& names) {
  return join_signed(p, [&](std::string& out, const Integer& m, const Exponent& e) {
    append_latex_monomial(out, m, e, names);
  });
}

std::string to_json(const BiPoly& p) {
  std::vector<Term> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    const unsigned da = a.first.x + a.first.y;
    const unsigned db = b.first.x + b.first.y;
    if (da != db) return da < db;
    return a.first.x > b.first.x;
  });
  std::string out = "[";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i > 0) out += ", ";
    out += "[" + std::to_string(terms[i].first.x) + ", " + std::to_string(terms[i].first.y) +
           ", \"" + terms[i].second.get_str() + "\"]";
  }
  out += "]";
  return out;
}

BiPoly parse_poly(std::string_view text, const VariableNames& names) {
  if (names.x.empty() || names.y.empty() || names.x == names.y) {
    fail(ErrorKind::ParseError, "variable names must be distinct and nonempty");
  }
  return Parser(text, names).parse();
}

BiPoly parse_json_poly(std::string_view json) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json);
  } catch (const nlohmann::json::exception& ex) {
    fail(ErrorKind::ParseError, ex.what());
  }
  if (!doc.is_array()) fail(ErrorKind::ParseError, "polynomial JSON must be an array of terms");
  BiPoly p;
  for (const auto& t : doc) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_unsigned() || !t[1].is_number_unsigned()) {
      fail(ErrorKind::ParseError, "term must be [i, j, \"c\"] with non-negative exponents");
    }
    Integer c;
    if (t[2].is_string()) {
      if (c.set_str(t[2].get<std::string>(), 10) != 0) {
        fail(ErrorKind::ParseError, "bad coefficient '" + t[2].get<std::string>() + "'");
      }
    } else if (t[2].is_number_integer()) {
      c = Integer(std::to_string(t[2].get<long long>()));
    } else {
      fail(ErrorKind::ParseError, "coefficient must be a decimal string");
    }
    p.add_term(c, t[0].get<unsigned>(), t[1].get<unsigned>());
  }
  return p;
}

std::ostream& operator<<(std::ostream& os, const BiPoly& p) { return os << to_text(p); }

}  // namespace tutte
