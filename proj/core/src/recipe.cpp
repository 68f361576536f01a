#include "tutte/recipe.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <variant>

#include "tutte/error.hpp"

namespace tutte {

namespace {

using Row = std::vector<long>;
using Table = std::vector<Row>;

struct SetLit {
  Row elements;
};
struct Word {
  std::string text;
};

using Value = std::variant<Matroid, long, SetLit, Table, Word>;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Matroid parse() {
    Value v = value();
    skip_space();
    if (pos_ != text_.size()) error("trailing input");
    if (!std::holds_alternative<Matroid>(v)) error("a recipe must be a call");
    return std::get<Matroid>(std::move(v));
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::ParseError, "recipe: " + what + " at offset " + std::to_string(pos_));
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

  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }

  bool at_number() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) ||
           (c == '-' && pos_ + 1 < text_.size() &&
            std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])));
  }

  long number() {
    skip_space();
    const std::size_t start = pos_;
    if (text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 12) error("number too large");
    return std::stol(digits);
  }

  Row numbers_until(char stop1, char stop2) {
    Row row;
    while (true) {
      skip_space();
      if (pos_ < text_.size() && (text_[pos_] == stop1 || text_[pos_] == stop2)) return row;
      if (!at_number()) error("expected a number");
      row.push_back(number());
    }
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) error("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  Value value() {
    skip_space();
    if (pos_ >= text_.size()) error("unexpected end");
    if (at_number()) return number();
    if (accept('{')) {
      SetLit s{numbers_until('}', '}')};
      expect('}');
      return s;
    }
    if (accept('[')) {
      Table t;
      do {
        t.push_back(numbers_until(';', ']'));
      } while (accept(';'));
      expect(']');
      return t;
    }
    std::string name = identifier();
    if (!accept('(')) return Word{std::move(name)};
    std::vector<Value> args;
    if (!accept(')')) {
      do {
        args.push_back(value());
      } while (accept(','));
      expect(')');
    }
    return call(name, args);
  }

  Matroid call(const std::string& name, std::vector<Value>& args);

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Argument access with type checks.
class Args {
 public:
  Args(const std::string& fn, std::vector<Value>& v) : fn_(fn), v_(v) {}

  void arity(std::size_t n) const {
    if (v_.size() != n) {
      bad("takes " + std::to_string(n) + " argument(s), got " + std::to_string(v_.size()));
    }
  }
  std::size_t size() const { return v_.size(); }

  const Matroid& matroid(std::size_t i) const { return get<Matroid>(i, "a matroid"); }
  unsigned count(std::size_t i) const {
    const long v = get<long>(i, "an integer");
    if (v < 0 || v > 1'000'000) bad("argument " + std::to_string(i + 1) + " out of range");
    return static_cast<unsigned>(v);
  }
  const Table& table(std::size_t i) const { return get<Table>(i, "a table"); }
  const std::string& word(std::size_t i) const { return get<Word>(i, "a word").text; }
  ElementSet set(std::size_t i) const {
    ElementSet s;
    for (long e : get<SetLit>(i, "a set").elements) s |= element(e);
    return s;
  }

  ElementSet element(long e) const {
    if (e < 0 || e >= static_cast<long>(ElementSet::kCapacity)) bad("element out of range");
    return ElementSet::single(static_cast<unsigned>(e));
  }

  std::vector<ElementSet> sets(std::size_t i) const {
    std::vector<ElementSet> out;
    for (const Row& row : table(i)) {
      ElementSet s;
      for (long e : row) {
        if (s.contains(static_cast<unsigned>(e))) bad("repeated element in a set");
        s |= element(e);
      }
      out.push_back(s);
    }
    return out;
  }

  [[noreturn]] void bad(const std::string& what) const {
    fail(ErrorKind::ParseError, "recipe: " + fn_ + " " + what);
  }

 private:
  template <typename T>
  const T& get(std::size_t i, const char* what) const {
    if (i >= v_.size() || !std::holds_alternative<T>(v_[i])) {
      bad("expects " + std::string(what) + " as argument " + std::to_string(i + 1));
    }
    return std::get<T>(v_[i]);
  }

  const std::string& fn_;
  std::vector<Value>& v_;
};

Triangle triangle(const Args& a, std::size_t i) {
  const std::vector<unsigned> t = a.set(i).to_vector();
  if (t.size() != 3) a.bad("triangle needs three elements");
  return Triangle{t[0], t[1], t[2]};
}

Matroid Parser::call(const std::string& name, std::vector<Value>& values) {
  const Args a(name, values);
  using Builder = std::function<Matroid(const Args&)>;
  static const std::map<std::string, Builder, std::less<>> table{
      {"uniform", [](const Args& a) { a.arity(2); return uniform_matroid(a.count(0), a.count(1)); }},
      {"graph",
       [](const Args& a) {
         a.arity(2);
         Graph g(a.count(0));
         for (const Row& row : a.table(1)) {
           if (row.empty()) continue;
           if (row.size() != 2 || row[0] < 0 || row[1] < 0 ||
               row[0] >= static_cast<long>(g.vertex_count()) ||
               row[1] >= static_cast<long>(g.vertex_count())) {
             a.bad("edge rows must be two vertex indices");
           }
           g.add_edge(static_cast<unsigned>(row[0]), static_cast<unsigned>(row[1]));
         }
         return graphic_matroid(std::move(g));
       }},
      {"complete", [](const Args& a) { a.arity(1); return graphic_matroid(graphs::complete(a.count(0))); }},
      {"bipartite",
       [](const Args& a) {
         a.arity(2);
         return graphic_matroid(graphs::complete_bipartite(a.count(0), a.count(1)));
       }},
      {"wheelgraph", [](const Args& a) { a.arity(1); return graphic_matroid(graphs::wheel(a.count(0))); }},
      {"cyclegraph", [](const Args& a) { a.arity(1); return graphic_matroid(graphs::cycle(a.count(0))); }},
      {"grid",
       [](const Args& a) { a.arity(2); return graphic_matroid(graphs::grid(a.count(0), a.count(1))); }},
      {"gf",
       [](const Args& a) {
         a.arity(2);
         Table rows = a.table(1);
         if (rows.size() == 1 && rows[0].empty()) rows.clear();
         for (const Row& r : rows) {
           if (r.size() != rows.front().size()) a.bad("matrix rows differ in length");
         }
         return linear_matroid(GFMatrix(a.count(0), rows));
       }},
      {"sparse",
       [](const Args& a) {
         a.arity(3);
         return sparse_paving_matroid(a.count(0), a.count(1), a.sets(2));
       }},
      {"paving",
       [](const Args& a) { a.arity(3); return paving_matroid(a.count(0), a.count(1), a.sets(2)); }},
      {"bases",
       [](const Args& a) { a.arity(3); return basis_matroid(a.count(0), a.count(1), a.sets(2)); }},
      {"latticepath",
       [](const Args& a) { a.arity(2); return lattice_path_matroid(a.word(0), a.word(1)); }},
      {"catalan", [](const Args& a) { a.arity(1); return catalan_matroid(a.count(0)); }},
      {"cyclic",
       [](const Args& a) {
         a.arity(3);
         const unsigned n = a.count(0);
         std::vector<std::vector<unsigned>> base;
         for (const Row& row : a.table(2)) {
           std::vector<unsigned> b;
           for (long e : row) {
             if (e < 0) a.bad("negative residue");
             b.push_back(static_cast<unsigned>(e));
           }
           base.push_back(std::move(b));
         }
         return sparse_paving_matroid(a.count(1), n, develop_cyclic(n, base));
       }},
      {"witt12", [](const Args& a) { a.arity(0); return sparse_paving_matroid(6, 12, witt12_blocks()); }},
      {"dual", [](const Args& a) { a.arity(1); return dual(a.matroid(0)); }},
      {"delete", [](const Args& a) { a.arity(2); return delete_element(a.matroid(0), a.count(1)); }},
      {"contract", [](const Args& a) { a.arity(2); return contract_element(a.matroid(0), a.count(1)); }},
      {"restrict", [](const Args& a) { a.arity(2); return restriction(a.matroid(0), a.set(1)); }},
      {"relax", [](const Args& a) { a.arity(2); return relax(a.matroid(0), a.set(1)); }},
      {"freeext", [](const Args& a) { a.arity(1); return free_extension(a.matroid(0)); }},
      {"parallel", [](const Args& a) { a.arity(2); return add_parallel(a.matroid(0), a.count(1)); }},
      {"sum",
       [](const Args& a) {
         std::vector<Matroid> parts;
         for (std::size_t i = 0; i < a.size(); ++i) parts.push_back(a.matroid(i));
         return direct_sum(parts);
       }},
      {"twosum",
       [](const Args& a) {
         a.arity(4);
         return two_sum(PointedMatroid(a.matroid(0), a.count(1)),
                        PointedMatroid(a.matroid(2), a.count(3)));
       }},
      {"deltasum",
       [](const Args& a) {
         a.arity(4);
         return delta_sum(a.matroid(0), triangle(a, 1), a.matroid(2), triangle(a, 3));
       }},
      {"thicken", [](const Args& a) { a.arity(2); return thicken(a.matroid(0), a.count(1)); }},
      {"stretch", [](const Args& a) { a.arity(2); return stretch(a.matroid(0), a.count(1)); }},
      {"tensor",
       [](const Args& a) {
         a.arity(3);
         return tensor(a.matroid(0), PointedMatroid(a.matroid(1), a.count(2)));
       }},
  };
  const auto it = table.find(name);
  if (it == table.end()) error("unknown operation '" + name + "'");
  return it->second(a);
}

}  // namespace

Matroid build_recipe(std::string_view recipe) { return Parser(recipe).parse(); }

std::vector<ElementSet> develop_cyclic(unsigned n, const std::vector<std::vector<unsigned>>& base) {
  if (n == 0 || n > ElementSet::kCapacity) fail(ErrorKind::InvalidParameters, "cyclic: bad modulus");
  std::set<ElementSet> seen;
  std::vector<ElementSet> out;
  for (const auto& block : base) {
    for (unsigned shift = 0; shift < n; ++shift) {
      ElementSet s;
      for (unsigned e : block) s |= ElementSet::single((e + shift) % n);
      if (s.size() != block.size()) fail(ErrorKind::InvalidParameters, "cyclic: repeated residue");
      if (seen.insert(s).second) out.push_back(s);
    }
  }
  return out;
}

std::vector<ElementSet> witt12_blocks() {
  constexpr long p = 11;
  constexpr unsigned inf = 11;
  auto inverse = [](long a) {
    for (long b = 1; b < p; ++b) {
      if (a * b % p == 1) return b;
    }
    return 0L;
  };
  // z -> (a z + b) / (c z + d) on GF(11) plus a point at infinity.
  auto apply = [&](long a, long b, long c, long d, unsigned z) -> unsigned {
    if (z == inf) return c == 0 ? inf : static_cast<unsigned>(a * inverse(c) % p);
    const long den = (c * z + d) % p;
    if (den == 0) return inf;
    return static_cast<unsigned>((a * z + b) % p * inverse(den) % p);
  };
  const std::set<long> squares{1, 3, 4, 5, 9};
  const std::vector<unsigned> base{inf, 1, 3, 4, 5, 9};
  std::set<ElementSet> orbit;
  for (long a = 0; a < p; ++a) {
    for (long b = 0; b < p; ++b) {
      for (long c = 0; c < p; ++c) {
        for (long d = 0; d < p; ++d) {
          const long det = ((a * d - b * c) % p + p) % p;
          if (squares.count(det) == 0) continue;
          ElementSet s;
          for (unsigned z : base) s |= ElementSet::single(apply(a, b, c, d, z));
          orbit.insert(s);
        }
      }
    }
  }
  return {orbit.begin(), orbit.end()};
}

}  // namespace tutte
