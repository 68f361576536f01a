#include "tutte/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tutte/error.hpp"
#include "tutte/recipe.hpp"

namespace tutte {

namespace {

using nlohmann::json;

[[noreturn]] void parse_error(const std::string& what) { fail(ErrorKind::ParseError, what); }

// Splits into non-empty, non-comment lines.
std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == 'c' || line[first] == '#') continue;
    out.push_back(line.substr(first));
  }
  return out;
}

long read_long(std::istringstream& in, const char* what) {
  long v = 0;
  if (!(in >> v)) parse_error(std::string("expected ") + what);
  return v;
}

unsigned read_count(std::istringstream& in, const char* what, long limit) {
  const long v = read_long(in, what);
  if (v < 0 || v > limit) parse_error(std::string(what) + " out of range");
  return static_cast<unsigned>(v);
}

void expect_end(std::istringstream& in, const char* where) {
  std::string extra;
  if (in >> extra) parse_error(std::string("unexpected '") + extra + "' in " + where);
}

unsigned json_count(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer() || doc[key].get<long>() < 0) {
    parse_error(std::string("matroid JSON: '") + key + "' must be a non-negative integer");
  }
  return doc[key].get<unsigned>();
}

std::vector<ElementSet> json_sets(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    parse_error(std::string("matroid JSON: '") + key + "' must be a list of sets");
  }
  std::vector<ElementSet> out;
  for (const json& s : doc[key]) {
    if (!s.is_array()) parse_error("matroid JSON: each set must be a list");
    ElementSet set;
    for (const json& e : s) {
      if (!e.is_number_integer() || e.get<long>() < 0 || e.get<long>() >= 64) {
        parse_error("matroid JSON: element out of range");
      }
      set |= ElementSet::single(e.get<unsigned>());
    }
    out.push_back(set);
  }
  return out;
}

json sets_json(const std::vector<ElementSet>& sets) {
  json out = json::array();
  for (ElementSet s : sets) out.push_back(s.to_vector());
  return out;
}

std::string json_string(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_string()) {
    parse_error(std::string("matroid JSON: '") + key + "' must be a string");
  }
  return doc[key].get<std::string>();
}

}  // namespace

Graph parse_graph(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) parse_error("graph: missing 'p' line");
  std::istringstream head(lines[0]);
  std::string tag;
  head >> tag;
  if (tag != "p") parse_error("graph: first line must start with 'p'");
  const unsigned vertices = read_count(head, "vertex count", 1'000'000);
  const unsigned edges = read_count(head, "edge count", 1'000'000);
  expect_end(head, "the 'p' line");
  if (lines.size() - 1 != edges) {
    parse_error("graph: header promises " + std::to_string(edges) + " edges, found " +
                std::to_string(lines.size() - 1));
  }
  Graph g(vertices);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream in(lines[i]);
    in >> tag;
    if (tag != "e") parse_error("graph: edge lines must start with 'e'");
    const long u = read_long(in, "edge endpoint");
    const long v = read_long(in, "edge endpoint");
    expect_end(in, "an edge line");
    if (u < 0 || v < 0 || u >= vertices || v >= vertices) {
      parse_error("graph: edge endpoint out of range on line " + std::to_string(i + 1));
    }
    g.add_edge(static_cast<unsigned>(u), static_cast<unsigned>(v));
  }
  return g;
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
  return out.str();
}

GFMatrix parse_gf_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tag;
  in >> tag;
  if (tag != "gf") parse_error("matrix: file must start with 'gf'");
  const unsigned p = read_count(in, "field size", 1'000'000);
  if (!is_prime(p)) parse_error("matrix: field size must be prime");
  const unsigned rows = read_count(in, "row count", 4096);
  const unsigned cols = read_count(in, "column count", 64);
  GFMatrix m(p, rows, cols);
  for (unsigned r = 0; r < rows; ++r) {
    for (unsigned c = 0; c < cols; ++c) m.set(r, c, read_long(in, "matrix entry"));
  }
  expect_end(in, "the matrix file");
  return m;
}

std::string format_gf_matrix(const GFMatrix& m) {
  std::ostringstream out;
  out << "gf " << m.prime() << ' ' << m.rows() << ' ' << m.cols() << '\n';
  for (unsigned r = 0; r < m.rows(); ++r) {
    for (unsigned c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m.at(r, c);
    out << '\n';
  }
  return out.str();
}

Matroid parse_matroid_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& ex) {
    parse_error(std::string("matroid JSON: ") + ex.what());
  }
  if (!doc.is_object()) parse_error("matroid JSON: expected an object");
  const std::string kind = json_string(doc, "kind");

  if (kind == "uniform") return uniform_matroid(json_count(doc, "r"), json_count(doc, "n"));
  if (kind == "graphic") {
    Graph g(json_count(doc, "vertices"));
    if (!doc.contains("edges") || !doc["edges"].is_array()) parse_error("matroid JSON: 'edges' missing");
    for (const json& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
        parse_error("matroid JSON: edges are [u, v] pairs");
      }
      const long u = e[0].get<long>();
      const long v = e[1].get<long>();
      if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count()) {
        parse_error("matroid JSON: edge endpoint out of range");
      }
      g.add_edge(static_cast<unsigned>(u), static_cast<unsigned>(v));
    }
    return graphic_matroid(std::move(g));
  }
  if (kind == "linear") {
    const unsigned p = json_count(doc, "p");
    if (!is_prime(p)) parse_error("matroid JSON: 'p' must be prime");
    if (!doc.contains("rows") || !doc["rows"].is_array()) parse_error("matroid JSON: 'rows' missing");
    std::vector<std::vector<long>> rows;
    for (const json& r : doc["rows"]) {
      if (!r.is_array()) parse_error("matroid JSON: each row must be a list");
      std::vector<long> row;
      for (const json& v : r) {
        if (!v.is_number_integer()) parse_error("matroid JSON: matrix entries must be integers");
        row.push_back(v.get<long>());
      }
      if (!rows.empty() && row.size() != rows.front().size()) {
        parse_error("matroid JSON: rows differ in length");
      }
      rows.push_back(std::move(row));
    }
    return linear_matroid(GFMatrix(p, rows));
  }
  if (kind == "sparse_paving") {
    return sparse_paving_matroid(json_count(doc, "r"), json_count(doc, "n"),
                                 json_sets(doc, "circuit_hyperplanes"));
  }
  if (kind == "paving") {
    return paving_matroid(json_count(doc, "r"), json_count(doc, "n"), json_sets(doc, "blocks"));
  }
  if (kind == "bases") {
    return basis_matroid(json_count(doc, "r"), json_count(doc, "n"), json_sets(doc, "bases"));
  }
  if (kind == "lattice_path") {
    return lattice_path_matroid(json_string(doc, "lower"), json_string(doc, "upper"));
  }
  if (kind == "recipe") return build_recipe(json_string(doc, "recipe"));
  parse_error("matroid JSON: unknown kind '" + kind + "'");
}

std::string matroid_to_json(const Matroid& m) {
  json doc;
  if (const auto* u = m.as<UniformOracle>()) {
    doc = {{"kind", "uniform"}, {"r", u->r()}, {"n", m.size()}};
  } else if (const auto* g = m.as<GraphicOracle>()) {
    json edges = json::array();
    for (const Edge& e : g->graph().edges()) edges.push_back({e.u, e.v});
    doc = {{"kind", "graphic"}, {"vertices", g->graph().vertex_count()}, {"edges", edges}};
  } else if (const auto* l = m.as<LinearOracle>()) {
    json rows = json::array();
    const GFMatrix& a = l->matrix();
    for (unsigned r = 0; r < a.rows(); ++r) {
      json row = json::array();
      for (unsigned c = 0; c < a.cols(); ++c) row.push_back(a.at(r, c));
      rows.push_back(row);
    }
    doc = {{"kind", "linear"}, {"p", a.prime()}, {"rows", rows}};
  } else if (const auto* s = m.as<SparsePavingOracle>()) {
    doc = {{"kind", "sparse_paving"},
           {"r", s->r()},
           {"n", m.size()},
           {"circuit_hyperplanes", sets_json(s->circuit_hyperplanes())}};
  } else if (const auto* p = m.as<PavingOracle>()) {
    doc = {{"kind", "paving"}, {"r", p->r()}, {"n", m.size()}, {"blocks", sets_json(p->blocks())}};
  } else if (const auto* lp = m.as<LatticePathOracle>()) {
    doc = {{"kind", "lattice_path"}, {"lower", lp->lower()}, {"upper", lp->upper()}};
  } else {
    doc = {{"kind", "bases"}, {"r", m.rank()}, {"n", m.size()}, {"bases", sets_json(bases(m))}};
  }
  return doc.dump();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace tutte
