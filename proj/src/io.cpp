#include "hyperstab/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace hyperstab::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field \"") + key + "\"");
  return *it;
}

int small_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  auto v = j.get<std::int64_t>();
  if (v < 0 || v > 64) throw InputError(std::string(what) + " out of range");
  return static_cast<int>(v);
}

hyper::HypersimplexConfig header(const Json& j) {
  const int k = small_int(field(j, "k"), "k"), n = small_int(field(j, "n"), "n");
  if (k > n) throw InputError("need k <= n");
  if (n > 31) throw InputError("n is capped at 31");
  try {
    return hyper::HypersimplexConfig(k, n);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
}

Rational rational(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw InputError("rationals are written as \"p/q\" strings");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::exception&) {
    throw InputError("bad rational \"" + j.get<std::string>() + "\"");
  }
}

Json subset_json(const hyper::KSubset& s) {
  Json a = Json::array();
  for (int v : s) a.push_back(v);
  return a;
}

Json cell_json(const hyper::HypersimplexConfig& cfg, const geom::Cell& c) {
  Json a = Json::array();
  for (int v : c.vertex_indices) a.push_back(subset_json(cfg.subset(v)));
  return a;
}

int vertex_of(const hyper::HypersimplexConfig& cfg, const Json& j) {
  if (!j.is_array()) throw InputError("a vertex is an array of elements");
  hyper::KSubset s;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InputError("subset elements must be integers");
    s.push_back(x.get<int>());
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1 || s[i] > cfg.n() || (i > 0 && s[i - 1] >= s[i])) {
      throw InputError("subset " + hyper::to_string(s) + " is not an ascending subset of [n]");
    }
  }
  if (static_cast<int>(s.size()) != cfg.k()) throw InputError("subset " + hyper::to_string(s) + " has the wrong size");
  return cfg.index_of(s);
}

Json homology_json(const pair::Homology& h) {
  Json j;
  j["minus_one"] = h.minus_one;
  j["reduced_betti"] = h.reduced_betti;
  return j;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string face_label(const hyper::HypersimplexConfig& cfg, const geom::Cell& c) {
  std::string out;
  for (std::size_t i = 0; i < c.vertex_indices.size(); ++i) {
    if (i) out += ' ';
    for (int e : cfg.subset(c.vertex_indices[i])) out += std::to_string(e);
  }
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

bool inline_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& x : j) {
    if (x.is_object()) return false;
    if (x.is_array()) {
      for (const auto& y : x) {
        if (y.is_structured()) return false;
      }
    }
  }
  return j.dump().size() <= 100;
}

void dump_into(const Json& j, int indent, std::string& out) {
  const std::string pad(indent + 2, ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      out += pad + Json(it.key()).dump() + ": ";
      dump_into(it.value(), indent + 2, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + "}";
  } else if (j.is_array() && !j.empty() && !inline_array(j)) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      dump_into(j[i], indent + 2, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + "]";
  } else {
    out += j.dump();
  }
}

}  // namespace

Json subdivision_json(const hyper::HypersimplexConfig& cfg, const geom::Subdivision& s) {
  Json j;
  j["k"] = cfg.k();
  j["n"] = cfg.n();
  Json cells = Json::array();
  for (const auto& c : s.maximal_cells) cells.push_back(cell_json(cfg, c));
  j["cells"] = std::move(cells);
  return j;
}

SubdivisionFile parse_subdivision(const Json& j) {
  SubdivisionFile f;
  f.cfg = header(j);
  const Json& cells = field(j, "cells");
  if (!cells.is_array() || cells.empty()) throw InputError("\"cells\" must be a nonempty array");
  std::vector<geom::Mask> masks;
  std::set<geom::Mask> seen;
  for (const auto& c : cells) {
    if (!c.is_array() || c.empty()) throw InputError("each cell is a nonempty array of subsets");
    geom::Mask m = 0;
    for (const auto& v : c) {
      int idx = vertex_of(f.cfg, v);
      if (m & geom::bit(idx)) throw InputError("cell repeats a vertex");
      m |= geom::bit(idx);
    }
    if (!seen.insert(m).second) throw InputError("duplicate cell");
    masks.push_back(m);
  }
  f.subdivision = geom::make_subdivision(f.cfg.config(), masks);
  try {
    geom::validate_subdivision(f.subdivision);
  } catch (const geom::StructuralError& e) {
    throw InputError(std::string("not a subdivision: ") + e.what());
  }
  return f;
}

Json weights_json(const hyper::HypersimplexConfig& cfg, const geom::Lifting& l) {
  Json j;
  j["k"] = cfg.k();
  j["n"] = cfg.n();
  Json w = Json::object();
  for (std::size_t v = 0; v < cfg.size(); ++v) w[hyper::to_string(cfg.subset(v))] = to_string(l.values[v]);
  j["weights"] = std::move(w);
  return j;
}

geom::Lifting parse_weights(const Json& j, hyper::HypersimplexConfig& cfg) {
  cfg = header(j);
  const Json& w = field(j, "weights");
  if (!w.is_object()) throw InputError("\"weights\" must be an object");
  geom::Lifting l;
  l.values.resize(cfg.size());
  std::vector<bool> have(cfg.size(), false);
  for (auto it = w.begin(); it != w.end(); ++it) {
    hyper::KSubset s;
    try {
      s = hyper::parse_subset(it.key());
    } catch (const std::exception& e) {
      throw InputError("bad weight key \"" + it.key() + "\": " + e.what());
    }
    const int idx = static_cast<int>(s.size()) == cfg.k() ? cfg.index_of(s) : -1;
    if (idx < 0) throw InputError("weight key \"" + it.key() + "\" is not a k-subset of [n]");
    if (have[idx]) throw InputError("weight key \"" + it.key() + "\" repeated");
    have[idx] = true;
    l.values[idx] = rational(it.value());
  }
  for (std::size_t v = 0; v < cfg.size(); ++v) {
    if (!have[v]) throw InputError("no weight for " + hyper::to_string(cfg.subset(v)));
  }
  return l;
}

Json matrix_json(const degen::TMatrix& m) {
  Json j;
  j["k"] = m.k;
  j["n"] = m.n;
  Json rows = Json::array();
  for (const auto& row : m.entries) {
    Json r = Json::array();
    for (const auto& p : row) {
      Json c = Json::array();
      for (const auto& q : p.coefficients()) c.push_back(to_string(q));
      r.push_back(std::move(c));
    }
    rows.push_back(std::move(r));
  }
  j["entries"] = std::move(rows);
  return j;
}

degen::TMatrix parse_matrix(const Json& j) {
  degen::TMatrix m;
  m.k = small_int(field(j, "k"), "k");
  m.n = small_int(field(j, "n"), "n");
  const Json& rows = field(j, "entries");
  if (!rows.is_array() || static_cast<int>(rows.size()) != m.k) throw InputError("\"entries\" must have k rows");
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != m.n) throw InputError("each row must have n entries");
    std::vector<degen::TPolynomial> r;
    for (const auto& p : row) {
      if (!p.is_array()) throw InputError("an entry is an array of coefficients");
      std::vector<Rational> c;
      for (const auto& q : p) c.push_back(rational(q));
      r.emplace_back(std::move(c));
    }
    m.entries.push_back(std::move(r));
  }
  try {
    m.validate();
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  return m;
}

Json strata_json(const pair::MatroidSubdivision& ms, const pair::StrataPoset& sp) {
  Json j;
  j["k"] = ms.k();
  j["n"] = ms.n();
  Json strata = Json::array();
  for (std::size_t i = 0; i < sp.strata.size(); ++i) {
    const auto& st = sp.strata[i];
    Json s;
    s["id"] = i;
    s["dim"] = st.stratum_dim;
    s["divisors"] = st.divisor_labels;
    s["face"] = cell_json(ms.cfg(), st.face);
    strata.push_back(std::move(s));
  }
  j["strata"] = std::move(strata);
  Json cov = Json::array();
  for (auto [a, b] : sp.covering) cov.push_back(Json::array({a, b}));
  j["covering"] = std::move(cov);
  return j;
}

Json dual_complex_json(const pair::MatroidSubdivision& ms, const pair::DualComplex& dc) {
  Json j;
  j["k"] = ms.k();
  j["n"] = ms.n();
  Json cells = Json::array();
  const auto sp = pair::strata_poset(ms);
  for (std::size_t i = 0; i < dc.cells.size(); ++i) {
    const auto& c = dc.cells[i];
    Json x;
    x["id"] = i;
    x["dim"] = c.dim;
    x["boundary"] = c.boundary;
    x["stratum"] = c.stratum;
    x["divisors"] = sp.strata[c.stratum].divisor_labels;
    cells.push_back(std::move(x));
  }
  j["cells"] = std::move(cells);
  Json faces = Json::array();
  for (auto [a, b] : dc.faces) faces.push_back(Json::array({a, b}));
  j["faces"] = std::move(faces);
  j["face_counts"] = {{"sigma", dc.face_counts(false)}, {"boundary", dc.face_counts(true)}};
  j["homology"] = {{"sigma", homology_json(pair::sigma_homology(dc))},
                   {"boundary", homology_json(pair::boundary_homology(dc))}};
  return j;
}

std::string strata_dot(const pair::MatroidSubdivision& ms, const pair::StrataPoset& sp) {
  std::ostringstream out;
  out << "digraph strata {\n  rankdir=TB;\n  node [shape=box];\n";
  std::set<int> dims;
  for (const auto& st : sp.strata) dims.insert(st.stratum_dim);
  for (auto it = dims.rbegin(); it != dims.rend(); ++it) {
    out << "  subgraph cluster_dim" << *it << " {\n    label=\"dim " << *it << "\";\n    rank=same;\n";
    for (std::size_t i = 0; i < sp.strata.size(); ++i) {
      const auto& st = sp.strata[i];
      if (st.stratum_dim != *it) continue;
      out << "    s" << i << " [label=\"" << dot_escape(face_label(ms.cfg(), st.face)) << "\", dim=" << st.stratum_dim
          << ", divisors=\"" << join(st.divisor_labels) << "\"];\n";
    }
    out << "  }\n";
  }
  for (auto [a, b] : sp.covering) out << "  s" << a << " -> s" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string dual_complex_dot(const pair::MatroidSubdivision& ms, const pair::DualComplex& dc) {
  const auto sp = pair::strata_poset(ms);
  std::ostringstream out;
  out << "graph dual_complex {\n";
  std::set<int> dims;
  for (const auto& c : dc.cells) dims.insert(c.dim);
  for (int d : dims) {
    out << "  subgraph cluster_dim" << d << " {\n    label=\"dim " << d << "\";\n    rank=same;\n";
    for (std::size_t i = 0; i < dc.cells.size(); ++i) {
      const auto& c = dc.cells[i];
      if (c.dim != d) continue;
      const auto& labels = sp.strata[c.stratum].divisor_labels;
      out << "    c" << i << " [label=\"" << (c.boundary ? "d" : "") << "s" << c.stratum << "\", dim=" << c.dim
          << ", boundary=" << (c.boundary ? "true" : "false") << ", divisors=\"" << join(labels) << "\""
          << (c.boundary ? ", shape=diamond" : "") << "];\n";
    }
    out << "  }\n";
  }
  // Only codimension-one incidences are drawn.
  for (auto [a, b] : dc.faces) {
    if (dc.cells[a].dim == dc.cells[b].dim + 1) out << "  c" << a << " -- c" << b << ";\n";
  }
  out << "}\n";
  return out.str();
}

Json read_json(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw InputError("cannot read " + p.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(p.string() + ": " + e.what());
  }
}

std::string dump(const Json& j) {
  std::string out;
  dump_into(j, 0, out);
  out += '\n';
  return out;
}

void write_text(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + p.string());
}

}  // namespace hyperstab::io
