// hyperstab: command-line front end.  Exit status 0 on success, 1 when a
// checked property fails (a JSON report is printed), 2 on malformed input.

#include <omp.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "hyperstab/enumeration.hpp"
#include "hyperstab/homology_lab.hpp"
#include "hyperstab/io.hpp"
#include "hyperstab/verify.hpp"

namespace fs = std::filesystem;
using namespace hyperstab;
using io::Json;

namespace {

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::string output;  // empty: stdout
  std::uint64_t seed = 1;
  std::vector<std::int64_t> grid{0, 1, 2};
  int threads = 1;
};

// A property failure; the report goes to the output like a normal result.
struct Violation {
  Json report;
};

Json run_header(const RunConfig& rc) {
  Json j;
  j["hyperstab"] = io::kVersion;
  j["command"] = rc.command;
  j["seed"] = rc.seed;
  return j;
}

void emit(const RunConfig& rc, const std::string& text) {
  if (rc.output.empty()) {
    std::cout << text;
  } else {
    io::write_text(rc.output, text);
  }
}

io::SubdivisionFile load(const std::string& path) {
  try {
    return io::parse_subdivision(io::read_json(path));
  } catch (const io::InputError& e) {
    throw io::InputError(path + ": " + e.what());
  }
}

pair::MatroidSubdivision load_matroid(const RunConfig& rc, const std::string& path) {
  auto f = load(path);
  const auto v = hyper::check_matroid_subdivision(f.subdivision, f.cfg);
  if (!v.ok) {
    Json r = run_header(rc);
    r["input"] = path;
    r["error"] = "not a matroid subdivision";
    r["cell"] = v.cell;
    r["witness"] = {f.cfg.subset(v.witness->first), f.cfg.subset(v.witness->second)};
    throw Violation{r};
  }
  return pair::MatroidSubdivision(f.cfg, f.subdivision);
}

Json values_json(const geom::Lifting& l) {
  Json a = Json::array();
  for (const auto& v : l.values) a.push_back(to_string(v));
  return a;
}

std::vector<std::int64_t> parse_grid(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw io::InputError("bad grid value \"" + item + "\"");
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.empty()) throw io::InputError("empty grid");
  return out;
}

void cmd_subdivide(const RunConfig& rc, const std::string& weights) {
  hyper::HypersimplexConfig cfg(2, 4);
  const auto lift = io::parse_weights(io::read_json(weights), cfg);
  emit(rc, io::dump(io::subdivision_json(cfg, cfg.kernel().subdivide(lift))));
}

void cmd_from_matrix(const RunConfig& rc) {
  const auto m = io::parse_matrix(io::read_json(rc.inputs.at(0)));
  std::optional<degen::FamilySubdivision> found;
  try {
    found = degen::subdivision_from_matrix(m);
  } catch (const degen::DegenerateFamily& e) {
    Json r = run_header(rc);
    r["error"] = e.what();
    r["subset"] = e.subset;
    throw Violation{r};
  }
  const auto& fam = *found;
  const auto gp = degen::general_position_check(m);
  Json r = run_header(rc);
  r["lifting"] = io::weights_json(fam.cfg, fam.lifting)["weights"];
  r["subdivision"] = io::subdivision_json(fam.cfg, fam.subdivision);
  r["matroid"] = hyper::is_matroid_subdivision(fam.subdivision, fam.cfg);
  r["general_position"] = gp.ok;
  if (gp.witness) r["general_position_witness"] = *gp.witness;
  emit(rc, io::dump(r));
}

void cmd_check_matroid(const RunConfig& rc) {
  const auto f = load(rc.inputs.at(0));
  const auto v = hyper::check_matroid_subdivision(f.subdivision, f.cfg);
  Json r = run_header(rc);
  r["matroid"] = v.ok;
  if (!v.ok) {
    r["cell"] = v.cell;
    r["witness"] = {f.cfg.subset(v.witness->first), f.cfg.subset(v.witness->second)};
    throw Violation{r};
  }
  emit(rc, io::dump(r));
}

void cmd_coherence(const RunConfig& rc) {
  const auto f = load(rc.inputs.at(0));
  const auto res = geom::coherence_certificate(f.subdivision);
  Json r = run_header(rc);
  r["coherent"] = res.certificate.has_value();
  if (!res.certificate) {
    r["report"] = "the strict secondary-cone inequalities are infeasible";
    throw Violation{r};
  }
  r["certificate"] = io::weights_json(f.cfg, *res.certificate);
  emit(rc, io::dump(r));
}

void cmd_strata(const RunConfig& rc, bool dot) {
  const auto ms = load_matroid(rc, rc.inputs.at(0));
  const auto sp = pair::strata_poset(ms);
  if (dot) {
    emit(rc, io::strata_dot(ms, sp));
  } else {
    Json r = run_header(rc);
    r["poset"] = io::strata_json(ms, sp);
    emit(rc, io::dump(r));
  }
}

void cmd_dual_complex(const RunConfig& rc, bool dot) {
  const auto ms = load_matroid(rc, rc.inputs.at(0));
  const auto dc = pair::dual_complex(ms);
  if (dot) {
    emit(rc, io::dual_complex_dot(ms, dc));
  } else {
    Json r = run_header(rc);
    r["dual_complex"] = io::dual_complex_json(ms, dc);
    emit(rc, io::dump(r));
  }
}

void cmd_restrict(const RunConfig& rc, const std::string& facet) {
  const auto f = load(rc.inputs.at(0));
  hyper::FacetLabel label;
  try {
    label = hyper::parse_facet(facet);
  } catch (const std::exception& e) {
    throw io::InputError(std::string("bad facet: ") + e.what());
  }
  if (label.i < 1 || label.i > f.cfg.n()) throw io::InputError("facet index out of range");
  const auto res = hyper::restrict_to_facet(f.subdivision, f.cfg, label);
  emit(rc, io::dump(io::subdivision_json(res.target, res.subdivision)));
}

void cmd_homology(const RunConfig& rc) {
  const auto ms = load_matroid(rc, rc.inputs.at(0));
  const auto c = homology::strata_cochain_complex(ms);
  const auto dims = homology::cohomology_dims(c);
  bool vanishing = !dims.empty() && dims[0] == 1;
  for (std::size_t i = 1; i < dims.size(); ++i) vanishing = vanishing && dims[i] == 0;
  Json r = run_header(rc);
  r["first_degree"] = c.first_degree;
  r["sizes"] = c.sizes();
  r["dims"] = dims;
  r["vanishing"] = vanishing;
  if (!vanishing) throw Violation{r};
  emit(rc, io::dump(r));
}

void cmd_exactness(const RunConfig& rc, int level) {
  if (level < 0) throw io::InputError("level must be nonnegative");
  const auto f = load(rc.inputs.at(0));
  homology::CellularComplex cc(f.subdivision);
  const auto points = homology::lattice_points(f.cfg.k(), f.cfg.n(), level);
  std::vector<Json> rows(points.size());
  std::vector<char> ok(points.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto c = cc.summand(points[i], level);
    const auto dims = homology::cohomology_dims(c);
    ok[i] = homology::is_exact(c);
    Json row;
    row["x"] = points[i];
    row["sizes"] = c.sizes();
    row["dims"] = dims;
    row["exact"] = static_cast<bool>(ok[i]);
    rows[i] = std::move(row);
  }
  Json r = run_header(rc);
  r["level"] = level;
  r["points"] = rows;
  const bool all = std::all_of(ok.begin(), ok.end(), [](char c) { return c; });
  r["all_exact"] = all;
  if (!all) throw Violation{r};
  emit(rc, io::dump(r));
}

void cmd_canonical_dim(const RunConfig& rc, int k, int n, bool basis) {
  const auto cb = homology::canonical_basis_kernel(k, n);
  if (!basis) {
    emit(rc, std::to_string(cb.dimension) + "\n");
    return;
  }
  Json r = run_header(rc);
  r["k"] = k;
  r["n"] = n;
  r["dimension"] = cb.dimension;
  r["image_rank"] = cb.image_rank;
  r["kernel_equals_image"] = cb.kernel_equals_image;
  Json rows = Json::array();
  for (const auto& v : cb.basis) {
    Json row = Json::array();
    for (const auto& q : v) row.push_back(to_string(q));
    rows.push_back(std::move(row));
  }
  r["basis"] = std::move(rows);
  emit(rc, io::dump(r));
}

void cmd_germs(const RunConfig& rc) {
  std::vector<pair::MatroidSubdivision> inputs;
  for (const auto& p : rc.inputs) inputs.push_back(load_matroid(rc, p));
  const auto catalog = pair::germ_catalog(inputs);
  Json r = run_header(rc);
  r["inputs"] = rc.inputs;
  Json classes = Json::array();
  for (const auto& g : catalog) {
    const auto& ms = inputs[g.subdivision];
    Json c;
    c["key"] = g.canonical_key;
    c["multiplicity"] = g.multiplicity;
    Json rep;
    rep["input"] = rc.inputs[g.subdivision];
    Json face = Json::array();
    for (int v : ms.faces().faces[g.representative.face_index].vertex_indices) face.push_back(ms.cfg().subset(v));
    rep["face"] = std::move(face);
    rep["vertex"] = ms.cfg().subset(g.representative.vertex);
    rep["quotient_rank"] = g.representative.quotient_rank;
    rep["cones"] = g.representative.local_cones.size();
    c["representative"] = std::move(rep);
    classes.push_back(std::move(c));
  }
  r["classes"] = std::move(classes);
  r["class_count"] = catalog.size();
  emit(rc, io::dump(r));
}

void cmd_enumerate(const RunConfig& rc, int k, int n, int sample, int max_degree) {
  if (rc.output.empty()) throw io::InputError("enumerate needs --output DIR");
  enumerate::Inventory inv;
  try {
    inv = sample > 0 ? enumerate::sample_matroid_subdivisions(k, n, sample, rc.seed, max_degree)
                     : enumerate::enumerate_regular_subdivisions(k, n, rc.grid);
  } catch (const hyper::ParameterError& e) {
    throw io::InputError(e.what());
  }
  const fs::path dir(rc.output);
  fs::create_directories(dir);
  Json index = run_header(rc);
  index["k"] = k;
  index["n"] = n;
  index["sampled"] = inv.sampled;
  if (inv.sampled) {
    index["max_degree"] = max_degree;
  } else {
    index["grid"] = inv.grid;
  }
  Json entries = Json::array();
  int matroid = 0;
  for (std::size_t i = 0; i < inv.entries.size(); ++i) {
    const auto& e = inv.entries[i];
    std::ostringstream name;
    name << "sub_" << std::setw(4) << std::setfill('0') << i << ".json";
    io::write_text(dir / name.str(), io::dump(io::subdivision_json(inv.cfg, e.subdivision)));
    Json x;
    x["file"] = name.str();
    x["cells"] = e.cells;
    x["matroid"] = e.matroid;
    x["certified"] = e.certified;
    x["witness"] = values_json(e.witness);
    if (e.certificate) x["certificate"] = values_json(*e.certificate);
    entries.push_back(std::move(x));
    matroid += e.matroid;
  }
  index["count"] = inv.entries.size();
  index["matroid_count"] = matroid;
  index["entries"] = std::move(entries);
  io::write_text(dir / "index.json", io::dump(index));
  Json summary = run_header(rc);
  summary["directory"] = rc.output;
  summary["count"] = inv.entries.size();
  summary["matroid_count"] = matroid;
  std::cout << io::dump(summary);
}

geom::Lifting parse_values(const Json& j, std::size_t size) {
  if (!j.is_array() || j.size() != size) throw io::InputError("lifting has the wrong length");
  geom::Lifting l;
  for (const auto& v : j) {
    if (!v.is_string()) throw io::InputError("lifting values are rational strings");
    try {
      l.values.push_back(parse_rational(v.get<std::string>()));
    } catch (const std::exception&) {
      throw io::InputError("bad rational in lifting");
    }
  }
  return l;
}

void cmd_verify_all(const RunConfig& rc, int max_level) {
  const fs::path dir(rc.inputs.at(0));
  if (!fs::is_directory(dir)) throw io::InputError(dir.string() + " is not a directory");
  struct Item {
    std::string file;
    verify::SuiteOptions opt;
  };
  std::vector<Item> items;
  const fs::path index_path = dir / "index.json";
  if (fs::exists(index_path)) {
    const Json index = io::read_json(index_path);
    if (!index.contains("entries") || !index["entries"].is_array()) throw io::InputError("index.json has no entries");
    for (const auto& e : index["entries"]) {
      if (!e.contains("file") || !e["file"].is_string()) throw io::InputError("index entry without a file");
      Item it{e["file"].get<std::string>(), {}};
      if (e.contains("matroid") && e["matroid"].is_boolean()) it.opt.claimed_matroid = e["matroid"].get<bool>();
      items.push_back(std::move(it));
    }
  } else {
    for (const auto& p : fs::directory_iterator(dir)) {
      if (p.path().extension() == ".json") items.push_back({p.path().filename().string(), {}});
    }
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.file < b.file; });
  }
  // Parse everything first so malformed input is reported before any work.
  std::vector<io::SubdivisionFile> files;
  for (auto& it : items) {
    it.opt.max_level = max_level;
    files.push_back(load((dir / it.file).string()));
  }
  if (fs::exists(index_path)) {
    const Json index = io::read_json(index_path);
    for (std::size_t i = 0; i < items.size(); ++i) {
      const auto& e = index["entries"][i];
      if (e.contains("certificate")) items[i].opt.certificate = parse_values(e["certificate"], files[i].cfg.size());
    }
  }

  std::vector<verify::SuiteReport> reports(items.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < items.size(); ++i) reports[i] = verify::run_suite(files[i].cfg, files[i].subdivision, items[i].opt);

  Json r = run_header(rc);
  r["max_level"] = max_level;
  Json out = Json::array();
  int passed = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    Json x;
    x["file"] = items[i].file;
    x["k"] = files[i].cfg.k();
    x["n"] = files[i].cfg.n();
    x["cells"] = files[i].subdivision.maximal_cells.size();
    x["report"] = reports[i].json();
    passed += reports[i].passed();
    out.push_back(std::move(x));
  }
  std::set<std::pair<std::pair<int, int>, std::vector<geom::Cell>>> distinct;
  for (const auto& f : files) distinct.insert({{f.cfg.k(), f.cfg.n()}, f.subdivision.maximal_cells});
  const bool unique = distinct.size() == files.size();
  r["files"] = std::move(out);
  r["summary"] = {{"files", items.size()}, {"passed", passed}, {"distinct", unique}};
  const bool ok = passed == static_cast<int>(items.size()) && unique;
  r["passed"] = ok;
  if (!ok) throw Violation{r};
  emit(rc, io::dump(r));
}

int thread_cap() {
  const char* env = std::getenv("HYPERSTAB_THREADS");
  if (!env) return 0;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1) return 0;
  return static_cast<int>(std::min<long>(v, 1024));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matroid subdivisions of hypersimplices and their stable pairs"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig rc;
  app.add_option("-o,--output", rc.output, "Output file (directory for enumerate)");
  app.add_option("--seed", rc.seed, "Seed for sampling; recorded in reports");

  std::string weights, facet, grid_text = "0,1,2";
  bool dot = false, basis = false;
  int level = 1, k = 0, n = 0, sample = 0, max_degree = 2, max_level = 2;

  auto* sub = app.add_subcommand("subdivide", "Lower envelope of a lifting");
  sub->add_option("--weights", weights, "weights.json")->required();
  auto* fm = app.add_subcommand("from-matrix", "Valuation lifting and subdivision of a matrix over Q[t]");
  fm->add_option("matrix", rc.inputs, "matrix.json")->required()->expected(1);
  auto* cm = app.add_subcommand("check-matroid", "Edge test on every cell");
  cm->add_option("subdivision", rc.inputs)->required()->expected(1);
  auto* co = app.add_subcommand("coherence", "Strictly convex certificate lifting");
  co->add_option("subdivision", rc.inputs)->required()->expected(1);
  auto* st = app.add_subcommand("strata", "Strata poset");
  st->add_option("subdivision", rc.inputs)->required()->expected(1);
  st->add_flag("--dot", dot, "Graphviz output");
  auto* dcx = app.add_subcommand("dual-complex", "Dual complex and its boundary");
  dcx->add_option("subdivision", rc.inputs)->required()->expected(1);
  dcx->add_flag("--dot", dot, "Graphviz output");
  auto* re = app.add_subcommand("restrict", "Restriction to a facet +i or -i");
  re->add_option("subdivision", rc.inputs)->required()->expected(1);
  re->add_option("--facet", facet)->required();
  auto* ho = app.add_subcommand("homology", "Cohomology of the strata cochain complex");
  ho->add_option("subdivision", rc.inputs)->required()->expected(1);
  auto* ex = app.add_subcommand("exactness", "Per-point summands at one level");
  ex->add_option("subdivision", rc.inputs)->required()->expected(1);
  ex->add_option("--level", level)->required();
  auto* cd = app.add_subcommand("canonical-dim", "Dimension of the canonical kernel");
  cd->add_option("--k", k)->required();
  cd->add_option("--n", n)->required();
  cd->add_flag("--basis", basis, "Print the basis as JSON");
  auto* ge = app.add_subcommand("germs", "Germ catalog over several subdivisions");
  ge->add_option("subdivisions", rc.inputs)->required();
  auto* en = app.add_subcommand("enumerate", "Grid inventory, or a sample with --sample");
  en->add_option("--k", k)->required();
  en->add_option("--n", n)->required();
  en->add_option("--grid", grid_text, "Comma-separated weights");
  en->add_option("--sample", sample, "Sample this many matroid subdivisions from degenerations");
  en->add_option("--max-degree", max_degree, "Degree bound for sampled families");
  auto* va = app.add_subcommand("verify-all", "Invariant suite over a directory");
  va->add_option("directory", rc.inputs)->required()->expected(1);
  va->add_option("--max-level", max_level, "Highest level for per-point exactness");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (int cap = thread_cap(); cap > 0) omp_set_num_threads(std::min(cap, omp_get_max_threads()));

  try {
    rc.command = app.get_subcommands().front()->get_name();
    rc.grid = parse_grid(grid_text);
    if (rc.command == "subdivide") cmd_subdivide(rc, weights);
    if (rc.command == "from-matrix") cmd_from_matrix(rc);
    if (rc.command == "check-matroid") cmd_check_matroid(rc);
    if (rc.command == "coherence") cmd_coherence(rc);
    if (rc.command == "strata") cmd_strata(rc, dot);
    if (rc.command == "dual-complex") cmd_dual_complex(rc, dot);
    if (rc.command == "restrict") cmd_restrict(rc, facet);
    if (rc.command == "homology") cmd_homology(rc);
    if (rc.command == "exactness") cmd_exactness(rc, level);
    if (rc.command == "canonical-dim") cmd_canonical_dim(rc, k, n, basis);
    if (rc.command == "germs") cmd_germs(rc);
    if (rc.command == "enumerate") cmd_enumerate(rc, k, n, sample, max_degree);
    if (rc.command == "verify-all") cmd_verify_all(rc, max_level);
  } catch (const Violation& v) {
    try {
      emit(rc, io::dump(v.report));
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
    }
    return 1;
  } catch (const std::invalid_argument& e) {
    // Input errors, parameter errors and structural errors all land here.
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
