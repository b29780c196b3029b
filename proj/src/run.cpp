#include "oam/run.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <string>
#include <vector>

#include "oam/catalog.hpp"
#include "oam/random.hpp"
#include "oam/verify.hpp"

namespace oam {

namespace {

constexpr std::size_t kGroundTruthSamples = 50;
constexpr double kHarmonicTol = 1e-9;

[[noreturn]] void fail(const std::string& what) { throw ConfigError(what); }

const Json& require(const Json& node, const char* key, const std::string& where) {
  if (!node.is_object() || !node.contains(key)) fail(where + ": missing \"" + key + "\"");
  return node.at(key);
}

std::size_t as_count(const Json& v, const std::string& where, std::size_t min) {
  if (!v.is_number_integer()) fail(where + ": expected an integer");
  if (v.is_number_unsigned()) {
    const auto u = v.get<std::uint64_t>();
    if (u < min) fail(where + ": must be >= " + std::to_string(min));
    return static_cast<std::size_t>(u);
  }
  const auto i = v.get<std::int64_t>();
  if (i < static_cast<std::int64_t>(min)) fail(where + ": must be >= " + std::to_string(min));
  return static_cast<std::size_t>(i);
}

std::size_t count_or(const Json& node, const char* key, std::size_t fallback, std::size_t min) {
  if (!node.contains(key)) return fallback;
  return as_count(node.at(key), std::string(key), min);
}

double positive_number(const Json& v, const std::string& where) {
  if (!v.is_number()) fail(where + ": expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d) || d <= 0.0) fail(where + ": must be positive and finite");
  return d;
}

Complex parse_complex(const Json& v, const std::string& where) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  fail(where + ": complex numbers are [re, im] pairs or plain numbers");
}

CVector parse_cvector(const Json& v, const std::string& where) {
  if (!v.is_array()) fail(where + ": expected an array");
  CVector out;
  for (std::size_t k = 0; k < v.size(); ++k) out.push_back(parse_complex(v[k], where));
  return out;
}

CMatrix parse_cmatrix(const Json& v, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!v.is_array() || v.size() != rows) fail(where + ": expected " + std::to_string(rows) + " rows");
  CMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const CVector row = parse_cvector(v[r], where);
    if (row.size() != cols) fail(where + ": expected " + std::to_string(cols) + " columns");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

Flavor parse_flavor(const Json& node) {
  if (!node.contains("flavor")) return Flavor::CompactOperator;
  const Json& v = node.at("flavor");
  if (v == "compact") return Flavor::CompactOperator;
  if (v == "hilbert_schmidt") return Flavor::HilbertSchmidt;
  fail("module.flavor: expected \"compact\" or \"hilbert_schmidt\"");
}

std::vector<std::size_t> parse_dims(const Json& node, std::size_t expected) {
  const Json& dims = require(node, "dims", "module");
  if (!dims.is_array() || dims.size() != expected) {
    fail("module.dims: expected " + std::to_string(expected) + " entries");
  }
  std::vector<std::size_t> out;
  for (const auto& d : dims) out.push_back(as_count(d, "module.dims", 1));
  return out;
}

PhiTable parse_phi(const Json& node, const AlgebraDescriptor& a, Rng& rng) {
  const std::size_t d = count_or(node, "codomain_dim", 1, 1);
  const Json phi = node.contains("phi") ? node.at("phi") : Json("trace");
  if (phi == "trace") {
    if (d != 1) fail("map.phi: \"trace\" requires codomain_dim 1");
    return PhiTable::trace(a);
  }
  if (phi == "zero") return PhiTable(a, d);
  if (phi == "random") return random_phi_table(a, d, rng);
  if (!phi.is_array() || phi.size() != a.block_count()) fail("map.phi: expected one table per algebra block");
  PhiTable t(a, d);
  for (std::size_t j = 0; j < a.block_count(); ++j) {
    const std::size_t n = a.block_dim(j);
    const Json& block = phi[j];
    if (!block.is_array() || block.size() != n) fail("map.phi: block shape mismatch");
    for (std::size_t p = 0; p < n; ++p) {
      if (!block[p].is_array() || block[p].size() != n) fail("map.phi: block shape mismatch");
      for (std::size_t q = 0; q < n; ++q) {
        CVector v = parse_cvector(block[p][q], "map.phi");
        if (v.size() != d) fail("map.phi: entry length must equal codomain_dim");
        t.at(j, p, q) = GVector(std::move(v));
      }
    }
  }
  return t;
}

AdditiveTable parse_t0(const Json& node, const ModuleDescriptor& w, std::size_t d, Rng& rng) {
  const Json t0 = node.contains("t0") ? node.at("t0") : Json("random");
  const std::size_t c = w.coordinate_count();
  if (t0 == "random") {
    const bool complex_linear = node.value("complex_linear", false);
    return random_additive_table(w, d, complex_linear, rng);
  }
  if (t0 == "zero") return {CMatrix(d, c), CMatrix(d, c)};
  if (!t0.is_object()) fail("map.t0: expected \"random\", \"zero\" or {linear, conjugate}");
  AdditiveTable t{CMatrix(d, c), CMatrix(d, c)};
  if (t0.contains("linear")) t.linear = parse_cmatrix(t0.at("linear"), d, c, "map.t0.linear");
  if (t0.contains("conjugate")) t.conjugate = parse_cmatrix(t0.at("conjugate"), d, c, "map.t0.conjugate");
  return t;
}

void require_kind(const ModuleDescriptor& w, ModuleKind k, const std::string& map) {
  if (w.kind() != k) fail("map " + map + " needs a " + std::string(to_string(k)) + " module");
}

MapSpec build_map(const Json& node, const ModuleDescriptor& w, Rng& rng) {
  const Json& kind = require(node, "kind", "map");
  if (!kind.is_string()) fail("map.kind: expected a string");
  const std::string k = kind.get<std::string>();
  try {
    if (k == "pure_quadratic") return MapSpec::pure_quadratic(w, parse_phi(node, w.algebra(), rng));
    if (k == "additive_plus_quadratic") {
      PhiTable phi = parse_phi(node, w.algebra(), rng);
      AdditiveTable t0 = parse_t0(node, w, phi.codomain_dim(), rng);
      return MapSpec::additive_plus_quadratic(w, std::move(t0), std::move(phi));
    }
    if (k == "rank_one_cubic") {
      require_kind(w, ModuleKind::Vector, k);
      CVector eta(w.dim1());
      eta[0] = 1.0;
      if (node.contains("eta0")) eta = parse_cvector(node.at("eta0"), "map.eta0");
      if (eta.size() != w.dim1()) fail("map.eta0: length must equal the vector dimension");
      return MapSpec::rank_one_cubic(eta, w.flavor());
    }
    if (k == "sum_of_squares") {
      require_kind(w, ModuleKind::Pair, k);
      return MapSpec::sum_of_squares(w.dim1(), w.flavor());
    }
    if (k == "diagonal_cube") {
      require_kind(w, ModuleKind::Diagonal, k);
      return MapSpec::diagonal_cube(w.dim1(), w.flavor());
    }
    if (k == "perturbed") {
      MapSpec base = build_map(require(node, "base", "map"), w, rng);
      const Json& eps = require(node, "epsilon", "map");
      if (!eps.is_number()) fail("map.epsilon: expected a number");
      const std::string p = node.value("perturbation", std::string("cubic"));
      PerturbationKind pk;
      if (p == "cubic") {
        pk = PerturbationKind::Cubic;
      } else if (p == "module_norm") {
        pk = PerturbationKind::ModuleNorm;
      } else {
        fail("map.perturbation: expected \"cubic\" or \"module_norm\"");
      }
      return MapSpec::perturbed(std::move(base), eps.get<double>(), pk);
    }
  } catch (const std::invalid_argument& e) {
    fail(std::string("map: ") + e.what());
  }
  fail("map.kind: unknown kind \"" + k + "\"");
}

Json phi_to_json(const PhiTable& t) {
  Json blocks = Json::array();
  for (std::size_t j = 0; j < t.algebra().block_count(); ++j) {
    const std::size_t n = t.algebra().block_dim(j);
    Json block = Json::array();
    for (std::size_t p = 0; p < n; ++p) {
      Json row = Json::array();
      for (std::size_t q = 0; q < n; ++q) {
        Json v = Json::array();
        for (const auto& z : t.at(j, p, q).values()) v.push_back(complex_to_json(z));
        row.push_back(std::move(v));
      }
      block.push_back(std::move(row));
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

Json coordinates_to_json(const ModuleElement& x) {
  Json c = Json::array();
  for (const auto& z : x.coordinates()) c.push_back(complex_to_json(z));
  return c;
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

Json stats_to_json(const ResidualStats& s) {
  return Json{{"count", s.count}, {"max", optional_number(s.max)}, {"mean", optional_number(s.mean)}};
}

Json property_to_json(const PropertyResult& p) {
  return Json{{"name", p.name},
              {"samples", p.samples},
              {"max_violation", p.max_violation},
              {"tolerance", p.tolerance},
              {"expectation", std::string(to_string(p.expectation))},
              {"holds", p.holds()},
              {"vacuous", p.vacuous},
              {"ok", p.ok()}};
}

}  // namespace

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

ModuleDescriptor parse_module(const Json& node) {
  if (!node.is_object()) fail("module: expected an object");
  const Json& kind = require(node, "kind", "module");
  if (!kind.is_string()) fail("module.kind: expected a string");
  const std::string k = kind.get<std::string>();
  const Flavor f = parse_flavor(node);
  if (k == "algebra") return ModuleDescriptor::algebra_as_module(parse_dims(node, 1)[0], f);
  if (k == "rectangular") {
    const auto d = parse_dims(node, 2);
    return ModuleDescriptor::rectangular(d[0], d[1], f);
  }
  if (k == "vector") return ModuleDescriptor::vector(parse_dims(node, 1)[0], f);
  if (k == "pair") return ModuleDescriptor::pair(parse_dims(node, 1)[0], f);
  if (k == "diagonal") return ModuleDescriptor::diagonal(parse_dims(node, 1)[0], f);
  if (k == "direct_sum") {
    const Json& children = require(node, "children", "module");
    if (!children.is_array() || children.empty()) fail("module.children: expected a nonempty array");
    std::vector<ModuleDescriptor> parts;
    for (const auto& c : children) parts.push_back(parse_module(c));
    try {
      return ModuleDescriptor::direct_sum(std::move(parts));
    } catch (const std::invalid_argument& e) {
      fail(std::string("module: ") + e.what());
    }
  }
  fail("module.kind: unknown kind \"" + k + "\"");
}

RunConfig parse_config(const Json& config) {
  if (!config.is_object()) fail("config: expected a JSON object");
  for (const auto& [key, _] : config.items()) {
    static const std::vector<std::string> known{"module", "map", "seed", "samples", "suite_samples", "tolerances",
                                                "frame"};
    if (std::find(known.begin(), known.end(), key) == known.end()) fail("config: unknown key \"" + key + "\"");
  }
  RunConfig rc{config, parse_module(require(config, "module", "config")), require(config, "map", "config"),
               0, 100, 200, Tolerances{}, false};
  if (config.contains("seed")) {
    const Json& s = config.at("seed");
    if (!s.is_number_integer() || (!s.is_number_unsigned() && s.get<std::int64_t>() < 0)) {
      fail("seed: expected a non-negative 64-bit integer");
    }
    rc.seed = s.get<std::uint64_t>();
  }
  rc.samples = count_or(config, "samples", rc.samples, 0);
  rc.suite_samples = count_or(config, "suite_samples", rc.suite_samples, 0);
  if (config.contains("tolerances")) {
    const Json& t = config.at("tolerances");
    if (!t.is_object()) fail("tolerances: expected an object");
    for (const auto& [key, v] : t.items()) {
      const double d = positive_number(v, "tolerances." + key);
      if (key == "residual") {
        rc.tolerances.residual = d;
      } else if (key == "phi") {
        rc.tolerances.phi = d;
      } else if (key == "property") {
        rc.tolerances.property = d;
      } else {
        rc.tolerances.per_property[key] = d;
      }
    }
  }
  if (config.contains("frame")) {
    const Json& fr = config.at("frame");
    if (fr == "random") {
      rc.random_frames = true;
    } else if (fr != "canonical") {
      fail("frame: expected \"canonical\" or \"random\"");
    }
  }
  Rng probe(rc.seed);
  build_map(rc.map, rc.module, probe);
  return rc;
}

RunResult run(const RunConfig& config, std::ostream* log) {
  const auto started = std::chrono::steady_clock::now();
  auto note = [log](const std::string& line) {
    if (log) *log << "[oamtool] " << line << '\n';
  };
  RunResult result;
  Json& report = result.report;
  std::vector<std::string> breaches;

  Rng master(config.seed);
  Rng map_rng = master.split();
  const MapSpec spec = build_map(config.map, config.module, map_rng);
  const OAMap f = instantiate_map(spec);
  const ModuleDescriptor& w = config.module;

  report["schema_version"] = kReportSchemaVersion;
  report["version"] = kToolVersion;
  report["config"] = config.raw;
  report["module"] = Json{{"description", w.describe()},
                          {"flavor", std::string(to_string(w.flavor()))},
                          {"orthogonal_dimension", w.orthogonal_dimension()},
                          {"min_block_orthogonal_dimension", w.min_block_orthogonal_dimension()},
                          {"coordinate_count", w.coordinate_count()},
                          {"has_orthogonal_pairs", w.has_orthogonal_pairs()}};
  report["map"] = Json{{"kind", std::string(to_string(spec.kind()))},
                       {"codomain_dim", spec.codomain_dim()},
                       {"representable", spec.representable()}};

  const std::uint64_t decompose_seed = master.next_u64();
  const std::uint64_t suite_seed = master.next_u64();
  const std::uint64_t truth_seed = master.next_u64();

  Json dj;
  if (w.min_block_orthogonal_dimension() < 2) {
    dj["applicable"] = false;
    dj["reason"] = "a block has orthogonal dimension < 2";
    note("decomposition skipped: " + w.describe() + " has a block with dim_A < 2");
  } else {
    const bool blockwise = w.kind() == ModuleKind::DirectSum;
    note(std::string(blockwise ? "blockwise " : "") + "decomposing on " + w.describe());
    DecomposeOptions opts{config.samples, decompose_seed, config.random_frames};
    const Decomposition d = blockwise ? blockwise_decompose(f, opts) : decompose(f, opts);
    const bool residual_ok = !d.residual.max || *d.residual.max < config.tolerances.residual;
    dj["applicable"] = true;
    dj["method"] = blockwise ? "blockwise" : "direct";
    dj["frame"] = config.random_frames ? "random" : "canonical";
    dj["phi"] = phi_to_json(d.phi);
    Json res = stats_to_json(d.residual);
    res["tolerance"] = config.tolerances.residual;
    res["pass"] = residual_ok;
    res["flagged"] = d.residual_flagged;
    dj["residual"] = res;
    dj["odd_gap"] = stats_to_json(d.odd_gap);
    dj["budget"] = Json{{"used", d.eval_budget_used},
                        {"limit", d.eval_budget_limit},
                        {"pass", d.eval_budget_used <= d.eval_budget_limit}};
    if (d.eval_budget_used > d.eval_budget_limit) breaches.push_back("evaluation budget exceeded");
    if (spec.representable() && !residual_ok) breaches.push_back("residual above tolerance on a representable map");

    if (const auto truth = ground_truth(spec)) {
      const double phi_dist = d.phi.max_entry_distance(truth->phi);
      Rng trng(truth_seed);
      double t_dist = 0.0;
      for (std::size_t s = 0; s < kGroundTruthSamples; ++s) {
        const auto x = ModuleElement::random(w, trng);
        const GVector t0 = truth->T(x);
        t_dist = std::max(t_dist, (d.T(x) - t0).norm() / (1.0 + t0.norm()));
      }
      const bool pass = phi_dist < config.tolerances.phi && t_dist < config.tolerances.phi;
      dj["ground_truth"] = Json{{"phi_max_entry_distance", phi_dist},
                                {"T_max_distance", t_dist},
                                {"samples", kGroundTruthSamples},
                                {"tolerance", config.tolerances.phi},
                                {"pass", pass}};
      if (!pass) breaches.push_back("recovered (T, Φ) disagree with the ground truth");
    }
  }
  report["decomposition"] = dj;

  note("running property suite (" + std::to_string(config.suite_samples) + " samples)");
  SuiteOptions so;
  so.samples = config.suite_samples;
  so.seed = suite_seed;
  so.tolerance = config.tolerances.property;
  so.tolerances = config.tolerances.per_property;
  so.expectations = expected_outcomes(spec);
  const SuiteReport suite = property_suite(f, so);
  Json props = Json::array();
  for (const auto& p : suite.properties) {
    props.push_back(property_to_json(p));
    if (!p.ok()) breaches.push_back("property " + p.name + " did not match its expectation");
  }
  report["suite"] = Json{{"verdict", suite.verdict()}, {"properties", props}};

  Json witnesses = Json::array();
  if (const auto wit = additivity_witness(spec)) {
    const double gap = additivity_gap(f, wit->first, wit->second);
    witnesses.push_back(Json{{"name", "additivity_gap"},
                             {"x", coordinates_to_json(wit->first)},
                             {"y", coordinates_to_json(wit->second)},
                             {"value", gap}});
  }
  report["witnesses"] = witnesses;

  if (spec.kind() == MapKind::SumOfSquares) {
    note("harmonic growth demo on " + w.describe());
    const auto rows = harmonic_demo(w.dim1(), decompose_seed);
    Json hj = Json::array();
    bool pass = true;
    for (const auto& r : rows) {
      const double err = std::abs(r.phi_value - r.partial_sum);
      pass = pass && err < kHarmonicTol && std::abs(r.operator_norm - 1.0) < kHarmonicTol;
      hj.push_back(Json{{"n", r.n},
                        {"phi_T_n", r.phi_value},
                        {"harmonic_sum", r.partial_sum},
                        {"abs_error", err},
                        {"operator_norm_T_n", r.operator_norm}});
    }
    report["harmonic"] = Json{{"tolerance", kHarmonicTol}, {"pass", pass}, {"rows", hj}};
    if (!pass) breaches.push_back("harmonic demo disagrees with the partial sums");
  }

  result.exit_code = breaches.empty() ? 0 : 1;
  report["status"] = Json{{"exit_code", result.exit_code}, {"breaches", breaches}};
  for (const auto& b : breaches) note("unexpected: " + b);
  report["wall_clock_seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

}  // namespace oam
