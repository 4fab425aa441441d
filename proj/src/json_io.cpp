#include "lr/json_io.hpp"

#include <cmath>
#include <fstream>

#include "lr/error.hpp"

namespace lr {

namespace {

const Json& field(const Json& j, const char* name) {
  require(j.is_object(), ErrorCode::Structural, "expected a JSON object");
  auto it = j.find(name);
  require(it != j.end(), ErrorCode::Structural, std::string("missing field \"") + name + "\"");
  return *it;
}

int int_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  require(v.is_number_integer(), ErrorCode::Structural, std::string("field \"") + name + "\" must be an integer");
  return v.get<int>();
}

double real_from_json(const Json& j) {
  require(j.is_number(), ErrorCode::Structural, "expected a number");
  double v = j.get<double>();
  require(std::isfinite(v), ErrorCode::Domain, "non-finite number");
  return v;
}

// Rational from a string, an integer, or (only when allowed) a float, exactly.
Rational scalar_exact(const Json& j, bool allow_float) {
  if (allow_float && j.is_number_float()) return rational_from_double(real_from_json(j));
  return rational_from_json(j);
}

template <typename T>
Json offdiag_map(int n, const std::vector<T>& values) {
  Json out = Json::object();
  for (std::size_t k = 0; k < values.size(); ++k) {
    auto [i, j] = pair_at(n, k);
    if constexpr (std::is_same_v<T, Rational>) out[pair_key(i, j)] = format_rational(values[k]);
    else out[pair_key(i, j)] = values[k];
  }
  return out;
}

std::vector<Rational> offdiag_from_json(const Json& map, int n, bool allow_float) {
  require(map.is_object(), ErrorCode::Structural, "\"offdiag\" must be an object");
  std::vector<Rational> out(pair_count(n));
  for (const auto& [key, value] : map.items()) {
    auto [i, j] = parse_pair_key(key, n);
    out[pair_index(n, i, j)] = scalar_exact(value, allow_float);
  }
  return out;
}

}  // namespace

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorCode::Usage, "cannot open file", path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::Structural, "invalid JSON", path + ": " + e.what());
  }
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  fail(ErrorCode::Structural, "expected a rational \"p/q\" or an integer", j.dump());
}

MatrixInput matrix_from_json(const Json& j) {
  int n = int_field(j, "n");
  require(n >= 1, ErrorCode::Structural, "matrix size must be positive");
  std::string scalar = j.contains("scalar") ? field(j, "scalar").get<std::string>() : "rational";
  require(scalar == "rational" || scalar == "float", ErrorCode::Structural,
          "\"scalar\" must be \"rational\" or \"float\"");
  const Json& rows = field(j, "entries");
  require(rows.is_array() && static_cast<int>(rows.size()) == n, ErrorCode::Structural,
          "\"entries\" must have n rows");
  MatrixInput out;
  out.exact = scalar == "rational";
  if (out.exact) {
    std::vector<std::vector<Rational>> r(n);
    for (int i = 0; i < n; ++i) {
      require(rows[i].is_array(), ErrorCode::Structural, "matrix rows must be arrays");
      for (const auto& v : rows[i]) r[i].push_back(rational_from_json(v));
    }
    out.rational = RatMatrix(r);
    out.real = to_real(out.rational);
  } else {
    std::vector<std::vector<double>> r(n);
    for (int i = 0; i < n; ++i) {
      require(rows[i].is_array(), ErrorCode::Structural, "matrix rows must be arrays");
      for (const auto& v : rows[i]) r[i].push_back(real_from_json(v));
    }
    out.real = RealMatrix(r);
  }
  return out;
}

Json to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.size(); ++j) row.push_back(format_rational(m(i, j)));
    rows.push_back(row);
  }
  return Json{{"n", m.size()}, {"scalar", "rational"}, {"entries", rows}};
}

Json to_json(const RealMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.size(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return Json{{"n", m.size()}, {"scalar", "float"}, {"entries", rows}};
}

FullRatio ratio_from_json(const Json& j) {
  int n = int_field(j, "n");
  require(n >= 2, ErrorCode::Structural, "ratio needs n >= 2");
  ReducedRatio reduced{n, offdiag_from_json(field(j, "offdiag"), n, false)};
  if (!j.contains("diag")) return complete_diagonal(reduced);
  const Json& diag = field(j, "diag");
  require(diag.is_array() && static_cast<int>(diag.size()) == n, ErrorCode::Structural,
          "\"diag\" must have n entries");
  FullRatio r{n, reduced.coords, {}};
  for (const auto& v : diag) r.diag.push_back(rational_from_json(v));
  validate(r);
  return r;
}

Json to_json(const FullRatio& r) {
  Json diag = Json::array();
  for (const auto& v : r.diag) diag.push_back(format_rational(v));
  return Json{{"n", r.n}, {"offdiag", offdiag_map(r.n, r.offdiag)}, {"diag", diag}};
}

Json facets_to_json(int n, const std::vector<FacetNormal>& facets) {
  Json pairs = Json::array();
  for (auto [i, j] : pairs_of(n)) pairs.push_back(pair_key(i, j));
  Json rows = Json::array();
  for (const auto& f : facets) rows.push_back(f.coords);
  return Json{{"n", n}, {"pairs", pairs}, {"facets", rows}};
}

std::vector<FacetNormal> facets_from_json(const Json& j) {
  int n = int_field(j, "n");
  const Json& rows = field(j, "facets");
  require(rows.is_array(), ErrorCode::Structural, "\"facets\" must be an array");
  std::vector<FacetNormal> out;
  for (const auto& row : rows) {
    require(row.is_array() && row.size() == pair_count(n), ErrorCode::Structural,
            "facet length must be n(n-1)/2");
    FacetNormal f{n, {}};
    for (const auto& v : row) {
      require(v.is_number_integer(), ErrorCode::Structural, "facet entries must be integers");
      f.coords.push_back(v.get<std::int64_t>());
    }
    out.push_back(std::move(f));
  }
  return out;
}

Json to_json(const OrbitReport& report) {
  Json orbits = Json::array();
  for (const auto& o : report.orbits)
    orbits.push_back(Json{{"representative", o.representative.coords}, {"size", o.size}});
  return Json{{"n", report.n}, {"orbits", orbits}, {"total", report.total}};
}

RatMetric metric_from_json(const Json& j) {
  int n = int_field(j, "n");
  require(n >= 1, ErrorCode::Structural, "metric size must be positive");
  return RatMetric(n, offdiag_from_json(field(j, "offdiag"), n, true));
}

Json to_json(const RatMetric& d) { return Json{{"n", d.n}, {"offdiag", offdiag_map(d.n, d.d)}}; }
Json to_json(const RealMetric& d) { return Json{{"n", d.n}, {"offdiag", offdiag_map(d.n, d.d)}}; }

PhyloTree tree_from_json(const Json& j) {
  const Json& leaves = field(j, "leaves");
  const Json& edges = field(j, "edges");
  require(leaves.is_array() && !leaves.empty(), ErrorCode::Structural, "\"leaves\" must be a nonempty array");
  require(edges.is_array(), ErrorCode::Structural, "\"edges\" must be an array");
  PhyloTree t;
  int max_id = -1;
  for (const auto& v : leaves) {
    require(v.is_number_integer() && v.get<int>() >= 0, ErrorCode::Structural,
            "leaf vertex ids must be nonnegative integers");
    t.label_vertex.push_back(v.get<int>());
    max_id = std::max(max_id, v.get<int>());
  }
  for (const auto& e : edges) {
    PhyloTree::Edge edge{int_field(e, "u"), int_field(e, "v"), rational_from_json(field(e, "len"))};
    require(edge.u >= 0 && edge.v >= 0, ErrorCode::Structural, "vertex ids must be nonnegative");
    max_id = std::max({max_id, edge.u, edge.v});
    t.edges.push_back(edge);
  }
  t.vertex_count = max_id + 1;
  validate(t);
  return t;
}

Json to_json(const PhyloTree& t) {
  Json edges = Json::array();
  for (const auto& e : t.edges)
    edges.push_back(Json{{"u", e.u}, {"v", e.v}, {"len", format_rational(e.len)}});
  return Json{{"leaves", t.label_vertex}, {"edges", edges}};
}

Json to_json(const IntPoly& p) {
  Json terms = Json::array();
  for (const auto& [exps, c] : p.terms()) terms.push_back(Json{{"exps", exps}, {"coef", c.get_str()}});
  return Json{{"terms", terms}};
}

IntPoly poly_from_json(const Json& j, int n) {
  const Json& terms = field(j, "terms");
  require(terms.is_array(), ErrorCode::Structural, "\"terms\" must be an array");
  IntPoly p(n);
  for (const auto& t : terms) {
    const Json& exps = field(t, "exps");
    const Json& coef = field(t, "coef");
    require(exps.is_array(), ErrorCode::Structural, "\"exps\" must be an array");
    require(coef.is_string(), ErrorCode::Structural, "\"coef\" must be a decimal string");
    BigInt c;
    require(c.set_str(coef.get<std::string>(), 10) == 0, ErrorCode::Structural,
            "\"coef\" must be a decimal string", coef.get<std::string>());
    p.add_term(exps.get<std::vector<int>>(), c);
  }
  return p;
}

Json to_json(const SubfreeReport& r) {
  Json negative = Json::array();
  for (const auto& [exps, c] : r.negative_terms)
    negative.push_back(Json{{"monomial", format_monomial(exps)}, {"exps", exps}, {"coef", c.get_str()}});
  return Json{{"holds", r.holds},
              {"negative_terms", negative},
              {"term_count", r.term_count},
              {"diagonal_sum", r.diagonal_sum},
              {"rearranged", r.rearranged},
              {"difference", to_json(r.difference)}};
}

Json to_json(const BoundednessCertificate& c) {
  Json tight = Json::array();
  for (Subset s : c.tight_subsets) tight.push_back(subset_elements(s));
  Json out{{"bounded", c.bounded}};
  if (c.violating_subset) {
    out["violating_subset"] = subset_elements(*c.violating_subset);
    out["violation"] = format_rational(c.violation);
  }
  out["tight_subsets"] = tight;
  return out;
}

Json to_json(const EigenSignature& s) {
  return Json{{"positive", s.n_pos}, {"negative", s.n_neg}, {"zero", s.n_zero}};
}

Json error_json(const Error& e) {
  return Json{{"error", {{"code", std::string(to_string(e.code()))}, {"message", e.what()}, {"context", e.context()}}}};
}


}  // namespace lr
