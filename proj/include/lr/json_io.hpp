#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lr/constants.hpp"
#include "lr/cut_cone.hpp"
#include "lr/lorentzian.hpp"
#include "lr/metric.hpp"
#include "lr/poly.hpp"
#include "lr/ratios.hpp"
#include "lr/subfree.hpp"

namespace lr {

using Json = nlohmann::ordered_json;

/// Parses a file; Usage error when unreadable, Structural when not JSON.
Json load_json_file(const std::string& path);

/// "p/q" strings, or JSON integers. Structural error otherwise.
Rational rational_from_json(const Json& j);

// Matrices: {"n", "scalar": "rational"|"float", "entries": [[...]]}
struct MatrixInput {
  bool exact = true;
  RatMatrix rational;
  RealMatrix real;
};
MatrixInput matrix_from_json(const Json& j);
Json to_json(const RatMatrix& m);
Json to_json(const RealMatrix& m);

// Ratios: {"n", "offdiag": {"i,j": "p/q"}, "diag": [...]}; diag optional.
FullRatio ratio_from_json(const Json& j);
Json to_json(const FullRatio& r);

// Facets: {"n", "pairs": ["1,2", ...], "facets": [[...], ...]}
Json facets_to_json(int n, const std::vector<FacetNormal>& facets);
std::vector<FacetNormal> facets_from_json(const Json& j);
Json to_json(const OrbitReport& report);

// Metrics mirror the ratio off-diagonal map: {"n", "offdiag": {"i,j": ...}}.
// Float entries are converted exactly.
RatMetric metric_from_json(const Json& j);
Json to_json(const RatMetric& d);
Json to_json(const RealMetric& d);

// Trees: {"leaves": [vertex of label 1, ...], "edges": [{"u", "v", "len"}]}
PhyloTree tree_from_json(const Json& j);
Json to_json(const PhyloTree& t);

Json to_json(const IntPoly& p);
IntPoly poly_from_json(const Json& j, int n);
Json to_json(const SubfreeReport& r);

Json to_json(const BoundednessCertificate& c);
Json to_json(const EigenSignature& s);

/// {"error": {"code", "message", "context"}}
Json error_json(const Error& e);

}  // namespace lr
