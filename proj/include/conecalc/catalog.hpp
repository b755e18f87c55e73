#ifndef CONECALC_CATALOG_HPP
#define CONECALC_CATALOG_HPP

#include <map>
#include <string>
#include <vector>

#include "conecalc/bigint.hpp"
#include "conecalc/linalg.hpp"
#include "conecalc/rational.hpp"

namespace conecalc {

using ParamMap = std::map<std::string, int>;

/// One claimed cone: generators and (optional) dual certificates, written in
/// the CLI expression language for the named space.
struct ConeClaim {
  std::string space;  // "xr:6", "w:4", "y:3", "p3:2,3", "sec:6,2"
  int codim = 0;      // codimension of the generator group
  std::vector<std::string> generators;
  std::vector<std::string> certificates;  // complementary codimension
};

struct CaseInstance {
  std::string id;
  ParamMap params;
  std::vector<ConeClaim> cones;
  std::vector<std::string> notes;
};

struct Check {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct VerificationReport {
  std::string id;
  ParamMap params;
  std::vector<Check> checks;
  std::vector<std::string> notes;
  bool pass = false;

  void add(std::string name, std::string expected, std::string computed,
           bool ok);
  void recompute_pass();
};

struct TheoremRecord {
  std::string id;
  std::string family;  // which space family the claim lives on
  std::string title;
  std::string range_str;
  std::vector<std::string> param_names;
  std::vector<ParamMap> instances;  // full declared sweep (env-capped)
  std::vector<std::string> notes;
};

/// All catalog records; sweep ranges honor CONECALC_MAX_R (default 10).
std::vector<TheoremRecord> list_cases();

/// Declarative content of one case at concrete parameters.
CaseInstance instantiate_case(const std::string& id, const ParamMap& params);

/// Runs every check of the record at the given parameters.
VerificationReport verify_case(const std::string& id, const ParamMap& params);

/// Every record over its full declared range, in deterministic order.
std::vector<VerificationReport> verify_all();

/// Upper bound applied to r/n/d sweeps (CONECALC_MAX_R, default 10).
int sweep_cap();

/// A claimed cone of a case rendered in numerical coordinates, with the
/// facet description computed by the cone engine.
struct ConeDescription {
  std::string label;
  std::string space;
  int codim = 0;
  std::vector<std::string> basis_names;
  std::vector<IVec> rays;
  std::vector<IVec> facets;
};

std::vector<ConeDescription> cone_descriptions(const std::string& id,
                                               const ParamMap& params);

// ---- closed-form curve counts -------------------------------------------

/// Bundle of curve invariants consumed by the formula commands.
struct CurveNumerics {
  int d = 0;  // degree
  int g = 0;  // genus
  int m = 0;  // auxiliary cutting degree
  int e = 0;  // degree of the curve inside the fixed surface
};

/// Degree of the trisecant surface of a degree-d genus-g space curve:
/// (d-1)(d-2)(d-3)/3 - (d-2)g.
BigInt berzolari(int d, int g);

/// Nodes of the degree-(d-1) plane image of a rational space curve of degree
/// d projected from a general point on itself: binom(d-2, 2).
BigInt projection_nodes(int d);

/// h^0(O_{P^3}(k)) = binom(k+3, 3).
BigInt h0_p3(int k);

/// h^0 of O(k) restricted to a rational curve of degree d: d*k + 1.
BigInt h0_curve(int d, int k);

/// Worst-case lower bound for the divisor slope a/b on the blow up along a
/// degree-e curve in a degree-d surface, cut by a curve in |mH - C|:
/// ((m+d-4)e - e(e-3)) / (md - e).
Rational z_slope(int d, int e, int m);

/// Its m -> infinity limit, e/d.
Rational z_slope_limit(int d, int e);

}  // namespace conecalc

#endif
