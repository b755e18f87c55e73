#ifndef CONECALC_CONE_HPP
#define CONECALC_CONE_HPP

#include <string>
#include <vector>

#include "conecalc/linalg.hpp"

namespace conecalc {

/// Canonical ray/functional representative: integer, content 1, direction
/// preserved (only positive rescaling is applied).
IVec primitive_vector(IVec v);

/// Rational polyhedral cone in rank 2..4, carried by both its extreme rays
/// and its facet functionals. Construction computes the missing description
/// with exact integer arithmetic; values are immutable afterwards.
///
/// Only pointed, full-dimensional cones are representable. Degenerate input
/// is reported: from_rays throws DomainError mentioning "non-pointed" or
/// "non-full-dimensional", from_facets mentions "non-pointed" when the
/// functionals leave a lineality space.
class PolyCone {
 public:
  static PolyCone from_rays(int rank, std::vector<IVec> rays);
  static PolyCone from_facets(int rank, std::vector<IVec> facets);

  int rank() const { return rank_; }
  /// Extreme rays, primitive, sorted.
  const std::vector<IVec>& rays() const { return rays_; }
  /// Minimal facet functionals, primitive, sorted.
  const std::vector<IVec>& facets() const { return facets_; }

  bool contains(const IVec& v) const;
  /// True iff the facets vanishing on the ray have rank rank()-1.
  /// Throws if the ray is not in the cone.
  bool is_extremal_ray(const IVec& ray) const;

  bool operator==(const PolyCone& o) const {
    return rank_ == o.rank_ && rays_ == o.rays_;
  }

  std::string str() const;

 private:
  PolyCone() = default;
  int rank_ = 0;
  std::vector<IVec> rays_;
  std::vector<IVec> facets_;
};

bool includes(const PolyCone& outer, const PolyCone& inner);

/// Dual cone with respect to a nondegenerate pairing: all w in the dual
/// basis with <r, M w> >= 0 for every ray r. The pairing rows are indexed by
/// the primal basis, columns by the dual basis.
PolyCone dual_cone(const PolyCone& c, const std::vector<IVec>& pairing);

}  // namespace conecalc

#endif
