#include "conecalc/cone.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "conecalc/error.hpp"

namespace conecalc {

namespace {

constexpr int kMaxRank = 4;

BigInt dot(const IVec& a, const IVec& b) {
  BigInt out(0);
  for (std::size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
  return out;
}

int ivec_rank(const std::vector<IVec>& vs) {
  QMat m;
  for (const auto& v : vs) m.push_back(to_rational(v));
  return rank(m);
}

void check_rank(int rank, const std::vector<IVec>& vs) {
  if (rank < 2 || rank > kMaxRank)
    throw DomainError("cone rank must be between 2 and 4");
  for (const auto& v : vs)
    if (int(v.size()) != rank)
      throw DomainError("cone vector length does not match ambient rank");
}

/// All primitive functionals that vanish on some independent (rank-1)-subset
/// of `vectors` and are nonnegative on all of them. For a full-dimensional
/// cone these are exactly the facet normals; the same enumeration serves the
/// ray direction by duality.
std::vector<IVec> supporting_functionals(int rank,
                                         const std::vector<IVec>& vectors) {
  std::set<IVec> found;
  std::vector<std::size_t> idx(vectors.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;

  auto consider = [&](const std::vector<std::size_t>& chosen) {
    QMat m;
    for (std::size_t i : chosen) m.push_back(to_rational(vectors[i]));
    if (conecalc::rank(m) != rank - 1) return;
    // one-dimensional kernel of the chosen vectors
    std::vector<QVec> kernel = left_kernel(transpose(m));
    if (kernel.size() != 1) return;
    IVec nu = primitive_vector(primitive_integer(kernel[0]));
    int pos = 0, neg = 0;
    for (const auto& v : vectors) {
      int s = dot(nu, v).sign();
      if (s > 0) ++pos;
      if (s < 0) ++neg;
    }
    if (neg == 0)
      found.insert(nu);
    else if (pos == 0) {
      for (auto& e : nu) e = -e;
      found.insert(nu);
    }
  };

  // enumerate subsets of size rank-1
  std::vector<std::size_t> chosen(std::size_t(rank - 1));
  auto rec = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
    if (depth == chosen.size()) {
      consider(chosen);
      return;
    }
    for (std::size_t i = start; i < vectors.size(); ++i) {
      chosen[depth] = i;
      self(self, i + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  return {found.begin(), found.end()};
}

}  // namespace

IVec primitive_vector(IVec v) {
  BigInt content(0);
  for (const auto& e : v) content = BigInt::gcd(content, e);
  if (content.is_zero()) throw DomainError("zero vector has no primitive form");
  if (!content.is_one())
    for (auto& e : v) e = e.divide_exact(content);
  return v;
}

PolyCone PolyCone::from_rays(int rank, std::vector<IVec> rays) {
  check_rank(rank, rays);
  if (rays.empty()) throw DomainError("cone needs at least one ray");
  std::set<IVec> canon;
  for (auto& r : rays) canon.insert(primitive_vector(std::move(r)));
  std::vector<IVec> rs(canon.begin(), canon.end());
  if (ivec_rank(rs) < rank)
    throw DomainError("non-full-dimensional cone: rays span rank " +
                      std::to_string(ivec_rank(rs)) + " < " +
                      std::to_string(rank));
  std::vector<IVec> facets = supporting_functionals(rank, rs);
  if (ivec_rank(facets) < rank)
    throw DomainError("non-pointed cone: the rays contain a line");

  PolyCone out;
  out.rank_ = rank;
  out.facets_ = std::move(facets);
  // keep only the extreme rays: those lying on rank-1 independent facets
  std::set<IVec> extreme;
  for (const auto& r : rs) {
    std::vector<IVec> tight;
    for (const auto& f : out.facets_)
      if (dot(f, r).is_zero()) tight.push_back(f);
    if (ivec_rank(tight) == rank - 1) extreme.insert(r);
  }
  out.rays_.assign(extreme.begin(), extreme.end());
  return out;
}

PolyCone PolyCone::from_facets(int rank, std::vector<IVec> facets) {
  check_rank(rank, facets);
  if (facets.empty()) throw DomainError("cone needs at least one facet");
  std::set<IVec> canon;
  for (auto& f : facets) canon.insert(primitive_vector(std::move(f)));
  std::vector<IVec> fs(canon.begin(), canon.end());
  if (ivec_rank(fs) < rank)
    throw DomainError(
        "non-pointed cone: facet normals do not span the ambient space");
  std::vector<IVec> rays = supporting_functionals(rank, fs);
  if (rays.empty())
    throw DomainError("facet system admits no extreme rays");
  // rebuild through from_rays so the stored facets are minimal
  return from_rays(rank, std::move(rays));
}

bool PolyCone::contains(const IVec& v) const {
  if (int(v.size()) != rank_)
    throw DomainError("contains: vector rank mismatch");
  for (const auto& f : facets_)
    if (dot(f, v).is_negative()) return false;
  return true;
}

bool PolyCone::is_extremal_ray(const IVec& ray) const {
  if (!contains(ray)) throw DomainError("is_extremal_ray: ray not in cone");
  std::vector<IVec> tight;
  for (const auto& f : facets_)
    if (dot(f, ray).is_zero()) tight.push_back(f);
  return ivec_rank(tight) == rank_ - 1;
}

std::string PolyCone::str() const {
  std::ostringstream os;
  auto dump = [&](const char* label, const std::vector<IVec>& vs) {
    os << label << ":";
    for (const auto& v : vs) {
      os << " (";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i].str();
      }
      os << ")";
    }
  };
  dump("rays", rays_);
  os << "; ";
  dump("facets", facets_);
  return os.str();
}

bool includes(const PolyCone& outer, const PolyCone& inner) {
  if (outer.rank() != inner.rank())
    throw DomainError("includes: rank mismatch");
  for (const auto& r : inner.rays())
    if (!outer.contains(r)) return false;
  return true;
}

PolyCone dual_cone(const PolyCone& c, const std::vector<IVec>& pairing) {
  int m = c.rank();
  if (int(pairing.size()) != m)
    throw DomainError("dual_cone: pairing must be square of the cone rank");
  for (const auto& row : pairing)
    if (int(row.size()) != m)
      throw DomainError("dual_cone: pairing must be square of the cone rank");
  QMat pq;
  for (const auto& row : pairing) pq.push_back(to_rational(row));
  if (determinant(pq).is_zero())
    throw DomainError("dual_cone: singular pairing");
  // functional on the dual side induced by ray r is r^T M
  std::vector<IVec> functionals;
  for (const auto& r : c.rays()) {
    IVec f(std::size_t(m), BigInt(0));
    for (int j = 0; j < m; ++j)
      for (int i = 0; i < m; ++i) f[std::size_t(j)] += r[std::size_t(i)] * pairing[std::size_t(i)][std::size_t(j)];
    functionals.push_back(primitive_vector(std::move(f)));
  }
  return PolyCone::from_facets(m, std::move(functionals));
}

}  // namespace conecalc
