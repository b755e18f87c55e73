#ifndef CONECALC_TESTS_FREE_EXPAND_ORACLE_HPP
#define CONECALC_TESTS_FREE_EXPAND_ORACLE_HPP

// Independent brute-force model of the blow-up product: free bilinear
// expansion over plain integer maps, with truncation applied once at the
// end. Shares no code or data structures with the library implementation;
// used as the oracle for randomized product tests.

#include <map>
#include <utility>

namespace oracle {

struct Cls {
  // ambient polynomial: H^p -> coefficient
  std::map<int, long long> amb;
  // exceptional polynomial under j_*: (h1 exponent, h2 exponent) -> coeff
  std::map<std::pair<int, int>, long long> exc;

  void add_amb(int p, long long c) {
    if (c == 0) return;
    auto it = amb.emplace(p, 0).first;
    it->second += c;
    if (it->second == 0) amb.erase(it);
  }
  void add_exc(int e1, int e2, long long c) {
    if (c == 0) return;
    auto it = exc.emplace(std::make_pair(e1, e2), 0).first;
    it->second += c;
    if (it->second == 0) exc.erase(it);
  }
  bool operator==(const Cls&) const = default;
};

inline long long ipow(long long b, int e) {
  long long out = 1;
  for (int i = 0; i < e; ++i) out *= b;
  return out;
}

// free product of two exceptional polynomials, no truncation
inline std::map<std::pair<int, int>, long long> exc_mul(
    const std::map<std::pair<int, int>, long long>& x,
    const std::map<std::pair<int, int>, long long>& y) {
  std::map<std::pair<int, int>, long long> out;
  for (const auto& [mx, cx] : x)
    for (const auto& [my, cy] : y) {
      auto key = std::make_pair(mx.first + my.first, mx.second + my.second);
      out[key] += cx * cy;
      if (out[key] == 0) out.erase(key);
    }
  return out;
}

// blow-up product with parameters (r, d, twist): free expansion of
//   H^a * H^b, H^p * j(beta) = j((d h1)^p beta),
//   j(beta) * j(gamma) = -j((h2 - twist*h1) beta gamma),
// followed by a single truncation pass H^{>r}, h1^{>1}, h2^{>r-2}.
inline Cls mul(const Cls& x, const Cls& y, int r, int d, int twist) {
  Cls raw;
  for (const auto& [px, cx] : x.amb)
    for (const auto& [py, cy] : y.amb) raw.add_amb(px + py, cx * cy);

  auto push_restricted = [&](const std::map<int, long long>& amb,
                             const std::map<std::pair<int, int>, long long>&
                                 exc) {
    for (const auto& [p, ca] : amb)
      for (const auto& [m, ce] : exc)
        raw.add_exc(m.first + p, m.second, ca * ce * ipow(d, p));
  };
  push_restricted(x.amb, y.exc);
  push_restricted(y.amb, x.exc);

  for (const auto& [m, c] : exc_mul(x.exc, y.exc)) {
    raw.add_exc(m.first, m.second + 1, -c);          // -h2 * beta * gamma
    raw.add_exc(m.first + 1, m.second, c * twist);   // +twist*h1 * ...
  }

  Cls out;
  for (const auto& [p, c] : raw.amb)
    if (p <= r) out.add_amb(p, c);
  for (const auto& [m, c] : raw.exc)
    if (m.first <= 1 && m.second <= r - 2) out.add_exc(m.first, m.second, c);
  return out;
}

}  // namespace oracle

#endif
