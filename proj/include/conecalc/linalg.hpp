#ifndef CONECALC_LINALG_HPP
#define CONECALC_LINALG_HPP

#include <optional>
#include <vector>

#include "conecalc/bigint.hpp"
#include "conecalc/rational.hpp"

namespace conecalc {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;  // row-major
using IVec = std::vector<BigInt>;

QMat transpose(const QMat& a);

int rank(QMat a);

/// Basis of { x : x A = 0 } (left kernel; relations among the rows of A).
std::vector<QVec> left_kernel(const QMat& a);

/// Exact solution of A x = b, nullopt when inconsistent. For underdetermined
/// systems an arbitrary particular solution is returned.
std::optional<QVec> solve(QMat a, QVec b);

Rational determinant(QMat a);

/// Clear denominators and divide by the content. The direction is preserved:
/// the result is a positive multiple of v.
IVec primitive_integer(const QVec& v);

/// Primitive with the first nonzero entry positive (canonical form for
/// kernel relations, where the overall sign is arbitrary).
IVec primitive_integer_signed(const QVec& v);

QVec to_rational(const IVec& v);

}  // namespace conecalc

#endif
