#pragma once

// Small exact linear algebra over Q and Z used by the polyhedral code.

#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "lgb/lattice.hpp"

namespace lgb::linalg {

using RatMatrix = std::vector<std::vector<mpq_class>>;

/// Row echelon form in place; returns the rank.
std::size_t row_reduce(RatMatrix& m);

std::size_t rank(std::span<const ExponentVec> rows, std::size_t n);

/// Unique solution of the square system A x = b, or nullopt if singular.
std::optional<std::vector<mpq_class>> solve(const RatMatrix& a, const std::vector<mpq_class>& b);

/// Primitive integer basis of {x : r·x = 0 for every row r}.
std::vector<ExponentVec> nullspace(std::span<const ExponentVec> rows, std::size_t n);

/// Primitive integer generator of the kernel of `rows` (rank must be n−1).
std::optional<ExponentVec> kernel_vector(std::span<const ExponentVec> rows, std::size_t n);

/// Scales a rational vector to a primitive integer vector.
ExponentVec primitive(const std::vector<mpq_class>& v);
ExponentVec primitive(const ExponentVec& v);

/// Diagonal of the Smith normal form of the integer matrix with the given
/// rows (nonzero entries only).
std::vector<mpz_class> smith_diagonal(std::span<const ExponentVec> rows, std::size_t n);

mpz_class determinant(std::span<const ExponentVec> rows);

/// Does v lie in the Q-span of `rows`?
bool in_span(std::span<const ExponentVec> rows, const ExponentVec& v);

}  // namespace lgb::linalg
