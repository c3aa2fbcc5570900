#pragma once

// Dense exact linear algebra over Q(i). Matrices are tiny (at most a few
// hundred rows), so plain Gaussian elimination is used throughout.

#include "eddeg/exact.hpp"

#include <optional>
#include <vector>

namespace eddeg {

using ExactMatrix = std::vector<std::vector<GaussianRational>>;

ExactMatrix identity_matrix(std::size_t n);

GaussianRational determinant(ExactMatrix m);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<ExactMatrix> inverse(ExactMatrix m);

std::size_t rank(ExactMatrix m);

std::vector<GaussianRational> multiply(const ExactMatrix& m, const std::vector<GaussianRational>& v);

}  // namespace eddeg
