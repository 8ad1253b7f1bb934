#pragma once

#include "sl2/bigint.hpp"
#include "sl2/disc_model.hpp"
#include "sl2/reconstruct.hpp"

#include <optional>
#include <vector>

namespace oracle {

// Counting by repeated scans over all vertex triples that form a triangle.
std::vector<sl2::BigInt> labels(const sl2::DiscFragment& f, std::size_t base);
sl2::BigInt value(const sl2::DiscFragment& f, const sl2::Vertex& mu, const sl2::Vertex& nu);

// Fraction-free Gaussian elimination.
sl2::BigInt determinant(std::vector<std::vector<sl2::BigInt>> m);

// Tridiagonal continuant with the given diagonal and unit off-diagonals.
sl2::BigInt continuant(const std::vector<sl2::BigInt>& diag);

// The unique nonnegative SL2 matrix with i+j = r and entry sum m, by enumeration.
std::optional<sl2::NonnegSL2Matrix> search_matrix(long r, long m);

}  // namespace oracle
