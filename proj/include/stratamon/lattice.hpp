#pragma once

#include "stratamon/arith.hpp"

#include <optional>
#include <vector>

namespace stratamon {

// Canonical basis of a sublattice of Z^dim: rows in Hermite normal form
// (pivots positive, entries above a pivot reduced into [0, pivot), pivot
// columns strictly increasing). Unique per lattice, so comparable by ==.
struct LatticeBasis {
    std::vector<IntVec> rows;
    int dim = 0;

    bool operator==(const LatticeBasis&) const = default;
};

// Row-style Hermite normal form of arbitrary integer rows (zero rows dropped).
std::vector<IntVec> hnf_rows(std::vector<IntVec> rows);

// Lattice generated by the given vectors. Empty input -> input_error.
LatticeBasis lattice_basis(const std::vector<IntVec>& gens);

bool lattice_member(const IntVec& x, const LatticeBasis& basis);

// Basis of { x in Z^n : rows * x = 0 }, rows given as the matrix rows.
// Result in HNF; empty result means only the zero solution.
std::vector<IntVec> integer_kernel(const std::vector<IntVec>& rows, int n);

int rank_rational(const std::vector<IntVec>& rows);

// Unique rational solution of  sum_i c_i * columns[i] = target.
// Columns must be linearly independent (else input_error); returns nullopt
// when target is outside their span.
std::optional<RatVec> solve_rational_system(const std::vector<IntVec>& columns,
                                            const IntVec& target);

}  // namespace stratamon
