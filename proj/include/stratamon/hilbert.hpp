#pragma once

#include "stratamon/monoid.hpp"

#include <vector>

namespace stratamon {

struct HilbertBasis {
    std::vector<IntVec> atoms;  // grlex-sorted, componentwise-minimal nonzero elements
};

// Apery set of M with respect to X: members m with m - x outside M for every
// x in X. `complete` is set only when the enumeration region provably covers
// the whole set (full kind with an axis element per coordinate); otherwise
// the result is the restriction to [0, box] and box reports the cutoff.
struct AperySet {
    std::vector<IntVec> base;
    std::vector<IntVec> elements;  // grlex-sorted
    bool complete = false;
    IntVec box;  // inclusive upper corner of the enumerated region
};

HilbertBasis hilbert_basis(const Monoid& m);

AperySet apery(const Monoid& m, const std::vector<IntVec>& base, const Int& box_bound);

// numerical-semigroup (dim 1, generated) greedy representation in the given
// generator order: k_i maximal with the remainder staying inside S; every
// stage tail then sits in Ap(S, {n_1..n_i}), rechecked before returning
std::vector<Int> primary_representation(const Monoid& s, const IntVec& x,
                                        const std::vector<int>& order);

}  // namespace stratamon
