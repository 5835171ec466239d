#pragma once

#include "stratamon/monoid.hpp"

#include <vector>

namespace stratamon {

// finite subset G0 of an abelian group Z_{d_1} x ... x Z_{d_r} x Z^f;
// each element is a row of r torsion coordinates (reduced mod d_i) followed
// by f free coordinates
struct GroupSpec {
    std::vector<Int> torsion_moduli;  // each >= 2
    int free_rank = 0;
    std::vector<IntVec> elements;
};

// block monoid B(G0) as a full monoid in N^{|G0|}: one congruence row per
// torsion component, one equality row per free component
Monoid block_to_congruence(const GroupSpec& g);

// atom `a` of B(G0) is elementary when no nonzero zero-sum sequence lives on
// a proper nonempty subset of its support
bool is_elementary(const GroupSpec& g, const IntVec& a);

}  // namespace stratamon
