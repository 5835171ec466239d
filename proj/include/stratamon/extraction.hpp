#pragma once

#include "stratamon/hilbert.hpp"
#include "stratamon/monoid.hpp"

#include <optional>
#include <vector>

namespace stratamon {

// Inner facet normals of cone(M): primitive integer vectors, grlex-sorted,
// every generator evaluating >= 0 on each. For rank-deficient cones the list
// includes +/- pairs spanning the orthogonal complement, so
// cone(M) = { x : v.x >= 0 for all v } exactly.
struct ConeFacets {
    std::vector<IntVec> normals;
};

ConeFacets cone_facets(const Monoid& m);

// lambda_M(x, y) = min over facet normals v with v.x > 0 of v(y)/v(x);
// nullopt encodes +infinity (no normal separates x). x, y must be members,
// x nonzero.
std::optional<Rat> extraction_grade(const Monoid& m, const IntVec& x, const IntVec& y);

struct AtomClassification {
    IntVec atom;
    bool extremal = false;
    bool pure = false;
    bool strong = false;
};

AtomClassification classify_atom(const Monoid& m, const IntVec& atom);

// rational coordinates of x in the independent base Q; entries >= 0.
RatVec coordinates(const IntVec& x, const std::vector<IntVec>& base);

// x lies in the fundamental half-open box sum [0,1) * Q
bool in_D(const IntVec& x, const std::vector<IntVec>& base);

// least mu >= 1 with mu * x in the lattice spanned by Q
Int mu(const IntVec& x, const std::vector<IntVec>& base);

// Q is independent and every atom of M sits inside cone(Q)
bool is_inside_factorial_base(const Monoid& m, const std::vector<IntVec>& base);

}  // namespace stratamon
