#pragma once

#include "stratamon/monoid.hpp"

#include <algorithm>
#include <vector>

namespace testutil {

using stratamon::CongruenceRow;
using stratamon::CongruenceSystem;
using stratamon::GeneratedSemigroup;
using stratamon::Int;
using stratamon::IntVec;
using stratamon::Monoid;

inline IntVec iv(std::initializer_list<long long> xs) {
    IntVec v;
    for (long long x : xs) v.push_back(x);
    return v;
}

inline Monoid full1(int dim, std::initializer_list<long long> coeffs, long long mod) {
    CongruenceSystem sys;
    sys.dim = dim;
    CongruenceRow row;
    row.coeffs = iv(coeffs);
    row.modulus = mod;
    sys.rows.push_back(std::move(row));
    return Monoid::full(std::move(sys));
}

inline Monoid gen(int dim, std::vector<IntVec> vecs) {
    GeneratedSemigroup g;
    g.dim = dim;
    g.generators = std::move(vecs);
    return Monoid::generated(std::move(g));
}

// order-insensitive comparison of vector sets
inline bool set_eq(std::vector<IntVec> a, std::vector<IntVec> b) {
    std::sort(a.begin(), a.end(), stratamon::grlex_less);
    std::sort(b.begin(), b.end(), stratamon::grlex_less);
    return a == b;
}

inline Monoid mod7() { return full1(2, {1, 2}, 7); }
inline Monoid mod11() { return full1(3, {4, 5, 8}, 11); }

}  // namespace testutil
