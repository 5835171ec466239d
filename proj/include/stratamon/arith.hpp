#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace stratamon {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// grade(v) = sum of |entries|; coincides with the coordinate sum on N^n and
// extends grlex to facet normals with mixed signs.
Int grade(const IntVec& v);

// grade first, then lexicographic. Total order on vectors of equal dim.
bool grlex_less(const IntVec& a, const IntVec& b);

IntVec vec_add(const IntVec& a, const IntVec& b);
IntVec vec_sub(const IntVec& a, const IntVec& b);
IntVec vec_scale(const Int& c, const IntVec& a);
Int dot(const IntVec& a, const IntVec& b);

bool is_zero(const IntVec& a);
bool all_nonneg(const IntVec& a);
// componentwise a <= b
bool leq_comp(const IntVec& a, const IntVec& b);

// gcd of all entries, nonnegative; 0 for the zero vector
Int content(const IntVec& a);
// v / content(v); zero vector stays zero
IntVec primitive(const IntVec& a);

Int floor_div(const Int& a, const Int& b);  // round toward -infinity, b > 0
Int rat_floor(const Rat& r);

std::string rat_string(const Rat& r);  // "p/q", or "p" when q == 1

}  // namespace stratamon
