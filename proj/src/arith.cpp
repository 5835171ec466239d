#include "stratamon/arith.hpp"

#include "stratamon/error.hpp"

namespace stratamon {

Int grade(const IntVec& v) {
    Int s = 0;
    for (const Int& e : v) s += abs(e);
    return s;
}

bool grlex_less(const IntVec& a, const IntVec& b) {
    Int ga = grade(a), gb = grade(b);
    if (ga != gb) return ga < gb;
    return a < b;
}

IntVec vec_add(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

IntVec vec_sub(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

IntVec vec_scale(const Int& c, const IntVec& a) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

Int dot(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_zero(const IntVec& a) {
    for (const Int& e : a)
        if (e != 0) return false;
    return true;
}

bool all_nonneg(const IntVec& a) {
    for (const Int& e : a)
        if (e < 0) return false;
    return true;
}

bool leq_comp(const IntVec& a, const IntVec& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Int content(const IntVec& a) {
    Int g = 0;
    for (const Int& e : a) g = gcd(g, e);
    return abs(g);
}

IntVec primitive(const IntVec& a) {
    Int g = content(a);
    if (g == 0 || g == 1) return a;
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] / g;
    return r;
}

Int floor_div(const Int& a, const Int& b) {
    if (b <= 0) throw internal_error("floor_div needs positive divisor");
    Int q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

Int rat_floor(const Rat& r) {
    return floor_div(numerator(r), denominator(r));
}

std::string rat_string(const Rat& r) {
    Int n = numerator(r), d = denominator(r);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

}  // namespace stratamon
