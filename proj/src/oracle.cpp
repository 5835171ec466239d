#include "stratamon/oracle.hpp"

#include "stratamon/error.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace stratamon {
namespace oracle {

std::vector<IntVec> enum_monoid(const Monoid& m, const Int& box) {
    if (box < 0) throw input_error("enum_monoid: negative box");
    const int n = m.dim();
    std::vector<IntVec> out;
    if (m.kind() == MonoidKind::full) {
        const CongruenceSystem& sys = m.system();
        IntVec cur(n, 0);
        while (true) {
            bool ok = true;
            for (const CongruenceRow& r : sys.rows) {
                Int v = dot(r.coeffs, cur);
                if (r.modulus == 0 ? v != 0 : v % r.modulus != 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) out.push_back(cur);
            int i = n - 1;
            while (i >= 0 && cur[i] == box) cur[i--] = 0;
            if (i < 0) break;
            ++cur[i];
        }
    } else {
        // additive closure from the generators, intentionally independent of
        // the membership recursion it is used to cross-check
        std::set<IntVec> seen;
        std::deque<IntVec> queue;
        IntVec zero(n, 0);
        seen.insert(zero);
        queue.push_back(zero);
        while (!queue.empty()) {
            IntVec cur = queue.front();
            queue.pop_front();
            for (const IntVec& g : m.generators().generators) {
                IntVec nxt = vec_add(cur, g);
                bool inside = true;
                for (const Int& e : nxt)
                    if (e > box) {
                        inside = false;
                        break;
                    }
                if (!inside) continue;
                if (seen.insert(nxt).second) queue.push_back(nxt);
            }
        }
        out.assign(seen.begin(), seen.end());
    }
    std::sort(out.begin(), out.end(), grlex_less);
    return out;
}

std::vector<IntVec> brute_atoms(const Monoid& m, const Int& box) {
    std::vector<IntVec> members = enum_monoid(m, box);
    std::set<IntVec> lookup(members.begin(), members.end());
    std::vector<IntVec> atoms;
    for (const IntVec& x : members) {
        if (is_zero(x)) continue;
        bool sum = false;
        for (const IntVec& y : members) {
            if (is_zero(y) || !leq_comp(y, x) || y == x) continue;
            IntVec z = vec_sub(x, y);
            if (!is_zero(z) && lookup.count(z)) {
                sum = true;
                break;
            }
        }
        if (!sum) atoms.push_back(x);
    }
    return atoms;
}

std::vector<IntVec> brute_apery(const Monoid& m, const std::vector<IntVec>& base,
                                const IntVec& box) {
    Int maxc = 0;
    for (const Int& b : box) maxc = std::max(maxc, b);
    std::vector<IntVec> members = enum_monoid(m, maxc);
    std::set<IntVec> lookup(members.begin(), members.end());
    std::vector<IntVec> out;
    for (const IntVec& x : members) {
        if (!leq_comp(x, box)) continue;
        bool reachable = false;
        for (const IntVec& b : base) {
            if (!leq_comp(b, x)) continue;
            if (lookup.count(vec_sub(x, b))) {
                reachable = true;
                break;
            }
        }
        if (!reachable) out.push_back(x);
    }
    return out;
}

Rat brute_lambda(const Monoid& m, const IntVec& x, const IntVec& y, const Int& max_den) {
    if (is_zero(x)) throw input_error("brute_lambda: x must be nonzero");
    Rat best = 0;
    for (Int n = 1; n <= max_den; ++n) {
        IntVec ny = vec_scale(n, y);
        // m_cap: largest m keeping n*y - m*x componentwise nonnegative
        Int m_cap = -1;
        for (size_t j = 0; j < x.size(); ++j) {
            if (x[j] == 0) continue;
            Int c = ny[j] / x[j];
            if (m_cap < 0 || c < m_cap) m_cap = c;
        }
        if (m_cap < 0) throw input_error("brute_lambda: x has no positive coordinate");
        for (Int k = m_cap; k >= 0; --k) {
            IntVec diff = vec_sub(ny, vec_scale(k, x));
            if (all_nonneg(diff) && m.contains(diff)) {
                Rat q(k, n);
                if (q > best) best = q;
                break;
            }
        }
    }
    return best;
}

std::vector<StratumAssignment> brute_representations(
    const Monoid& m, const std::vector<std::vector<IntVec>>& strata, const IntVec& x) {
    std::vector<const IntVec*> flat;
    std::vector<size_t> stratum_of;
    for (size_t i = 0; i < strata.size(); ++i)
        for (const IntVec& a : strata[i]) {
            flat.push_back(&a);
            stratum_of.push_back(i);
        }
    std::vector<Int> coeff(flat.size(), 0);
    std::vector<StratumAssignment> found;

    auto tails_ok = [&](const std::vector<Int>& c) {
        // stage tail must be an Apery element against every earlier stratum
        IntVec tail = x;
        for (size_t i = 0; i + 1 < strata.size(); ++i) {
            for (size_t t = 0; t < flat.size(); ++t)
                if (stratum_of[t] == i) tail = vec_sub(tail, vec_scale(c[t], *flat[t]));
            if (!all_nonneg(tail) || !m.contains(tail)) return false;
            for (size_t t = 0; t < flat.size(); ++t) {
                if (stratum_of[t] > i) continue;
                IntVec diff = vec_sub(tail, *flat[t]);
                if (all_nonneg(diff) && m.contains(diff)) return false;
            }
        }
        return true;
    };

    std::function<void(size_t, IntVec)> rec = [&](size_t idx, IntVec rest) {
        if (idx == flat.size()) {
            if (!is_zero(rest)) return;
            if (!tails_ok(coeff)) return;
            StratumAssignment a;
            size_t t = 0;
            for (size_t i = 0; i < strata.size(); ++i) {
                std::vector<Int> row;
                for (size_t j = 0; j < strata[i].size(); ++j) row.push_back(coeff[t++]);
                a.coeffs.push_back(row);
            }
            found.push_back(a);
            return;
        }
        coeff[idx] = 0;
        IntVec cur = rest;
        while (true) {
            rec(idx + 1, cur);
            if (!leq_comp(*flat[idx], cur)) break;
            cur = vec_sub(cur, *flat[idx]);
            ++coeff[idx];
        }
        coeff[idx] = 0;
    };
    rec(0, x);
    return found;
}

}  // namespace oracle
}  // namespace stratamon
