#include "stratamon/hilbert.hpp"

#include "stratamon/error.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace stratamon {

// iterate x over the box [0, upper] componentwise, calling f on each point
static void for_each_box_point(const IntVec& upper, const std::function<void(const IntVec&)>& f) {
    const size_t n = upper.size();
    for (const Int& u : upper)
        if (u < 0) return;
    IntVec cur(n, 0);
    while (true) {
        f(cur);
        size_t i = n;
        while (i > 0 && cur[i - 1] == upper[i - 1]) cur[--i] = 0;
        if (i == 0) break;
        ++cur[i - 1];
    }
}

static std::vector<IntVec> minimal_nonzero(std::vector<IntVec> members) {
    std::sort(members.begin(), members.end(), grlex_less);
    std::vector<IntVec> kept;
    for (const IntVec& x : members) {
        if (is_zero(x)) continue;
        bool reducible = false;
        for (const IntVec& y : kept)
            if (leq_comp(y, x)) {
                reducible = true;
                break;
            }
        if (!reducible) kept.push_back(x);
    }
    return kept;
}

// extreme rays of { x in span(basis) : x >= 0 }, primitive integer vectors.
// basis rows span the solution space of the equality rows.
static std::vector<IntVec> cone_rays(const std::vector<IntVec>& basis, int n) {
    const int r = static_cast<int>(basis.size());
    std::vector<IntVec> rays;
    if (r == 0) return rays;
    if (r == 1) {
        IntVec w = primitive(basis[0]);
        if (all_nonneg(w)) rays.push_back(w);
        else {
            IntVec neg = vec_scale(-1, w);
            if (all_nonneg(neg)) rays.push_back(neg);
        }
        return rays;
    }
    // coordinate j gives the inequality c_j . t >= 0 in parameter space,
    // c_j = (basis[0][j], ..., basis[r-1][j])
    std::vector<IntVec> coord(n, IntVec(r));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < r; ++i) coord[j][i] = basis[i][j];
    std::vector<int> pick(r - 1);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == r - 1) {
            std::vector<IntVec> sub;
            for (int idx : pick) sub.push_back(coord[idx]);
            if (rank_rational(sub) != r - 1) return;
            std::vector<IntVec> ker = integer_kernel(sub, r);
            if (ker.size() != 1) return;
            for (int sign = 0; sign < 2; ++sign) {
                IntVec t = sign ? vec_scale(-1, ker[0]) : ker[0];
                bool ok = true;
                for (int j = 0; j < n && ok; ++j)
                    if (dot(coord[j], t) < 0) ok = false;
                if (!ok) continue;
                IntVec x(n);
                for (int j = 0; j < n; ++j) x[j] = dot(coord[j], t);
                if (is_zero(x)) continue;
                x = primitive(x);
                if (std::find(rays.begin(), rays.end(), x) == rays.end()) rays.push_back(x);
                break;
            }
            return;
        }
        for (int i = start; i <= n - (r - 1 - depth); ++i) {
            pick[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
    std::sort(rays.begin(), rays.end(), grlex_less);
    return rays;
}

static std::vector<IntVec> full_hilbert(const Monoid& m) {
    const CongruenceSystem& sys = m.system();
    const int n = sys.dim;
    std::vector<IntVec> eq_rows;
    std::vector<CongruenceRow> congr;
    for (const CongruenceRow& r : sys.rows) {
        if (r.modulus == 0) eq_rows.push_back(r.coeffs);
        else congr.push_back(r);
    }
    std::vector<IntVec> basis;
    if (eq_rows.empty()) {
        for (int i = 0; i < n; ++i) {
            IntVec e(n, 0);
            e[i] = 1;
            basis.push_back(e);
        }
    } else {
        basis = integer_kernel(eq_rows, n);
    }
    std::vector<IntVec> rays = cone_rays(basis, n);
    if (static_cast<int>(rays.size()) > static_cast<int>(basis.size()) ||
        rank_rational(rays) != static_cast<int>(rays.size()))
        throw unsupported_error("equality system cone is not simplicial");

    Int d = 1;
    for (const CongruenceRow& r : congr) d = lcm(d, r.modulus);

    // atoms fit under sum of the minimal admissible ray multiples: any member
    // with a ray coordinate >= m_rho sheds m_rho * rho and stays a member
    IntVec box(n, 0);
    for (const IntVec& rho : rays) {
        Int mult = d;
        for (Int k = 1; k <= d; ++k) {
            if (m.contains(vec_scale(k, rho))) {
                mult = k;
                break;
            }
        }
        box = vec_add(box, vec_scale(mult, rho));
    }
    std::vector<IntVec> members;
    for_each_box_point(box, [&](const IntVec& x) {
        if (m.contains(x)) members.push_back(x);
    });
    return minimal_nonzero(std::move(members));
}

static std::vector<IntVec> generated_hilbert(const Monoid& m) {
    const std::vector<IntVec>& gens = m.generators().generators;
    std::vector<IntVec> atoms;
    for (size_t i = 0; i < gens.size(); ++i) {
        std::vector<IntVec> others;
        for (size_t j = 0; j < gens.size(); ++j)
            if (j != i) others.push_back(gens[j]);
        std::map<IntVec, bool> memo;
        std::function<bool(const IntVec&)> member = [&](const IntVec& x) -> bool {
            if (is_zero(x)) return true;
            auto it = memo.find(x);
            if (it != memo.end()) return it->second;
            bool ok = false;
            for (const IntVec& g : others)
                if (leq_comp(g, x) && member(vec_sub(x, g))) {
                    ok = true;
                    break;
                }
            memo.emplace(x, ok);
            return ok;
        };
        if (others.empty() || !member(gens[i])) atoms.push_back(gens[i]);
    }
    return atoms;  // gens already grlex-sorted
}

HilbertBasis hilbert_basis(const Monoid& m) {
    auto& cache = m.cache();
    {
        std::lock_guard<std::mutex> lk(cache.mtx);
        if (cache.hilbert) return {*cache.hilbert};
    }
    std::vector<IntVec> atoms =
        m.kind() == MonoidKind::full ? full_hilbert(m) : generated_hilbert(m);
    std::lock_guard<std::mutex> lk(cache.mtx);
    if (!cache.hilbert) cache.hilbert = std::move(atoms);
    return {*cache.hilbert};
}

AperySet apery(const Monoid& m, const std::vector<IntVec>& base, const Int& box_bound) {
    if (base.empty()) throw input_error("apery: empty base");
    for (const IntVec& x : base) {
        if (static_cast<int>(x.size()) != m.dim()) throw input_error("apery: dimension mismatch");
        if (is_zero(x)) throw input_error("apery: zero base element");
        if (!m.contains(x)) throw input_error("apery: base element outside the monoid");
    }
    if (box_bound < 1) throw input_error("apery: box bound must be positive");

    const int n = m.dim();
    AperySet result;
    result.base = base;

    IntVec upper(n, box_bound);
    bool complete = false;
    if (m.kind() == MonoidKind::full) {
        // an axis element per coordinate caps the Apery set inside
        // prod [0, alpha_j): subtracting the axis element stays in M
        IntVec alpha(n, 0);
        bool all_axes = true;
        for (int j = 0; j < n && all_axes; ++j) {
            Int best = -1;
            for (const IntVec& x : base) {
                bool axis = x[j] > 0;
                for (int t = 0; t < n && axis; ++t)
                    if (t != j && x[t] != 0) axis = false;
                if (axis && (best < 0 || x[j] < best)) best = x[j];
            }
            if (best < 0) all_axes = false;
            else alpha[j] = best;
        }
        if (all_axes) {
            complete = true;
            for (int j = 0; j < n; ++j) upper[j] = alpha[j] - 1;
        }
    }
    result.complete = complete;
    result.box = upper;

    for_each_box_point(upper, [&](const IntVec& x) {
        if (!m.contains(x)) return;
        for (const IntVec& b : base) {
            IntVec diff = vec_sub(x, b);
            if (all_nonneg(diff) && m.contains(diff)) return;
        }
        result.elements.push_back(x);
    });
    std::sort(result.elements.begin(), result.elements.end(), grlex_less);
    return result;
}

std::vector<Int> primary_representation(const Monoid& s, const IntVec& x,
                                        const std::vector<int>& order) {
    if (s.kind() != MonoidKind::generated || s.dim() != 1)
        throw input_error("primary representation needs a generated monoid of dimension 1");
    if ((int)x.size() != 1 || x[0] < 0)
        throw input_error("element must be a single nonnegative integer");
    const auto& gens = s.generators().generators;
    if (order.size() != gens.size())
        throw input_error("order must be a permutation of the generator indices");
    std::vector<char> seen(gens.size(), 0);
    for (int idx : order) {
        if (idx < 0 || idx >= (int)gens.size() || seen[idx])
            throw input_error("order must be a permutation of the generator indices");
        seen[idx] = 1;
    }
    if (!s.contains(x)) throw input_error("element is not in the monoid");

    std::vector<Int> coeffs(gens.size(), 0);
    Int rest = x[0];
    for (int idx : order) {
        Int n = gens[idx][0];
        // largest k with rest - k*n still representable; scan down from rest/n
        for (Int k = rest / n; k >= 0; --k) {
            Int r = rest - k * n;
            if (s.contains(IntVec{r})) {
                coeffs[idx] = k;
                rest = r;
                break;
            }
        }
    }
    if (rest != 0) throw internal_error("greedy representation left a nonzero remainder");

    // each tail must avoid every earlier generator's shift staying inside S
    Int tail = x[0];
    for (size_t i = 0; i < order.size(); ++i) {
        tail -= coeffs[order[i]] * gens[order[i]][0];
        if (!s.contains(IntVec{tail}))
            throw internal_error("stage tail escaped the monoid");
        for (size_t j = 0; j <= i; ++j) {
            Int back = tail - gens[order[j]][0];
            if (back >= 0 && s.contains(IntVec{back}))
                throw internal_error("stage tail is not Apery with respect to its prefix");
        }
    }
    return coeffs;
}

}  // namespace stratamon
