#include "stratamon/monoid.hpp"

#include "stratamon/error.hpp"

#include <algorithm>

namespace stratamon {

Monoid Monoid::full(CongruenceSystem sys) {
    if (sys.dim <= 0) throw input_error("monoid dimension must be positive");
    if (sys.rows.empty()) throw input_error("congruence system needs at least one row");
    for (const CongruenceRow& r : sys.rows) {
        if (static_cast<int>(r.coeffs.size()) != sys.dim)
            throw input_error("row coefficient count does not match dimension");
        if (r.modulus == 1) throw input_error("modulus 1 row is vacuous; drop it");
        if (r.modulus < 0) throw input_error("negative modulus");
    }
    Monoid m;
    m.kind_ = MonoidKind::full;
    m.dim_ = sys.dim;
    m.sys_ = std::move(sys);
    m.cache_ = std::make_shared<detail::MonoidCache>();
    return m;
}

Monoid Monoid::generated(GeneratedSemigroup gen) {
    if (gen.dim <= 0) throw input_error("monoid dimension must be positive");
    if (gen.generators.empty()) throw input_error("generated monoid needs at least one generator");
    std::vector<IntVec> vs;
    for (const IntVec& g : gen.generators) {
        if (static_cast<int>(g.size()) != gen.dim)
            throw input_error("generator dimension mismatch");
        if (!all_nonneg(g)) throw input_error("generators must lie in N^dim");
        if (is_zero(g)) continue;
        vs.push_back(g);
    }
    if (vs.empty()) throw input_error("generated monoid needs a nonzero generator");
    std::sort(vs.begin(), vs.end(), grlex_less);
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    Monoid m;
    m.kind_ = MonoidKind::generated;
    m.dim_ = gen.dim;
    m.gen_ = GeneratedSemigroup{gen.dim, std::move(vs)};
    m.cache_ = std::make_shared<detail::MonoidCache>();
    return m;
}

const CongruenceSystem& Monoid::system() const {
    if (kind_ != MonoidKind::full) throw internal_error("system() on generated monoid");
    return sys_;
}

const GeneratedSemigroup& Monoid::generators() const {
    if (kind_ != MonoidKind::generated) throw internal_error("generators() on full monoid");
    return gen_;
}

static bool rows_satisfied(const CongruenceSystem& sys, const IntVec& x) {
    for (const CongruenceRow& r : sys.rows) {
        Int v = dot(r.coeffs, x);
        if (r.modulus == 0) {
            if (v != 0) return false;
        } else if (v % r.modulus != 0) {
            return false;
        }
    }
    return true;
}

// membership for generated monoids: peel generators, memoized on the shared
// cache; grade strictly decreases so the recursion terminates
static bool gen_member(const Monoid& m, const IntVec& x) {
    if (is_zero(x)) return true;
    auto& cache = m.cache();
    {
        std::lock_guard<std::mutex> lk(cache.mtx);
        auto it = cache.member_memo.find(x);
        if (it != cache.member_memo.end()) return it->second;
    }
    bool ok = false;
    for (const IntVec& g : m.generators().generators) {
        if (!leq_comp(g, x)) continue;
        if (gen_member(m, vec_sub(x, g))) {
            ok = true;
            break;
        }
    }
    std::lock_guard<std::mutex> lk(cache.mtx);
    cache.member_memo.emplace(x, ok);
    return ok;
}

bool Monoid::contains(const IntVec& x) const {
    if (static_cast<int>(x.size()) != dim_) throw input_error("membership: dimension mismatch");
    if (!all_nonneg(x)) return false;
    if (kind_ == MonoidKind::full) return rows_satisfied(sys_, x);
    return gen_member(*this, x);
}

EmbeddedModel elliott_monoid(const Int& a, const Int& b, const Int& c) {
    if (a < 1 || b < 1 || c < 1) throw input_error("parameters must be positive");
    CongruenceSystem sys;
    sys.dim = 2;
    if (c == 1) {
        // every pair is admissible; encode as the trivially satisfied equality row
        sys.rows.push_back({IntVec{0, 0}, Int(0)});
    } else {
        sys.rows.push_back({IntVec{a, b}, c});
    }
    EmbeddedModel em{Monoid::full(std::move(sys)),
                     "(x,y) -> (x, y, (" + a.str() + "x+" + b.str() + "y)/" + c.str() + ")"};
    return em;
}

LatticeBasis group_lattice(const Monoid& m) {
    if (m.kind() == MonoidKind::generated) {
        auto& cache = m.cache();
        {
            std::lock_guard<std::mutex> lk(cache.mtx);
            if (cache.group) return *cache.group;
        }
        LatticeBasis b = lattice_basis(m.generators().generators);
        std::lock_guard<std::mutex> lk(cache.mtx);
        if (!cache.group) cache.group = b;
        return *cache.group;
    }
    auto& cache = m.cache();
    {
        std::lock_guard<std::mutex> lk(cache.mtx);
        if (cache.group) return *cache.group;
    }
    // G(M) = { x in Z^n : each congruence row has a slack multiple }, i.e. the
    // projection to the x-block of the kernel of [A | -diag(mods)].
    const CongruenceSystem& sys = m.system();
    const int n = sys.dim;
    std::vector<CongruenceRow> congr;
    std::vector<IntVec> eqs;
    for (const CongruenceRow& r : sys.rows) {
        if (r.modulus == 0)
            eqs.push_back(r.coeffs);
        else
            congr.push_back(r);
    }
    const int k = static_cast<int>(congr.size());
    std::vector<IntVec> rows;
    for (int i = 0; i < k; ++i) {
        IntVec row(n + k, 0);
        for (int j = 0; j < n; ++j) row[j] = congr[i].coeffs[j];
        row[n + i] = -congr[i].modulus;
        rows.push_back(row);
    }
    for (const IntVec& e : eqs) {
        IntVec row(n + k, 0);
        for (int j = 0; j < n; ++j) row[j] = e[j];
        rows.push_back(row);
    }
    std::vector<IntVec> ker = integer_kernel(rows, n + k);
    std::vector<IntVec> proj;
    for (const IntVec& v : ker) proj.push_back(IntVec(v.begin(), v.begin() + n));
    LatticeBasis b;
    if (proj.empty()) {
        b.dim = n;  // zero lattice
    } else {
        b = lattice_basis(proj);
    }
    std::lock_guard<std::mutex> lk(cache.mtx);
    if (!cache.group) cache.group = b;
    return *cache.group;
}

RootClosedReport is_root_closed(const Monoid& m, const Int& box_bound) {
    if (m.kind() == MonoidKind::full) return {true, std::nullopt};
    if (box_bound < 2) throw input_error("box bound must be at least 2");
    LatticeBasis g = group_lattice(m);
    const int n = m.dim();
    std::vector<IntVec> pts;
    IntVec cur(n, 0);
    // odometer over [0, box]^n, then grlex sort for a deterministic scan order
    while (true) {
        pts.push_back(cur);
        int i = n - 1;
        while (i >= 0 && cur[i] == box_bound) {
            cur[i] = 0;
            --i;
        }
        if (i < 0) break;
        ++cur[i];
    }
    std::sort(pts.begin(), pts.end(), grlex_less);
    for (const IntVec& x : pts) {
        if (is_zero(x)) continue;
        if (!lattice_member(x, g)) continue;
        if (m.contains(x)) continue;
        for (Int k = 2; k <= box_bound; ++k) {
            if (m.contains(vec_scale(k, x))) return {false, x};
        }
    }
    return {true, std::nullopt};
}

}  // namespace stratamon
