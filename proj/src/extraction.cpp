#include "stratamon/extraction.hpp"

#include "stratamon/error.hpp"

#include <algorithm>
#include <functional>

namespace stratamon {

static std::vector<IntVec> cone_generators(const Monoid& m) {
    if (m.kind() == MonoidKind::generated) return m.generators().generators;
    return hilbert_basis(m).atoms;
}

static std::vector<IntVec> compute_facets(const Monoid& m) {
    const int n = m.dim();
    if (n > 4) throw unsupported_error("facet enumeration limited to dimension 4");
    std::vector<IntVec> gens = cone_generators(m);
    if (gens.empty()) throw unsupported_error("zero cone has no facet description");
    const int r = rank_rational(gens);
    std::vector<IntVec> normals;

    if (r < n) {
        // orthogonal-complement pairs pin the span
        std::vector<IntVec> comp = integer_kernel(gens, n);
        for (const IntVec& w : comp) {
            normals.push_back(w);
            normals.push_back(vec_scale(-1, w));
        }
    }
    if (r == 1) {
        normals.push_back(primitive(gens[0]));
    } else if (r >= 2) {
        // span basis from the HNF of the generators
        std::vector<IntVec> basis = hnf_rows(gens);
        // candidate facet: (r-1)-subset of generators of rank r-1; its normal
        // inside the span is the kernel of the Gram-style system
        std::vector<int> pick(r - 1);
        const int g = static_cast<int>(gens.size());
        std::function<void(int, int)> rec = [&](int start, int depth) {
            if (depth == r - 1) {
                std::vector<IntVec> sub;
                for (int idx : pick) sub.push_back(gens[idx]);
                if (rank_rational(sub) != r - 1) return;
                // v = sum y_i basis[i] with v.s = 0 for all s in sub
                std::vector<IntVec> sys;
                for (const IntVec& s : sub) {
                    IntVec row(r);
                    for (int i = 0; i < r; ++i) row[i] = dot(basis[i], s);
                    sys.push_back(row);
                }
                std::vector<IntVec> ker = integer_kernel(sys, r);
                if (ker.size() != 1) return;
                IntVec v(static_cast<size_t>(n), 0);
                for (int i = 0; i < r; ++i)
                    v = vec_add(v, vec_scale(ker[0][i], basis[i]));
                v = primitive(v);
                bool nonneg = true, nonpos = true;
                for (const IntVec& x : gens) {
                    Int d = dot(v, x);
                    if (d < 0) nonneg = false;
                    if (d > 0) nonpos = false;
                }
                if (!nonneg && !nonpos) return;
                if (!nonneg) v = vec_scale(-1, v);
                if (std::find(normals.begin(), normals.end(), v) == normals.end())
                    normals.push_back(v);
                return;
            }
            for (int i = start; i <= g - (r - 1 - depth); ++i) {
                pick[depth] = i;
                rec(i + 1, depth + 1);
            }
        };
        rec(0, 0);
    }
    std::sort(normals.begin(), normals.end(), grlex_less);
    normals.erase(std::unique(normals.begin(), normals.end()), normals.end());
    for (const IntVec& v : normals)
        for (const IntVec& x : gens)
            if (dot(v, x) < 0) throw internal_error("facet normal fails a generator");
    return normals;
}

ConeFacets cone_facets(const Monoid& m) {
    auto& cache = m.cache();
    {
        std::lock_guard<std::mutex> lk(cache.mtx);
        if (cache.facets) return {*cache.facets};
    }
    std::vector<IntVec> normals = compute_facets(m);
    std::lock_guard<std::mutex> lk(cache.mtx);
    if (!cache.facets) cache.facets = std::move(normals);
    return {*cache.facets};
}

std::optional<Rat> extraction_grade(const Monoid& m, const IntVec& x, const IntVec& y) {
    if (!m.contains(x) || !m.contains(y))
        throw input_error("extraction grade needs members of the monoid");
    if (is_zero(x)) throw input_error("extraction grade undefined for x = 0");
    std::optional<Rat> best;
    for (const IntVec& v : cone_facets(m).normals) {
        Int vx = dot(v, x);
        if (vx <= 0) continue;
        Rat q(dot(v, y), vx);
        if (!best || q < *best) best = q;
    }
    return best;
}

AtomClassification classify_atom(const Monoid& m, const IntVec& atom) {
    std::vector<IntVec> atoms = hilbert_basis(m).atoms;
    if (std::find(atoms.begin(), atoms.end(), atom) == atoms.end())
        throw input_error("not an atom of the monoid");
    AtomClassification c;
    c.atom = atom;

    // extremal <=> the face { v.x = 0 : v in T(atom) } is one-dimensional
    std::vector<IntVec> vanishing;
    for (const IntVec& v : cone_facets(m).normals)
        if (dot(v, atom) == 0) vanishing.push_back(v);
    c.extremal = m.dim() - rank_rational(vanishing) == 1;
    c.pure = c.extremal;  // affine case: purity degenerates to extremality

    if (c.extremal) {
        // strong needs the ray to carry no second atom; any other summand of a
        // multiple of `atom` would itself sit on this extremal ray
        bool lone = true;
        IntVec dir = primitive(atom);
        for (const IntVec& other : atoms) {
            if (other == atom) continue;
            if (primitive(other) == dir) {
                lone = false;
                break;
            }
        }
        c.strong = lone;
    }
    return c;
}

RatVec coordinates(const IntVec& x, const std::vector<IntVec>& base) {
    if (base.empty()) throw input_error("coordinates: empty base");
    std::optional<RatVec> sol = solve_rational_system(base, x);
    if (!sol) throw input_error("coordinates: element outside the span of the base");
    for (const Rat& c : *sol)
        if (c < 0) throw input_error("coordinates: element outside the cone of the base");
    return *sol;
}

bool in_D(const IntVec& x, const std::vector<IntVec>& base) {
    RatVec c = coordinates(x, base);
    for (const Rat& e : c)
        if (e >= 1) return false;
    return true;
}

Int mu(const IntVec& x, const std::vector<IntVec>& base) {
    RatVec c = coordinates(x, base);
    Int m = 1;
    for (const Rat& e : c) m = lcm(m, denominator(e));
    return m;
}

bool is_inside_factorial_base(const Monoid& m, const std::vector<IntVec>& base) {
    std::vector<IntVec> atoms = hilbert_basis(m).atoms;
    for (const IntVec& q : base)
        if (std::find(atoms.begin(), atoms.end(), q) == atoms.end())
            throw input_error("base element is not an atom of the monoid");
    if (rank_rational(base) != static_cast<int>(base.size())) return false;
    for (const IntVec& x : cone_generators(m)) {
        std::optional<RatVec> sol = solve_rational_system(base, x);
        if (!sol) return false;
        for (const Rat& c : *sol)
            if (c < 0) return false;
    }
    return true;
}

}  // namespace stratamon
