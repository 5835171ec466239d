#include "stratamon/stratify.hpp"

#include "stratamon/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstdio>
#include <functional>
#include <map>

namespace stratamon {

static bool log_enabled() {
    static const char* v = std::getenv("STRATAMON_LOG");
    return v && *v;
}

static std::string vec_str(const IntVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s + ")";
}

// all factorizations of target over the atom list, coefficient sum capped;
// stops once `cap` factorizations are found. DFS in coefficient-lex order so
// the first two hits are deterministic.
static std::vector<std::vector<Int>> capped_factorizations(const std::vector<IntVec>& atoms,
                                                           const IntVec& target, int cap,
                                                           const Int& sum_cap) {
    std::vector<std::vector<Int>> found;
    std::vector<Int> coeff(atoms.size(), 0);
    std::function<void(size_t, IntVec, Int)> rec = [&](size_t idx, IntVec rest, Int used) {
        if (static_cast<int>(found.size()) >= cap) return;
        if (idx == atoms.size()) {
            if (is_zero(rest)) found.push_back(coeff);
            return;
        }
        Int c = 0;
        IntVec cur = rest;
        while (true) {
            coeff[idx] = c;
            rec(idx + 1, cur, used + c);
            if (static_cast<int>(found.size()) >= cap) break;
            if (used + c + 1 > sum_cap || !leq_comp(atoms[idx], cur)) break;
            cur = vec_sub(cur, atoms[idx]);
            ++c;
        }
        coeff[idx] = 0;
    };
    rec(0, target, 0);
    return found;
}

// stage-internal box for the informational S3 flag; apery on generated
// stages cannot certify completeness, so the check is box-limited by design
static const Int kS3Box = 12;
// factorization probe cap per side of a collision
static const Int kProbeSumCap = 12;

static void order_stratum(std::vector<IntVec>& h, int dim) {
    std::sort(h.begin(), h.end(), grlex_less);
    if (dim == 2 && h.size() == 2) {
        bool a_axis = h[0][0] == 0 || h[0][1] == 0;
        bool b_axis = h[1][0] == 0 || h[1][1] == 0;
        if (a_axis && b_axis) {
            // axis pair reads x-axis first
            if (h[0][0] == 0) std::swap(h[0], h[1]);
        } else if (!a_axis && !b_axis) {
            // interior pair reads steeper slope first: y0/x0 < y1/x1
            if (h[0][1] * h[1][0] < h[1][1] * h[0][0]) std::swap(h[0], h[1]);
        }
    }
}

Stratification stratify(const Monoid& m) {
    Stratification out;
    std::vector<IntVec> rest = hilbert_basis(m).atoms;
    if (rest.empty()) {
        out.complete = true;
        return out;
    }
    int stage = 1;
    while (!rest.empty()) {
        Monoid mi = stage == 1 ? m
                               : Monoid::generated(GeneratedSemigroup{m.dim(), rest});
        std::vector<IntVec> strong, leftover;
        for (const IntVec& a : rest) {
            if (classify_atom(mi, a).strong)
                strong.push_back(a);
            else
                leftover.push_back(a);
        }
        if (log_enabled())
            std::fprintf(stderr, "[stratify] stage %d: %zu strong of %zu\n", stage,
                         strong.size(), rest.size());

        if (strong.empty()) {
            // some extremal ray carries two atoms; cross multiples collide
            out.failed_stage = stage;
            for (size_t i = 0; i < rest.size() && !out.witness; ++i)
                for (size_t j = i + 1; j < rest.size() && !out.witness; ++j) {
                    if (primitive(rest[i]) != primitive(rest[j])) continue;
                    const IntVec p = primitive(rest[i]);
                    Int s = rest[i][0], t = rest[j][0];  // multiples of p
                    for (size_t k = 0; k < p.size(); ++k)
                        if (p[k] != 0) {
                            s = rest[i][k] / p[k];
                            t = rest[j][k] / p[k];
                            break;
                        }
                    FailureWitness w;
                    w.atoms = {rest[i], rest[j]};
                    w.left = {t, Int(0)};
                    w.right = {Int(0), s};
                    w.value = vec_scale(t, rest[i]);
                    out.witness = w;
                }
            if (!out.witness)
                throw internal_error("stage captured nothing but no ray is crowded");
            return out;
        }

        order_stratum(strong, m.dim());

        Stratum st;
        st.atoms = strong;
        st.independent = rank_rational(strong) == static_cast<int>(strong.size());
        st.base_certified = st.independent && is_inside_factorial_base(mi, strong);
        st.s3_certified = check_S3(mi, strong, kS3Box).ok;

        // fatal probe: a doubled leftover atom with two factorizations over
        // the stratum breaks uniqueness of the layered representations
        for (const IntVec& x : leftover) {
            auto reps = capped_factorizations(strong, vec_scale(2, x), 2, kProbeSumCap);
            if (reps.size() >= 2) {
                out.failed_stage = stage;
                FailureWitness w;
                w.atoms = strong;
                w.left = reps[0];
                w.right = reps[1];
                w.value = vec_scale(2, x);
                out.witness = w;
                if (log_enabled())
                    std::fprintf(stderr, "[stratify] stage %d fails at %s\n", stage,
                                 vec_str(x).c_str());
                return out;
            }
        }

        out.strata.push_back(std::move(st));
        rest = std::move(leftover);
        ++stage;
    }
    out.complete = true;
    return out;
}

S3Result check_S3(const Monoid& m, const std::vector<IntVec>& base, const Int& box_bound) {
    AperySet ap = apery(m, base, box_bound);
    LatticeBasis lat = lattice_basis(base);
    S3Result r;
    r.ok = true;
    r.box_limited = !ap.complete;
    r.box = ap.box;
    for (size_t i = 0; i < ap.elements.size() && r.ok; ++i)
        for (size_t j = i + 1; j < ap.elements.size() && r.ok; ++j)
            if (lattice_member(vec_sub(ap.elements[j], ap.elements[i]), lat)) r.ok = false;
    return r;
}

Representation decompose(const Monoid& m, const Stratification& s, const IntVec& x) {
    if (!s.complete) throw input_error("decompose needs a complete stratification");
    if (!m.contains(x)) throw input_error("decompose: element outside the monoid");

    Representation rep;
    rep.value = x;
    IntVec rest = x;
    for (const Stratum& st : s.strata) {
        if (rank_rational(st.atoms) != static_cast<int>(st.atoms.size()))
            throw unsupported_error("decompose over a dependent stratum");
        std::optional<RatVec> c = solve_rational_system(st.atoms, rest);
        if (!c) throw internal_error("remainder escaped the stratum span");
        std::vector<Int> floors;
        for (const Rat& e : *c) {
            Int f = rat_floor(e);
            if (f < 0) throw internal_error("negative stage coefficient");
            floors.push_back(f);
        }
        for (size_t j = 0; j < st.atoms.size(); ++j)
            rest = vec_sub(rest, vec_scale(floors[j], st.atoms[j]));
        if (!all_nonneg(rest) || !m.contains(rest))
            throw internal_error("stage remainder left the monoid");
        rep.coeffs.push_back(std::move(floors));
    }
    if (!is_zero(rest)) throw internal_error("nonzero final remainder");

    // recheck the Apery conditions of every stage tail before trusting the floors
    IntVec tail = x;
    for (size_t i = 0; i + 1 < s.strata.size(); ++i) {
        const Stratum& st = s.strata[i];
        for (size_t j = 0; j < st.atoms.size(); ++j)
            tail = vec_sub(tail, vec_scale(rep.coeffs[i][j], st.atoms[j]));
        if (!m.contains(tail)) throw internal_error("stage tail left the monoid");
        for (size_t k = 0; k <= i; ++k)
            for (const IntVec& a : s.strata[k].atoms) {
                IntVec diff = vec_sub(tail, a);
                if (all_nonneg(diff) && m.contains(diff))
                    throw internal_error("stage tail misses the Apery set");
            }
    }
    return rep;
}

static std::string symbol_name(size_t idx) {
    if (idx < 26) return std::string(1, static_cast<char>('a' + idx));
    return "s" + std::to_string(idx + 1);
}

Parametrization parametrize(const Monoid& m, const Stratification& s) {
    if (!s.complete) throw input_error("parametrize needs a complete stratification");
    if (m.kind() != MonoidKind::full)
        throw unsupported_error("parametrization needs a full model");

    Parametrization p;
    // constrained symbols first (strata 2..k in stage order), then the free
    // stage-1 symbols, sharing one name sequence
    size_t next = 0;
    for (size_t i = 1; i < s.strata.size(); ++i)
        for (const IntVec& a : s.strata[i].atoms)
            p.symbols.push_back({a, symbol_name(next++), static_cast<int>(i + 1), false});
    if (!s.strata.empty())
        for (const IntVec& a : s.strata[0].atoms)
            p.symbols.push_back({a, symbol_name(next++), 1, true});

    const std::vector<IntVec> normals = cone_facets(m).normals;

    std::vector<Constraint> raw;
    for (size_t stage = 1; stage < s.strata.size(); ++stage) {
        // tail symbols: constrained symbols of strata >= stage+1 (1-based)
        std::vector<size_t> tail;
        for (size_t t = 0; t < p.symbols.size(); ++t)
            if (!p.symbols[t].free && p.symbols[t].stratum >= static_cast<int>(stage + 1))
                tail.push_back(t);
        if (tail.empty()) continue;

        for (size_t pre = 0; pre < stage; ++pre) {
            for (const IntVec& a : s.strata[pre].atoms) {
                std::vector<const IntVec*> live;
                for (const IntVec& v : normals)
                    if (dot(v, a) > 0) live.push_back(&v);
                if (live.empty()) throw internal_error("no facet sees a stratum atom");

                // one normal must extract most tightly across every tail atom,
                // otherwise the per-atom bound is not expressible as one row
                const IntVec* best = nullptr;
                for (const IntVec* cand : live) {
                    bool dominates = true;
                    for (const IntVec* other : live) {
                        for (size_t t : tail) {
                            const IntVec& q = p.symbols[t].atom;
                            // compare (cand.q)/(cand.a) <= (other.q)/(other.a)
                            if (dot(*cand, q) * dot(*other, a) >
                                dot(*other, q) * dot(*cand, a)) {
                                dominates = false;
                                break;
                            }
                        }
                        if (!dominates) break;
                    }
                    if (dominates) {
                        best = cand;
                        break;
                    }
                }
                if (!best)
                    throw unsupported_error("non-uniform extraction at atom " + vec_str(a));

                Constraint c;
                c.coeffs.assign(p.symbols.size(), Int(0));
                for (size_t t : tail) c.coeffs[t] = dot(*best, p.symbols[t].atom);
                c.strict_lt = dot(*best, a);
                Int g = 0;
                bool any = false;
                for (const Int& e : c.coeffs) {
                    if (e != 0) any = true;
                    g = gcd(g, e);
                }
                if (!any) continue;
                if (g > 1) {
                    for (Int& e : c.coeffs) e /= g;
                    c.strict_lt = floor_div(c.strict_lt - 1, g) + 1;
                }
                raw.push_back(std::move(c));
            }
        }
    }

    // dedupe (keep first), then drop rows implied by a stronger surviving row
    std::vector<Constraint> uniq;
    for (const Constraint& c : raw) {
        bool seen = false;
        for (const Constraint& u : uniq)
            if (u.coeffs == c.coeffs && u.strict_lt == c.strict_lt) {
                seen = true;
                break;
            }
        if (!seen) uniq.push_back(c);
    }
    for (const Constraint& c : uniq) {
        bool dominated = false;
        for (const Constraint& other : uniq) {
            if (&other == &c) continue;
            bool stronger = other.strict_lt <= c.strict_lt;
            for (size_t j = 0; j < c.coeffs.size() && stronger; ++j)
                if (other.coeffs[j] < c.coeffs[j]) stronger = false;
            if (stronger && !(other.coeffs == c.coeffs && other.strict_lt == c.strict_lt)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) p.constraints.push_back(c);
    }
    return p;
}

BijectionReport verify_bijection(const Monoid& m, const Parametrization& p, const Int& box) {
    if (box < 1) throw input_error("verify_bijection: box must be positive");
    BijectionReport rep;
    rep.box = box;

    std::vector<IntVec> members;
    {
        const int n = m.dim();
        IntVec cur(n, 0);
        while (true) {
            if (m.contains(cur)) members.push_back(cur);
            int i = n - 1;
            while (i >= 0 && cur[i] == box) cur[i--] = 0;
            if (i < 0) break;
            ++cur[i];
        }
    }
    rep.members = members.size();

    std::map<IntVec, std::vector<std::vector<Int>>> hits;
    const size_t k = p.symbols.size();
    std::vector<Int> coeff(k, 0);
    Int tuples = 0;
    std::function<void(size_t, IntVec, std::vector<Int>)> rec = [&](size_t idx, IntVec value,
                                                                    std::vector<Int> lhs) {
        if (idx == k) {
            ++tuples;
            auto& v = hits[value];
            if (v.size() < 2) v.push_back(coeff);
            return;
        }
        Int c = 0;
        IntVec val = value;
        std::vector<Int> cur = lhs;
        while (true) {
            bool ok = true;
            for (const Int& e : val)
                if (e > box) {
                    ok = false;
                    break;
                }
            for (size_t t = 0; t < cur.size() && ok; ++t)
                if (cur[t] >= p.constraints[t].strict_lt) ok = false;
            if (!ok) break;
            coeff[idx] = c;
            rec(idx + 1, val, cur);
            val = vec_add(val, p.symbols[idx].atom);
            for (size_t t = 0; t < cur.size(); ++t)
                cur[t] += p.constraints[t].coeffs[idx];
            ++c;
        }
        coeff[idx] = 0;
    };
    rec(0, IntVec(m.dim(), 0), std::vector<Int>(p.constraints.size(), 0));
    rep.tuples = tuples;

    for (const IntVec& x : members) {
        auto it = hits.find(x);
        size_t cnt = it == hits.end() ? 0 : it->second.size();
        if (cnt == 0) rep.missing.push_back(x);
        if (cnt >= 2) {
            rep.multiple.push_back(x);
            rep.multiple_a.push_back(it->second[0]);
            rep.multiple_b.push_back(it->second[1]);
        }
    }
    rep.bijection = rep.missing.empty() && rep.multiple.empty();
    return rep;
}

}  // namespace stratamon
