#include "stratamon/block.hpp"

#include "stratamon/error.hpp"
#include "stratamon/hilbert.hpp"

#include <algorithm>

namespace stratamon {

static void validate(const GroupSpec& g) {
    const int r = static_cast<int>(g.torsion_moduli.size());
    if (g.free_rank < 0) throw input_error("negative free rank");
    if (r == 0 && g.free_rank == 0) throw input_error("trivial ambient group");
    for (const Int& d : g.torsion_moduli)
        if (d < 2) throw input_error("torsion modulus must be at least 2");
    if (g.elements.empty()) throw input_error("empty subset");
    for (const IntVec& e : g.elements) {
        if (static_cast<int>(e.size()) != r + g.free_rank)
            throw input_error("element width does not match the group signature");
        for (int i = 0; i < r; ++i)
            if (e[i] < 0 || e[i] >= g.torsion_moduli[i])
                throw input_error("torsion coordinate not reduced");
    }
    for (size_t i = 0; i < g.elements.size(); ++i)
        for (size_t j = i + 1; j < g.elements.size(); ++j)
            if (g.elements[i] == g.elements[j]) throw input_error("repeated element");
}

Monoid block_to_congruence(const GroupSpec& g) {
    validate(g);
    const int n = static_cast<int>(g.elements.size());
    const int r = static_cast<int>(g.torsion_moduli.size());
    CongruenceSystem sys;
    sys.dim = n;
    for (int t = 0; t < r; ++t) {
        CongruenceRow row;
        row.modulus = g.torsion_moduli[t];
        for (int j = 0; j < n; ++j) row.coeffs.push_back(g.elements[j][t]);
        sys.rows.push_back(std::move(row));
    }
    for (int f = 0; f < g.free_rank; ++f) {
        CongruenceRow row;
        row.modulus = 0;
        for (int j = 0; j < n; ++j) row.coeffs.push_back(g.elements[j][r + f]);
        sys.rows.push_back(std::move(row));
    }
    return Monoid::full(std::move(sys));
}

bool is_elementary(const GroupSpec& g, const IntVec& a) {
    validate(g);
    if (g.elements.size() > 12)
        throw unsupported_error("support-subset search capped at 12 elements");
    Monoid m = block_to_congruence(g);
    if (static_cast<int>(a.size()) != m.dim())
        throw input_error("multiplicity vector width mismatch");
    std::vector<IntVec> atoms = hilbert_basis(m).atoms;
    if (std::find(atoms.begin(), atoms.end(), a) == atoms.end())
        throw input_error("not an atom of the block monoid");

    std::vector<int> supp;
    for (size_t j = 0; j < a.size(); ++j)
        if (a[j] > 0) supp.push_back(static_cast<int>(j));

    const int r = static_cast<int>(g.torsion_moduli.size());
    const int s = static_cast<int>(supp.size());
    if (s <= 1) return true;  // no proper nonempty subsets to host a zero-sum

    if (g.free_rank == 0) {
        // lcm(d) * e_j is a zero-sum on the singleton {j}, so any multi-point
        // support already fails
        return false;
    }

    // a zero-sum on a proper subset lives inside some maximal proper subset,
    // so dropping one support point at a time covers every case
    for (int drop = 0; drop < s; ++drop) {
        std::vector<int> cols;
        for (int b = 0; b < s; ++b)
            if (b != drop) cols.push_back(supp[b]);
        CongruenceSystem sub;
        sub.dim = static_cast<int>(cols.size());
        for (int t = 0; t < r; ++t) {
            CongruenceRow row;
            row.modulus = g.torsion_moduli[t];
            for (int j : cols) row.coeffs.push_back(g.elements[j][t]);
            sub.rows.push_back(std::move(row));
        }
        for (int f = 0; f < g.free_rank; ++f) {
            CongruenceRow row;
            row.modulus = 0;
            for (int j : cols) row.coeffs.push_back(g.elements[j][r + f]);
            sub.rows.push_back(std::move(row));
        }
        if (sub.dim > 6) throw unsupported_error("restricted search too wide");
        if (!hilbert_basis(Monoid::full(std::move(sub))).atoms.empty()) return false;
    }
    return true;
}

}  // namespace stratamon
