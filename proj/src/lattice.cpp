#include "stratamon/lattice.hpp"

#include "stratamon/error.hpp"

#include <algorithm>

namespace stratamon {

static void negate_row(IntVec& r) {
    for (Int& e : r) e = -e;
}

std::vector<IntVec> hnf_rows(std::vector<IntVec> rows) {
    if (rows.empty()) return rows;
    const size_t n = rows[0].size();
    size_t r = 0;
    for (size_t col = 0; col < n && r < rows.size(); ++col) {
        // Euclidean reduction in this column below row r, smallest |pivot| first
        while (true) {
            size_t best = rows.size();
            for (size_t i = r; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                if (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col])) best = i;
            }
            if (best == rows.size()) break;
            std::swap(rows[r], rows[best]);
            bool clean = true;
            for (size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                Int q = rows[i][col] / rows[r][col];  // truncated; loop re-reduces leftovers
                if (q != 0)
                    for (size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
                if (rows[i][col] != 0) clean = false;
            }
            if (clean) break;
        }
        if (r < rows.size() && rows[r][col] != 0) {
            if (rows[r][col] < 0) negate_row(rows[r]);
            for (size_t i = 0; i < r; ++i) {
                Int q = floor_div(rows[i][col], rows[r][col]);
                if (q != 0)
                    for (size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
            }
            ++r;
        }
    }
    rows.resize(r);
    return rows;
}

LatticeBasis lattice_basis(const std::vector<IntVec>& gens) {
    if (gens.empty()) throw input_error("lattice_basis: no generators");
    LatticeBasis b;
    b.dim = static_cast<int>(gens[0].size());
    for (const IntVec& g : gens)
        if (static_cast<int>(g.size()) != b.dim)
            throw input_error("lattice_basis: mixed dimensions");
    b.rows = hnf_rows(gens);
    return b;
}

bool lattice_member(const IntVec& x, const LatticeBasis& basis) {
    if (static_cast<int>(x.size()) != basis.dim)
        throw input_error("lattice_member: dimension mismatch");
    IntVec v = x;
    size_t row = 0;
    for (size_t col = 0; col < v.size(); ++col) {
        if (row < basis.rows.size() && basis.rows[row][col] != 0) {
            if (v[col] % basis.rows[row][col] != 0) return false;
            Int q = v[col] / basis.rows[row][col];
            if (q != 0)
                for (size_t j = col; j < v.size(); ++j) v[j] -= q * basis.rows[row][j];
            ++row;
        } else if (v[col] != 0) {
            return false;
        }
    }
    return true;
}

std::vector<IntVec> integer_kernel(const std::vector<IntVec>& rows, int n) {
    // Reduce [A^T | I_n]; rows whose A^T part vanishes have kernel vectors
    // as tails, since t-part tracks the Z-combination applied.
    const size_t m = rows.size();
    std::vector<IntVec> work(n, IntVec(m + n, 0));
    for (int j = 0; j < n; ++j) {
        for (size_t i = 0; i < m; ++i) work[j][i] = rows[i][j];
        work[j][m + j] = 1;
    }
    size_t r = 0;
    for (size_t col = 0; col < m && r < work.size(); ++col) {
        while (true) {
            size_t best = work.size();
            for (size_t i = r; i < work.size(); ++i) {
                if (work[i][col] == 0) continue;
                if (best == work.size() || abs(work[i][col]) < abs(work[best][col])) best = i;
            }
            if (best == work.size()) break;
            std::swap(work[r], work[best]);
            bool clean = true;
            for (size_t i = r + 1; i < work.size(); ++i) {
                if (work[i][col] == 0) continue;
                Int q = work[i][col] / work[r][col];
                if (q != 0)
                    for (size_t j = 0; j < work[i].size(); ++j) work[i][j] -= q * work[r][j];
                if (work[i][col] != 0) clean = false;
            }
            if (clean) break;
        }
        if (r < work.size() && work[r][col] != 0) ++r;
    }
    std::vector<IntVec> kernel;
    for (size_t i = r; i < work.size(); ++i)
        kernel.push_back(IntVec(work[i].begin() + m, work[i].end()));
    return hnf_rows(kernel);
}

int rank_rational(const std::vector<IntVec>& rows) {
    if (rows.empty()) return 0;
    std::vector<RatVec> work;
    for (const IntVec& r : rows) work.emplace_back(r.begin(), r.end());
    const size_t n = work[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < n && rank < work.size(); ++col) {
        size_t piv = work.size();
        for (size_t i = rank; i < work.size(); ++i)
            if (work[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv == work.size()) continue;
        std::swap(work[rank], work[piv]);
        for (size_t i = rank + 1; i < work.size(); ++i) {
            if (work[i][col] == 0) continue;
            Rat f = work[i][col] / work[rank][col];
            for (size_t j = col; j < n; ++j) work[i][j] -= f * work[rank][j];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

std::optional<RatVec> solve_rational_system(const std::vector<IntVec>& columns,
                                            const IntVec& target) {
    const size_t k = columns.size();
    if (k == 0) throw input_error("solve_rational_system: no columns");
    const size_t n = columns[0].size();
    for (const IntVec& c : columns)
        if (c.size() != n) throw input_error("solve_rational_system: mixed dimensions");
    if (target.size() != n) throw input_error("solve_rational_system: target dimension mismatch");
    if (rank_rational(columns) != static_cast<int>(k))
        throw input_error("solve_rational_system: dependent columns");

    // augmented n x (k+1) system, Gaussian elimination with exact rationals
    std::vector<RatVec> aug(n, RatVec(k + 1));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < k; ++j) aug[i][j] = columns[j][i];
        aug[i][k] = target[i];
    }
    std::vector<size_t> pivot_row(k);
    size_t row = 0;
    for (size_t col = 0; col < k; ++col) {
        size_t piv = n;
        for (size_t i = row; i < n; ++i)
            if (aug[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv == n) throw internal_error("solve_rational_system: lost pivot");
        std::swap(aug[row], aug[piv]);
        for (size_t i = 0; i < n; ++i) {
            if (i == row || aug[i][col] == 0) continue;
            Rat f = aug[i][col] / aug[row][col];
            for (size_t j = col; j <= k; ++j) aug[i][j] -= f * aug[row][j];
        }
        pivot_row[col] = row;
        ++row;
    }
    for (size_t i = row; i < n; ++i)
        if (aug[i][k] != 0) return std::nullopt;  // inconsistent: target off-span
    RatVec sol(k);
    for (size_t col = 0; col < k; ++col)
        sol[col] = aug[pivot_row[col]][k] / aug[pivot_row[col]][col];
    return sol;
}

}  // namespace stratamon
