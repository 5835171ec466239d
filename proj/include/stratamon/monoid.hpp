#pragma once

#include "stratamon/arith.hpp"
#include "stratamon/lattice.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace stratamon {

// One defining row of a full monoid: sum_j coeffs[j]*x_j == 0 (mod modulus),
// where modulus == 0 means exact equality. Modulus 1 is rejected as vacuous.
struct CongruenceRow {
    IntVec coeffs;
    Int modulus;
};

struct CongruenceSystem {
    int dim = 0;
    std::vector<CongruenceRow> rows;
};

struct GeneratedSemigroup {
    int dim = 0;
    std::vector<IntVec> generators;  // nonzero, deduplicated, grlex-sorted
};

enum class MonoidKind { full, generated };

namespace detail {
struct MonoidCache;
}

// Affine submonoid of N^dim, either cut out of N^dim by congruence/equality
// rows (full kind) or spanned by explicit generators. Value-semantic; copies
// share the derived-data cache.
class Monoid {
public:
    static Monoid full(CongruenceSystem sys);
    static Monoid generated(GeneratedSemigroup gen);

    MonoidKind kind() const { return kind_; }
    int dim() const { return dim_; }
    const CongruenceSystem& system() const;
    const GeneratedSemigroup& generators() const;

    bool contains(const IntVec& x) const;

    detail::MonoidCache& cache() const { return *cache_; }

private:
    Monoid() = default;
    MonoidKind kind_ = MonoidKind::full;
    int dim_ = 0;
    CongruenceSystem sys_;
    GeneratedSemigroup gen_;
    std::shared_ptr<detail::MonoidCache> cache_;
};

namespace detail {
struct MonoidCache {
    std::mutex mtx;
    std::optional<std::vector<IntVec>> hilbert;
    std::optional<std::vector<IntVec>> facets;
    std::optional<LatticeBasis> group;
    std::map<IntVec, bool> member_memo;  // generated kind only
};
}

// x + 2y == 0 (mod c) family member for parameters (a, b, c); the returned
// monoid lives in N^2 and `embedding` describes the section into N^3.
struct EmbeddedModel {
    Monoid monoid;
    std::string embedding;
};
EmbeddedModel elliott_monoid(const Int& a, const Int& b, const Int& c);

// Quotient group lattice G(M) inside Z^dim.
LatticeBasis group_lattice(const Monoid& m);

// Full monoids are root closed by construction. For generated monoids,
// search the box [0, box_bound]^dim in grlex order for a witness x with
// x in G(M), x not in M, but k*x in M for some 2 <= k <= box_bound.
struct RootClosedReport {
    bool root_closed = true;
    std::optional<IntVec> witness;
};
RootClosedReport is_root_closed(const Monoid& m, const Int& box_bound);

}  // namespace stratamon
