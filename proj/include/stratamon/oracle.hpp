#pragma once

#include "stratamon/monoid.hpp"

#include <vector>

namespace stratamon {
namespace oracle {

// Definition-chasing reference implementations. Deliberately naive and kept
// free of the optimized code paths so they can arbitrate disagreements:
// enumeration is additive closure (not membership recursion), atomicity is a
// literal pair scan, lambda is a literal max over denominators.

// all members of M in [0, box]^dim, grlex-sorted. Full kind evaluates the
// rows pointwise; generated kind closes the generator set additively.
std::vector<IntVec> enum_monoid(const Monoid& m, const Int& box);

// nonzero box members that are not the sum of two nonzero box members
std::vector<IntVec> brute_atoms(const Monoid& m, const Int& box);

// members of the box not reachable as (base element) + (box member)
std::vector<IntVec> brute_apery(const Monoid& m, const std::vector<IntVec>& base,
                                const IntVec& box);

// max over 1 <= n <= max_den of (largest m with n*y - m*x in M) / n
Rat brute_lambda(const Monoid& m, const IntVec& x, const IntVec& y, const Int& max_den);

// every way to write x as sum over strata of coefficient combinations whose
// stage tails satisfy the Apery conditions against the earlier strata
struct StratumAssignment {
    std::vector<std::vector<Int>> coeffs;  // one vector per stratum
};
std::vector<StratumAssignment> brute_representations(const Monoid& m,
                                                     const std::vector<std::vector<IntVec>>& strata,
                                                     const IntVec& x);

}  // namespace oracle
}  // namespace stratamon
