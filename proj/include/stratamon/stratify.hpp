#pragma once

#include "stratamon/extraction.hpp"
#include "stratamon/hilbert.hpp"
#include "stratamon/monoid.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stratamon {

struct Stratum {
    std::vector<IntVec> atoms;
    bool independent = false;     // atoms linearly independent
    bool base_certified = false;  // remaining atoms inside cone(atoms)
    bool s3_certified = false;    // pairwise Apery separation over G(atoms)
};

// two distinct factorizations of the same element over the stage's stratum
struct FailureWitness {
    std::vector<IntVec> atoms;  // stratum candidates the coefficients refer to
    std::vector<Int> left;
    std::vector<Int> right;
    IntVec value;
};

struct Stratification {
    std::vector<Stratum> strata;
    bool complete = false;
    std::optional<int> failed_stage;  // 1-based
    std::optional<FailureWitness> witness;
};

// Layer the atom set: each stage takes the strong atoms of the monoid spanned
// by the remaining atoms. A stage is fatal when it captures nothing or when
// some doubled leftover atom factors in two ways over the captured stratum,
// which breaks uniqueness of the layered representations downstream.
Stratification stratify(const Monoid& m);

struct S3Result {
    bool ok = false;
    bool box_limited = false;
    IntVec box;
};

// honest separation check: distinct Apery elements of (M, base) must differ
// outside the lattice spanned by the base
S3Result check_S3(const Monoid& m, const std::vector<IntVec>& base, const Int& box_bound);

struct Representation {
    std::vector<std::vector<Int>> coeffs;  // per stratum, aligned with its atoms
    IntVec value;
};

// unique layered representation of x: greedy floors of the exact coordinates
// per stage, verified against the Apery conditions before returning
Representation decompose(const Monoid& m, const Stratification& s, const IntVec& x);

struct Symbol {
    IntVec atom;
    std::string name;
    int stratum = 0;  // 1-based
    bool free = false;
};

struct Constraint {
    std::vector<Int> coeffs;  // aligned with Parametrization::symbols
    Int strict_lt;
};

struct Parametrization {
    std::vector<Symbol> symbols;
    std::vector<Constraint> constraints;
};

// closed-form coefficient description of the layered representations: one
// bound per (earlier atom, extraction facet) pair, tightened and deduplicated
Parametrization parametrize(const Monoid& m, const Stratification& s);

struct BijectionReport {
    bool bijection = false;
    Int box = 0;
    Int members = 0;
    Int tuples = 0;
    std::vector<IntVec> missing;                // members hit by no tuple
    std::vector<IntVec> multiple;               // members hit by several tuples
    std::vector<std::vector<Int>> multiple_a;   // one clashing tuple
    std::vector<std::vector<Int>> multiple_b;   // another
};

BijectionReport verify_bijection(const Monoid& m, const Parametrization& p, const Int& box);

}  // namespace stratamon
