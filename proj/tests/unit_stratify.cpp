#include "doctest.h"
#include "helpers.hpp"

#include "stratamon/error.hpp"
#include "stratamon/stratify.hpp"

#include <set>

using namespace stratamon;
using testutil::full1;
using testutil::gen;
using testutil::iv;
using testutil::mod11;
using testutil::mod7;
using testutil::set_eq;

TEST_CASE("stratification of the mod-7 instance") {
    auto s = stratify(mod7());
    CHECK(s.complete);
    CHECK(!s.failed_stage.has_value());
    REQUIRE(s.strata.size() == 3);
    CHECK(s.strata[0].atoms == std::vector<IntVec>{iv({7, 0}), iv({0, 7})});
    CHECK(s.strata[1].atoms == std::vector<IntVec>{iv({1, 3}), iv({5, 1})});
    CHECK(s.strata[2].atoms == std::vector<IntVec>{iv({3, 2})});
    for (const auto& st : s.strata) {
        CHECK(st.independent);
        CHECK(st.base_certified);
        CHECK(st.s3_certified);
    }
}

TEST_CASE("stratification of a free monoid is a single stratum") {
    auto s = stratify(full1(2, {0, 0}, 0));
    CHECK(s.complete);
    REQUIRE(s.strata.size() == 1);
    CHECK(s.strata[0].atoms == std::vector<IntVec>{iv({1, 0}), iv({0, 1})});
}

TEST_CASE("steeper atom leads an interior two-atom stratum") {
    // mod-5 variant: atoms (5,0),(0,5),(1,3),(2,1); second stratum slope order
    auto s = stratify(full1(2, {1, 3}, 5));
    CHECK(s.complete);
    REQUIRE(s.strata.size() == 2);
    CHECK(s.strata[0].atoms == std::vector<IntVec>{iv({5, 0}), iv({0, 5})});
    CHECK(s.strata[1].atoms == std::vector<IntVec>{iv({1, 3}), iv({2, 1})});
}

TEST_CASE("stratification failure on the mod-11 instance") {
    auto s = stratify(mod11());
    CHECK(!s.complete);
    REQUIRE(s.failed_stage.has_value());
    CHECK(*s.failed_stage == 4);
    REQUIRE(s.strata.size() == 3);
    CHECK(set_eq(s.strata[0].atoms, {iv({0, 0, 11}), iv({0, 11, 0}), iv({11, 0, 0})}));
    CHECK(set_eq(s.strata[1].atoms, {iv({0, 1, 9}), iv({0, 5, 1}), iv({1, 0, 5}),
                                     iv({9, 0, 1}), iv({1, 8, 0}), iv({7, 1, 0})}));
    CHECK(set_eq(s.strata[2].atoms, {iv({0, 2, 7}), iv({0, 4, 3}), iv({7, 0, 2}),
                                     iv({3, 0, 4}), iv({3, 2, 0}), iv({2, 5, 0})}));

    REQUIRE(s.witness.has_value());
    const auto& w = *s.witness;
    CHECK(w.value == iv({6, 2, 4}));  // 2*(3,1,2)
    // both sides really evaluate to the doubled leftover atom
    IntVec left(3, 0), right(3, 0);
    REQUIRE(w.left.size() == w.atoms.size());
    REQUIRE(w.right.size() == w.atoms.size());
    for (size_t i = 0; i < w.atoms.size(); ++i) {
        left = vec_add(left, vec_scale(w.left[i], w.atoms[i]));
        right = vec_add(right, vec_scale(w.right[i], w.atoms[i]));
    }
    CHECK(left == w.value);
    CHECK(right == w.value);
    CHECK(w.left != w.right);

    // the relation is (5,1,1)+(1,1,3) = (5,0,3)+(1,2,1)
    auto side = [&](const std::vector<Int>& coeffs) {
        std::multiset<std::vector<Int>> atoms_used;
        for (size_t i = 0; i < coeffs.size(); ++i)
            for (Int k = 0; k < coeffs[i]; ++k) atoms_used.insert(w.atoms[i]);
        return atoms_used;
    };
    std::multiset<std::vector<Int>> exp1{iv({5, 1, 1}), iv({1, 1, 3})};
    std::multiset<std::vector<Int>> exp2{iv({5, 0, 3}), iv({1, 2, 1})};
    bool match = (side(w.left) == exp1 && side(w.right) == exp2) ||
                 (side(w.left) == exp2 && side(w.right) == exp1);
    CHECK(match);
}

TEST_CASE("pairwise Apery separation check") {
    Monoid m = mod7();
    auto r1 = check_S3(m, {iv({7, 0}), iv({0, 7})}, 12);
    CHECK(r1.ok);

    auto r2 = check_S3(m, {iv({3, 2})}, 12);
    CHECK(r2.ok);  // single-element base separates trivially

    // the five stage-4 candidates of the mod-11 instance fail separation
    Monoid m4 = gen(3, {iv({0, 3, 5}), iv({5, 0, 3}), iv({5, 1, 1}), iv({1, 1, 3}),
                        iv({1, 2, 1}), iv({3, 1, 2})});
    auto r3 = check_S3(m4, {iv({0, 3, 5}), iv({5, 0, 3}), iv({5, 1, 1}),
                            iv({1, 1, 3}), iv({1, 2, 1})}, 12);
    CHECK(!r3.ok);
    CHECK(r3.box_limited);
}

TEST_CASE("layered decomposition on the mod-7 instance") {
    Monoid m = mod7();
    auto s = stratify(m);

    auto r = decompose(m, s, iv({6, 4}));
    CHECK(r.coeffs == std::vector<std::vector<Int>>{{0, 0}, {1, 1}, {0}});

    auto z = decompose(m, s, iv({0, 0}));
    CHECK(z.coeffs == std::vector<std::vector<Int>>{{0, 0}, {0, 0}, {0}});

    auto big = decompose(m, s, iv({13, 11}));
    CHECK(big.coeffs == std::vector<std::vector<Int>>{{1, 1}, {1, 1}, {0}});

    CHECK_THROWS_AS(decompose(m, s, iv({1, 1})), input_error);
}

TEST_CASE("decomposition reassembles every box member") {
    Monoid m = mod7();
    auto s = stratify(m);
    for (Int x = 0; x <= 12; ++x)
        for (Int y = 0; y <= 12; ++y) {
            IntVec v{x, y};
            if (!m.contains(v)) continue;
            auto r = decompose(m, s, v);
            IntVec sum(2, 0);
            for (size_t i = 0; i < s.strata.size(); ++i)
                for (size_t j = 0; j < s.strata[i].atoms.size(); ++j)
                    sum = vec_add(sum, vec_scale(r.coeffs[i][j], s.strata[i].atoms[j]));
            CHECK(sum == v);
        }
}

TEST_CASE("closed-form constraints for the mod-7 instance") {
    Monoid m = mod7();
    auto s = stratify(m);
    auto p = parametrize(m, s);

    REQUIRE(p.symbols.size() == 5);
    CHECK(p.symbols[0].atom == iv({1, 3}));
    CHECK(p.symbols[0].name == "a");
    CHECK(!p.symbols[0].free);
    CHECK(p.symbols[1].atom == iv({5, 1}));
    CHECK(p.symbols[1].name == "b");
    CHECK(p.symbols[2].atom == iv({3, 2}));
    CHECK(p.symbols[2].name == "c");
    CHECK(p.symbols[3].atom == iv({7, 0}));
    CHECK(p.symbols[3].name == "d");
    CHECK(p.symbols[3].free);
    CHECK(p.symbols[4].atom == iv({0, 7}));
    CHECK(p.symbols[4].name == "e");
    CHECK(p.symbols[4].free);

    REQUIRE(p.constraints.size() == 3);
    CHECK(p.constraints[0].coeffs == std::vector<Int>{1, 5, 3, 0, 0});
    CHECK(p.constraints[0].strict_lt == 7);
    CHECK(p.constraints[1].coeffs == std::vector<Int>{3, 1, 2, 0, 0});
    CHECK(p.constraints[1].strict_lt == 7);
    CHECK(p.constraints[2].coeffs == std::vector<Int>{0, 0, 1, 0, 0});
    CHECK(p.constraints[2].strict_lt == 2);
}

TEST_CASE("constraints for the mod-5 variant") {
    Monoid m = full1(2, {1, 3}, 5);
    auto s = stratify(m);
    auto p = parametrize(m, s);
    REQUIRE(p.symbols.size() == 4);
    CHECK(p.symbols[0].atom == iv({1, 3}));  // a
    CHECK(p.symbols[1].atom == iv({2, 1}));  // b
    REQUIRE(p.constraints.size() == 2);
    CHECK(p.constraints[0].coeffs == std::vector<Int>{1, 2, 0, 0});
    CHECK(p.constraints[0].strict_lt == 5);
    CHECK(p.constraints[1].coeffs == std::vector<Int>{3, 1, 0, 0});
    CHECK(p.constraints[1].strict_lt == 5);
}

TEST_CASE("free monoid needs no constraints") {
    Monoid m = full1(2, {0, 0}, 0);
    auto s = stratify(m);
    auto p = parametrize(m, s);
    CHECK(p.symbols.size() == 2);
    for (const auto& sym : p.symbols) CHECK(sym.free);
    CHECK(p.constraints.empty());
}

TEST_CASE("parametrize requires a full monoid") {
    Monoid m = gen(2, {iv({1, 3}), iv({5, 1}), iv({3, 2})});
    auto s = stratify(m);
    if (s.complete) CHECK_THROWS_AS(parametrize(m, s), unsupported_error);
}

TEST_CASE("coefficient map bijection on the mod-7 instance") {
    Monoid m = mod7();
    auto s = stratify(m);
    auto p = parametrize(m, s);

    auto rep = verify_bijection(m, p, 40);
    CHECK(rep.bijection);
    CHECK(rep.members == rep.tuples);
    CHECK(rep.missing.empty());
    CHECK(rep.multiple.empty());

    // dropping the c < 2 bound lets (6,4) split as a+b and 2c
    Parametrization broken = p;
    broken.constraints.erase(broken.constraints.begin() + 2);
    auto bad = verify_bijection(m, broken, 40);
    CHECK(!bad.bijection);
    bool found = false;
    for (const auto& v : bad.multiple) found = found || v == iv({6, 4});
    CHECK(found);
}

TEST_CASE("bijection for the free monoid") {
    Monoid m = full1(2, {0, 0}, 0);
    auto p = parametrize(m, stratify(m));
    auto rep = verify_bijection(m, p, 20);
    CHECK(rep.bijection);
    CHECK(rep.members == Int(21) * 21);
}
