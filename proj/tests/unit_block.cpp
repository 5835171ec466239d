#include "doctest.h"
#include "helpers.hpp"

#include "stratamon/block.hpp"
#include "stratamon/error.hpp"
#include "stratamon/extraction.hpp"
#include "stratamon/hilbert.hpp"

using namespace stratamon;
using testutil::iv;
using testutil::set_eq;

static GroupSpec z7_12() {
    GroupSpec g;
    g.torsion_moduli = {7};
    g.free_rank = 0;
    g.elements = {iv({1}), iv({2})};
    return g;
}

TEST_CASE("block monoid over Z_7 with elements {1,2}") {
    GroupSpec g = z7_12();
    Monoid m = block_to_congruence(g);
    CHECK(m.dim() == 2);
    REQUIRE(m.system().rows.size() == 1);
    CHECK(m.system().rows[0].coeffs == iv({1, 2}));
    CHECK(m.system().rows[0].modulus == 7);

    auto hb = hilbert_basis(m);
    CHECK(set_eq(hb.atoms,
                 {iv({0, 7}), iv({1, 3}), iv({3, 2}), iv({5, 1}), iv({7, 0})}));
}

TEST_CASE("elementary atoms over pure torsion have singleton support") {
    GroupSpec g = z7_12();
    CHECK(is_elementary(g, iv({7, 0})));
    CHECK(is_elementary(g, iv({0, 7})));
    CHECK(!is_elementary(g, iv({1, 3})));
    CHECK(!is_elementary(g, iv({5, 1})));
    CHECK(!is_elementary(g, iv({3, 2})));
}

TEST_CASE("block monoid with a free pair {g, -g}") {
    GroupSpec g;
    g.free_rank = 1;
    g.elements = {iv({1}), iv({-1})};
    Monoid m = block_to_congruence(g);
    REQUIRE(m.system().rows.size() == 1);
    CHECK(m.system().rows[0].modulus == 0);  // equality row

    auto hb = hilbert_basis(m);
    CHECK(set_eq(hb.atoms, {iv({1, 1})}));
    CHECK(is_elementary(g, iv({1, 1})));
    // the lone atom is strong as well
    CHECK(classify_atom(m, iv({1, 1})).strong);
}

TEST_CASE("block monoid over Z_6 with elements {2,3}") {
    GroupSpec g;
    g.torsion_moduli = {6};
    g.elements = {iv({2}), iv({3})};
    Monoid m = block_to_congruence(g);
    auto hb = hilbert_basis(m);
    CHECK(set_eq(hb.atoms, {iv({3, 0}), iv({0, 2})}));
    CHECK(is_elementary(g, iv({3, 0})));
    CHECK(is_elementary(g, iv({0, 2})));
}

TEST_CASE("block input validation") {
    GroupSpec bad = z7_12();
    bad.torsion_moduli = {1};
    CHECK_THROWS_AS(block_to_congruence(bad), input_error);

    GroupSpec dup = z7_12();
    dup.elements = {iv({1}), iv({1})};
    CHECK_THROWS_AS(block_to_congruence(dup), input_error);

    GroupSpec wide = z7_12();
    wide.elements = {iv({1, 0}), iv({2, 0})};
    CHECK_THROWS_AS(block_to_congruence(wide), input_error);

    // querying a non-atom
    CHECK_THROWS_AS(is_elementary(z7_12(), iv({2, 6})), input_error);
    CHECK_THROWS_AS(is_elementary(z7_12(), iv({1, 1})), input_error);

    GroupSpec big;
    big.torsion_moduli = {17};
    for (long long i = 1; i <= 13; ++i) big.elements.push_back(iv({i}));
    CHECK_THROWS_AS(is_elementary(big, iv({1})), unsupported_error);
}
