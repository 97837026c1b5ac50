#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "effrel/convolution.hpp"
#include "helpers.hpp"

using namespace effrel;
using testutil::conv_oracle;
using testutil::random_rel;

namespace {

FinRel rel_from_mask(int src, int dst, long mask) {
    FinRel r(src, dst);
    for (int k = 0; k < src * dst; ++k)
        if (mask >> k & 1) r.set(k / dst, k % dst);
    return r;
}

}  // namespace

TEST_CASE("convolution over standard structures is intersection") {
    // exhaustive over all relation pairs on carriers up to 3
    for (int n = 1; n <= 3; ++n) {
        ClassicalStructure cs = standard_structure(n);
        ComonoidView co = cs_comonoid(cs);
        MonoidView mo = cs_monoid(cs);
        long total = 1L << (n * n);
        for (long fm = 0; fm < total; ++fm) {
            FinRel f = rel_from_mask(n, n, fm);
            for (long gm = 0; gm < total; ++gm) {
                FinRel g = rel_from_mask(n, n, gm);
                if (convolve(f, g, co, mo) != meet(f, g)) {
                    FAIL("intersection law fails at n=", n, " f=", fm, " g=", gm);
                }
            }
        }
    }
}

TEST_CASE("diagrammatic convolution equals the pointwise existential formula") {
    // exhaustive on carrier <= 2, sampled on carrier 3
    for (int n = 1; n <= 2; ++n)
        for (const auto& cs : enumerate_classical(n)) {
            ComonoidView co = cs_comonoid(cs);
            MonoidView mo = cs_monoid(cs);
            long total = 1L << (n * n);
            for (long fm = 0; fm < total; ++fm)
                for (long gm = 0; gm < total; ++gm) {
                    FinRel f = rel_from_mask(n, n, fm), g = rel_from_mask(n, n, gm);
                    CHECK(convolve(f, g, co, mo) == conv_oracle(f, g, cs, cs));
                }
        }
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long> pick(0, (1L << 9) - 1);
    for (const auto& cs : enumerate_classical(3)) {
        ComonoidView co = cs_comonoid(cs);
        MonoidView mo = cs_monoid(cs);
        for (int trial = 0; trial < 10000 / 5; ++trial) {
            FinRel f = rel_from_mask(3, 3, pick(rng)), g = rel_from_mask(3, 3, pick(rng));
            CHECK(convolve(f, g, co, mo) == conv_oracle(f, g, cs, cs));
        }
    }
}

TEST_CASE("convolution algebra validation") {
    ClassicalStructure cs = standard_structure(2);
    ConvolutionAlgebra good{2, cs_mult(cs), cs_unit(cs), cs_copy(cs), cs_counit(cs)};
    CHECK(good.validate().ok());
    ConvolutionAlgebra bad = good;
    bad.unit = unit_vector(2, {0});  // not a unit for the standard meet-monoid
    CHECK(!bad.validate().ok());
}

TEST_CASE("cayley representation") {
    // in a group block, the action of any element is a permutation
    ClassicalStructure z3;
    z3.carrier = 3;
    z3.blocks.push_back({{0, 1, 2}, cyclic_group(3)});
    MonoidView mo = cs_monoid(z3);
    for (int b = 0; b < 3; ++b) {
        FinRel act = cayley(mo, unit_vector(3, {b}));
        CHECK(is_unitary(act));
        for (int x = 0; x < 3; ++x) CHECK(act.at(x, (b + x) % 3));
    }
    // for the standard structure the action of {b} restricts to b
    MonoidView std2 = cs_monoid(standard_structure(2));
    FinRel act = cayley(std2, unit_vector(2, {1}));
    CHECK(act.count() == 1);
    CHECK(act.at(1, 1));
    CHECK(!is_unitary(act));
}

TEST_CASE("scaled projectors are rectangles") {
    FinRel rect(3, 3);
    rect.set(0, 1);
    rect.set(0, 2);
    rect.set(2, 1);
    rect.set(2, 2);
    CHECK(is_scaled_projector(rect));
    CHECK(is_scaled_projector(empty_rel(3, 3)));
    FinRel bent = rect;
    bent.set(1, 1);
    CHECK(!is_scaled_projector(bent));
    CHECK(is_scaled_projector(full_rel(3, 3)));
}

TEST_CASE("every classical structure is special; groups are the unitary blocks") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& cs : enumerate_classical(n)) {
            ConvolutionAlgebra ca{n, cs_mult(cs), cs_unit(cs), cs_copy(cs), cs_counit(cs)};
            CHECK(is_special(ca));
        }
}

TEST_CASE("convolution preorder: standard shortcut equals witness search") {
    ClassicalStructure cs = standard_structure(2);
    ComonoidView co = cs_comonoid(cs);
    MonoidView mo = cs_monoid(cs);
    for (long fm = 0; fm < 16; ++fm)
        for (long gm = 0; gm < 16; ++gm) {
            FinRel f = rel_from_mask(2, 2, fm), g = rel_from_mask(2, 2, gm);
            CHECK(conv_leq(f, g, co, mo) == conv_leq_witness_search(f, g, co, mo));
            CHECK(conv_leq(f, g, co, mo) == leq_subset(g, f));
        }
    CHECK_THROWS_AS(conv_leq_witness_search(identity(5), identity(5), cs_comonoid(standard_structure(5)),
                                            cs_monoid(standard_structure(5))),
                    std::invalid_argument);
}

TEST_CASE("map predicates match their pointwise meaning on standard structures") {
    std::mt19937 rng(99);
    ClassicalStructure a3 = standard_structure(3), b2 = standard_structure(2);
    for (int trial = 0; trial < 200; ++trial) {
        FinRel f = random_rel(rng, 3, 2);
        CHECK(is_total(f, a3, b2) == rel_is_total(f));
        CHECK(is_single_valued(f, a3, b2) == rel_is_single_valued(f));
        CHECK(is_map(f, a3, b2) == (rel_is_total(f) && rel_is_single_valued(f)));
    }
}

TEST_CASE("sveq: equality iff the symmetric domain chain collapses") {
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
            ClassicalStructure csA = standard_structure(a), csB = standard_structure(b);
            std::vector<FinRel> sv;
            for (long m = 0; m < (1L << (a * b)); ++m) {
                FinRel f = rel_from_mask(a, b, m);
                if (rel_is_single_valued(f)) sv.push_back(f);
            }
            for (const FinRel& f : sv)
                for (const FinRel& g : sv) {
                    SveqRecord rec = check_sveq(f, g, csA, csB);
                    CHECK(rec.forward_ok);
                    CHECK(rec.backward_ok);
                    CHECK(rec.reading_holds == rec.equal);
                }
        }
}

TEST_CASE("sveq: the one-sided chain is falsified by strict inclusions") {
    // f strictly below g: their meet has the domain of f, so the chain
    // ending at dom(f) holds even though f differs from g
    ClassicalStructure cs = standard_structure(2);
    FinRel f(2, 2), g = identity(2);
    f.set(0, 0);
    SveqRecord rec = check_sveq(f, g, cs, cs);
    CHECK(!rec.equal);
    CHECK(rec.one_sided_holds);
    CHECK(!rec.reading_holds);
}

TEST_CASE("multi-valued inputs are rejected by check_sveq") {
    ClassicalStructure cs = standard_structure(2);
    CHECK_THROWS_AS(check_sveq(full_rel(2, 2), identity(2), cs, cs), std::invalid_argument);
}
