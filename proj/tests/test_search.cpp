#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "effrel/search.hpp"
#include "helpers.hpp"

using namespace effrel;

namespace {

constexpr int U = kUndefined;

PartialBinOpTable boolean4() {
    PartialBinOpTable t;
    t.size = 4;
    t.zero = 0;
    t.one = 3;
    t.table = {{0, 1, 2, 3}, {1, U, 3, U}, {2, 3, U, U}, {3, U, U, U}};
    return t;
}

// relabel by a permutation fixing nothing in particular
PartialBinOpTable relabel(const PartialBinOpTable& t, const std::vector<int>& perm) {
    PartialBinOpTable out;
    out.size = t.size;
    out.zero = perm[t.zero];
    out.one = perm[t.one];
    out.table.assign(t.size, std::vector<int>(t.size, U));
    for (int x = 0; x < t.size; ++x)
        for (int y = 0; y < t.size; ++y) {
            int v = t.table[x][y];
            out.table[perm[x]][perm[y]] = v == U ? U : perm[v];
        }
    return out;
}

}  // namespace

TEST_CASE("canonicalize is idempotent and permutation-invariant") {
    PartialBinOpTable b = boolean4();
    PartialBinOpTable canon = canonicalize(b);
    CHECK(table_key(canonicalize(canon)) == table_key(canon));
    // every relabeling lands on the same canonical form; zero stays at 0
    std::vector<int> perm = {0, 1, 2, 3};
    do {
        if (perm[0] != 0) continue;  // keep zero = 0 so the table stays unital
        PartialBinOpTable moved = relabel(b, perm);
        CHECK(table_key(canonicalize(moved)) == table_key(canon));
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(canon.zero == 0);

    PartialBinOpTable one_elt;
    one_elt.size = 1;
    one_elt.zero = one_elt.one = 0;
    one_elt.table = {{0}};
    CHECK(table_key(canonicalize(one_elt)) == table_key(one_elt));
}

TEST_CASE("pruned enumeration matches the unpruned oracle up to size 4") {
    for (int n = 1; n <= 4; ++n) {
        std::set<std::vector<int>> got;
        for (const auto& alg : enumerate_effect_algebras(n)) {
            CHECK(is_effect_algebra(alg.table));
            CHECK(alg.table.zero == 0);
            got.insert(table_key(alg.table));
        }
        CHECK(got.size() == enumerate_effect_algebras(n).size());  // no duplicates
        CHECK(got == testutil::oracle_canonical_set(n));
    }
}

TEST_CASE("counts up to isomorphism are 1, 1, 1, 3") {
    const std::vector<size_t> expect = {1, 1, 1, 3};
    for (int n = 1; n <= 4; ++n)
        CHECK(enumerate_effect_algebras(n).size() == expect[n - 1]);
}

TEST_CASE("classification flags are internally consistent") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& alg : enumerate_effect_algebras(n)) {
            CHECK(alg.degenerate == (n == 1));
            CHECK(alg.superspecial == alg.general_effect);
            OrthoAlgebra oa = table_to_ortho(alg.table);
            CHECK(alg.superspecial == is_superspecial(oa));
            CHECK(alg.frobenius == frobenius_holds(oa.monoid.op, dagger(oa.wedge)));
            CHECK(alg.modular == is_modular_pointwise(alg.table).holds);
        }
}

TEST_CASE("sweep is deterministic across worker counts") {
    SweepReport serial = sweep_verify(4, 1);
    SweepReport parallel = sweep_verify(4, 4);
    CHECK(serial.csv() == parallel.csv());
    CHECK(serial.total_disagreements() == 0);
    CHECK(parallel.total_disagreements() == 0);
    REQUIRE(serial.algebras.size() == parallel.algebras.size());
    for (size_t i = 0; i < serial.algebras.size(); ++i)
        CHECK(table_key(serial.algebras[i].table) == table_key(parallel.algebras[i].table));
}

TEST_CASE("the enumeration guard refuses oversized requests") {
    CHECK_THROWS_AS(enumerate_effect_algebras(kEnumBound + 1), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_effect_algebras(0), std::invalid_argument);
    CHECK_THROWS_AS(sweep_verify(kEnumBound + 1), std::invalid_argument);
}

TEST_CASE("size 5: pruned enumeration matches the axiom-reduced oracle") {
    std::set<std::vector<int>> got;
    for (const auto& alg : enumerate_effect_algebras(5)) got.insert(table_key(alg.table));
    CHECK(got.size() == 4);
    CHECK(got == testutil::oracle_canonical_set(5, /*allow_five=*/true));
}
