#pragma once

// Orthocomplements, unbiased vectors, the bijection between them, and the
// De Morgan dual monoid. The ambient classical structure on the carrier is
// the standard one (copy / delete), so the orthocomplement law reads
// pointwise as  x (+) not x = iota.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "effrel/convolution.hpp"
#include "effrel/finrel.hpp"
#include "effrel/report.hpp"

namespace effrel {

struct CommMonoidRel {
    int carrier = 0;
    FinRel op;    // A(x)A -> A, possibly partial
    FinRel zero;  // I -> A

    Report validate() const {
        Report rep;
        int n = carrier;
        rep.add("endpoints", op.src() == n * n && op.dst() == n && zero.src() == 1 &&
                                 zero.dst() == n);
        if (!rep.ok()) return rep;
        FinRel id = identity(n);
        rep.add("associativity", compose(tensor(op, id), op) == compose(tensor(id, op), op));
        rep.add("commutativity", compose(swap_rel(n, n), op) == op);
        rep.add("unit", compose(tensor(zero, id), op) == id);
        return rep;
    }
};

inline void require_valid(const CommMonoidRel& m, const char* what) {
    Report rep = m.validate();
    if (!rep.ok())
        throw std::invalid_argument(std::string(what) + ": malformed monoid (" +
                                    rep.first_failure()->law + ")");
}

// Entangled (Bell) vector: eta satisfies both snake identities under the
// standard self-duality. In Rel this makes eta the graph of a bijection.
inline bool is_entangled(const FinRel& eta, int n) {
    if (eta.src() != 1 || eta.dst() != n * n) throw DimensionError("is_entangled: not a vector on A(x)A");
    FinRel id = identity(n);
    // the cap dual to eta reads its pairs in the opposite order, so the
    // snakes yank for every bijection graph, not only the involutive ones
    FinRel cap = compose(swap_rel(n, n), dagger(eta));  // A(x)A -> I
    FinRel snake1 = compose(tensor(id, eta), tensor(cap, id));
    FinRel snake2 = compose(tensor(eta, id), tensor(id, cap));
    return snake1 == id && snake2 == id;
}

inline FinRel bent_vector(const CommMonoidRel& m, const FinRel& iota) {
    if (iota.src() != 1 || iota.dst() != m.carrier)
        throw DimensionError("is_unbiased: iota is not a vector on the carrier");
    return compose(iota, dagger(m.op));  // I -> A(x)A
}

inline bool is_unbiased(const CommMonoidRel& m, const FinRel& iota) {
    return is_entangled(bent_vector(m, iota), m.carrier);
}

// x (neg) y iff iota meets x (+) y; a bijection whenever iota is unbiased.
inline FinRel derive_neg(const CommMonoidRel& m, const FinRel& one) {
    if (!is_unbiased(m, one)) throw std::invalid_argument("derive_neg: vector is not unbiased");
    int n = m.carrier;
    FinRel eta = bent_vector(m, one);
    FinRel neg(n, n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (eta.at(0, x * n + y)) neg.set(x, y);
    return neg;
}

// The unique iota with  op o (id (x) neg) o copy = iota o counit; errors
// when x (+) neg x varies across elements or is not a singleton.
inline FinRel derive_one(const CommMonoidRel& m, const FinRel& neg) {
    int n = m.carrier;
    if (neg.src() != n || neg.dst() != n) throw DimensionError("derive_one: neg endpoint mismatch");
    ClassicalStructure std_cs = standard_structure(n);
    FinRel lhs = compose(cs_copy(std_cs), compose(tensor(identity(n), neg), m.op));  // A -> A
    for (int x = 0; x < n; ++x) {
        int hits = 0;
        for (int y = 0; y < n; ++y)
            if (lhs.at(x, y)) ++hits;
        if (hits != 1) throw std::invalid_argument("derive_one: no consistent unit (row " +
                                                   std::to_string(x) + " is not a singleton)");
    }
    FinRel iota(1, n);
    int common = -1;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (lhs.at(x, y)) {
                if (common == -1) common = y;
                if (y != common)
                    throw std::invalid_argument("derive_one: no consistent unit (value varies)");
            }
    if (common >= 0) iota.set(0, common);
    return iota;
}

inline bool is_orthocomplement(const CommMonoidRel& m, const FinRel& neg) {
    int n = m.carrier;
    if (neg.src() != n || neg.dst() != n)
        throw DimensionError("is_orthocomplement: endpoint mismatch");
    if (compose(neg, neg) != identity(n)) return false;
    // the defining equations force iota = neg(0) and make neg, as a
    // relation, the transpose of the iota-weighted multiplication
    FinRel iota = compose(m.zero, neg);
    FinRel eta = bent_vector(m, iota);
    FinRel bent(n, n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (eta.at(0, x * n + y)) bent.set(x, y);
    return neg == bent;
}

// De Morgan dual: (A, wedge, one) with wedge = neg o op o (neg (x) neg).
inline CommMonoidRel demorgan_dual(const CommMonoidRel& m, const FinRel& neg) {
    if (!is_orthocomplement(m, neg))
        throw std::invalid_argument("demorgan_dual: neg is not an orthocomplement");
    CommMonoidRel dual;
    dual.carrier = m.carrier;
    dual.op = compose(tensor(neg, neg), compose(m.op, neg));
    dual.zero = compose(m.zero, neg);  // equals derive_one's iota
    return dual;
}

struct OrthoAlgebra {
    CommMonoidRel monoid;
    FinRel one;    // I -> A, the unbiased vector
    FinRel neg;    // A -> A
    FinRel wedge;  // A(x)A -> A
};

inline OrthoAlgebra make_ortho_algebra(const CommMonoidRel& m, const FinRel& one) {
    require_valid(m, "make_ortho_algebra");
    OrthoAlgebra alg;
    alg.monoid = m;
    alg.one = one;
    alg.neg = derive_neg(m, one);
    alg.wedge = demorgan_dual(m, alg.neg).op;
    return alg;
}

inline Report validate_ortho_algebra(const OrthoAlgebra& alg) {
    Report rep;
    const CommMonoidRel& m = alg.monoid;
    int n = m.carrier;
    Report mrep = m.validate();
    rep.add("monoid", mrep.ok(), mrep.ok() ? "" : mrep.first_failure()->law);
    if (!mrep.ok()) return rep;
    rep.add("one-unbiased", is_unbiased(m, alg.one));
    rep.add("neg-involution", compose(alg.neg, alg.neg) == identity(n));
    bool neg_matches = false;
    if (is_unbiased(m, alg.one)) neg_matches = (alg.neg == derive_neg(m, alg.one));
    rep.add("neg-derived-from-one", neg_matches);
    if (!rep.ok()) return rep;
    FinRel dual_op = compose(tensor(alg.neg, alg.neg), compose(m.op, alg.neg));
    rep.add("demorgan", alg.wedge == dual_op);
    CommMonoidRel dual{n, alg.wedge, alg.one};
    Report drep = dual.validate();
    rep.add("dual-monoid", drep.ok(), drep.ok() ? "" : drep.first_failure()->law);
    rep.add("dual-orthocomplemented", is_orthocomplement(dual, alg.neg));
    // the two units exchange under neg
    rep.add("units-exchange", compose(m.zero, alg.neg) == alg.one &&
                                  compose(alg.one, alg.neg) == m.zero);
    return rep;
}

// All relational commutative monoids on an n-element carrier: commutative
// associative op together with each unit vector it admits.  Exponential in
// n^2, hence the small guard.
template <typename F>
void for_each_comm_monoid(int n, F&& fn) {
    if (n < 1 || n > 3)
        throw std::invalid_argument("for_each_comm_monoid: carrier out of range 1..3");
    std::vector<std::pair<int, int>> cells;
    for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y) cells.push_back({x, y});
    FinRel id = identity(n);
    long total = 1L << (static_cast<long>(cells.size()) * n);
    for (long code = 0; code < total; ++code) {
        FinRel op(n * n, n);
        long c = code;
        for (auto [x, y] : cells) {
            int bits = static_cast<int>(c & ((1 << n) - 1));
            c >>= n;
            for (int v = 0; v < n; ++v)
                if (bits >> v & 1) {
                    op.set(x * n + y, v);
                    op.set(y * n + x, v);
                }
        }
        if (compose(tensor(op, id), op) != compose(tensor(id, op), op)) continue;
        for (long mask = 0; mask < (1L << n); ++mask) {
            FinRel zero(1, n);
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1) zero.set(0, i);
            if (compose(tensor(zero, id), op) == id) fn(op, zero);
        }
    }
}

// Single-valued restriction: commutative partial operations presented as
// tables, backtracked with incremental associativity pruning; units are
// the elements whose row is the identity.
template <typename F>
void for_each_comm_monoid_sv(int n, F&& fn) {
    if (n < 1 || n > 4)
        throw std::invalid_argument("for_each_comm_monoid_sv: carrier out of range 1..4");
    constexpr int kUndef = -1, kUnset = -2;
    std::vector<std::pair<int, int>> cells;
    for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y) cells.push_back({x, y});
    std::vector<std::vector<int>> tab(n, std::vector<int>(n, kUnset));

    auto assoc_ok = [&]() {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                int ab = tab[a][b];
                if (ab == kUnset) continue;
                for (int c = 0; c < n; ++c) {
                    int bc = tab[b][c];
                    if (bc == kUnset) continue;
                    int l = ab == kUndef ? kUndef : tab[ab][c];
                    int r = bc == kUndef ? kUndef : tab[a][bc];
                    if (l != kUnset && r != kUnset && l != r) return false;
                }
            }
        return true;
    };

    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == cells.size()) {
            for (int e = 0; e < n; ++e) {
                bool unit = true;
                for (int x = 0; x < n; ++x)
                    if (tab[e][x] != x) unit = false;
                if (!unit) continue;
                FinRel op(n * n, n);
                for (int x = 0; x < n; ++x)
                    for (int y = 0; y < n; ++y)
                        if (tab[x][y] != kUndef) op.set(x * n + y, tab[x][y]);
                fn(op, unit_vector(n, {e}));
            }
            return;
        }
        auto [x, y] = cells[k];
        for (int v = kUndef; v < n; ++v) {
            tab[x][y] = tab[y][x] = v;
            if (assoc_ok()) rec(k + 1);
        }
        tab[x][y] = tab[y][x] = kUnset;
    };
    rec(0);
}

}  // namespace effrel
