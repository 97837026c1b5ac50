#pragma once

// Pointwise effect-algebra axioms, pullback verification in the category of
// partial functions, the superspecial predicate, and the checker for the
// equivalence between the two.

#include <optional>
#include <string>
#include <vector>

#include "effrel/convolution.hpp"
#include "effrel/finrel.hpp"
#include "effrel/ortho.hpp"
#include "effrel/report.hpp"

namespace effrel {

constexpr int kUndefined = -1;

// Partial commutative binary operation on labeled elements, with the two
// constants. neg is optional; condition (2) derives it and a stored one is
// checked against the derived one.
struct PartialBinOpTable {
    int size = 0;
    std::vector<std::vector<int>> table;  // entries in 0..size-1 or kUndefined
    int zero = 0;
    int one = 0;
    std::optional<std::vector<int>> neg;

    int apply(int x, int y) const { return table[x][y]; }

    // Kleene application of (x (+) y) (+) z
    int apply3_left(int x, int y, int z) const {
        int u = table[x][y];
        return u == kUndefined ? kUndefined : table[u][z];
    }
    int apply3_right(int x, int y, int z) const {
        int v = table[y][z];
        return v == kUndefined ? kUndefined : table[x][v];
    }

    friend bool operator==(const PartialBinOpTable& a, const PartialBinOpTable& b) {
        return a.size == b.size && a.zero == b.zero && a.one == b.one && a.table == b.table;
    }
};

// Complement derived from condition (2): neg x = the unique y with
// x (+) y = one, or kUndefined.
inline std::vector<int> derived_complements(const PartialBinOpTable& t) {
    std::vector<int> neg(t.size, kUndefined);
    for (int x = 0; x < t.size; ++x) {
        int found = kUndefined;
        int count = 0;
        for (int y = 0; y < t.size; ++y)
            if (t.table[x][y] == t.one) {
                found = y;
                ++count;
            }
        neg[x] = (count == 1) ? found : kUndefined;
    }
    return neg;
}

inline Report check_effect_axioms(const PartialBinOpTable& t) {
    Report rep;
    int n = t.size;
    bool shape_ok = static_cast<int>(t.table.size()) == n && t.zero >= 0 && t.zero < n &&
                    t.one >= 0 && t.one < n;
    for (const auto& row : t.table) {
        if (static_cast<int>(row.size()) != n) shape_ok = false;
        for (int v : row)
            if (v != kUndefined && (v < 0 || v >= n)) shape_ok = false;
    }
    rep.add("shape", shape_ok || n == 0);
    if (!rep.ok()) return rep;

    bool comm = true;
    std::string comm_w;
    for (int x = 0; x < n && comm; ++x)
        for (int y = 0; y < n; ++y)
            if (t.table[x][y] != t.table[y][x]) {
                comm = false;
                comm_w = "(" + std::to_string(x) + "," + std::to_string(y) + ")";
                break;
            }
    rep.add("commutativity", comm, comm_w);

    bool unit = true;
    std::string unit_w;
    for (int x = 0; x < n; ++x)
        if (t.table[t.zero][x] != x || t.table[x][t.zero] != x) {
            unit = false;
            unit_w = "x=" + std::to_string(x);
            break;
        }
    rep.add("unit", unit, unit_w);

    bool assoc = true;
    std::string assoc_w;
    for (int x = 0; x < n && assoc; ++x)
        for (int y = 0; y < n && assoc; ++y)
            for (int z = 0; z < n; ++z)
                if (t.apply3_left(x, y, z) != t.apply3_right(x, y, z)) {
                    assoc = false;
                    assoc_w = "(" + std::to_string(x) + "," + std::to_string(y) + "," +
                              std::to_string(z) + ")";
                    break;
                }
    rep.add("associativity", assoc, assoc_w);

    // condition (2): for each x exactly one y with x (+) y = one
    bool cond2 = true;
    std::string cond2_w;
    std::vector<int> neg(n, kUndefined);
    for (int x = 0; x < n; ++x) {
        int count = 0;
        for (int y = 0; y < n; ++y)
            if (t.table[x][y] == t.one) {
                neg[x] = y;
                ++count;
            }
        if (count != 1) {
            cond2 = false;
            if (cond2_w.empty())
                cond2_w = "x=" + std::to_string(x) + " has " + std::to_string(count) +
                          " complements";
        }
    }
    rep.add("condition-2-unique-complement", cond2, cond2_w);

    if (cond2) {
        bool invol = true;
        std::string invol_w;
        for (int x = 0; x < n; ++x)
            if (neg[neg[x]] != x) {
                invol = false;
                invol_w = "x=" + std::to_string(x);
                break;
            }
        rep.add("neg-involution", invol, invol_w);
        if (t.neg) rep.add("stored-neg-matches-derived", *t.neg == neg);
    }

    // condition (3): x (+) one = one iff x = zero.  The left side is a
    // partial expression, so equality is the strong one: x (+) one must be
    // undefined for x != zero.  (The lax reading would admit every abelian
    // group relabeled with zero = one, which breaks the equivalence with
    // the original axioms.)
    bool cond3 = true;
    std::string cond3_w;
    for (int x = 0; x < n; ++x) {
        bool defined = (t.table[x][t.one] != kUndefined);
        if (defined != (x == t.zero)) {
            cond3 = false;
            cond3_w = "x=" + std::to_string(x);
            break;
        }
    }
    rep.add("condition-3", cond3, cond3_w);
    return rep;
}

inline bool is_effect_algebra(const PartialBinOpTable& t) { return check_effect_axioms(t).ok(); }

// x (+) y = zero iff x = y = zero.
inline bool is_torsion_free(const PartialBinOpTable& t) {
    for (int x = 0; x < t.size; ++x)
        for (int y = 0; y < t.size; ++y)
            if ((t.table[x][y] == t.zero) != (x == t.zero && y == t.zero)) return false;
    return true;
}

// ---- bridge between the table and relation presentations ----

inline CommMonoidRel table_to_monoid(const PartialBinOpTable& t) {
    CommMonoidRel m;
    m.carrier = t.size;
    m.op = FinRel(t.size * t.size, t.size);
    for (int x = 0; x < t.size; ++x)
        for (int y = 0; y < t.size; ++y)
            if (t.table[x][y] != kUndefined) m.op.set(x * t.size + y, t.table[x][y]);
    m.zero = unit_vector(t.size, {t.size ? t.zero : 0});
    if (t.size == 0) m.zero = FinRel(1, 0);
    return m;
}

inline PartialBinOpTable monoid_to_table(const CommMonoidRel& m, int one_hint = kUndefined) {
    int n = m.carrier;
    if (!rel_is_single_valued(m.op))
        throw std::invalid_argument("monoid_to_table: operation is multi-valued");
    if (n > 0 && m.zero.count() != 1)
        throw std::invalid_argument("monoid_to_table: zero is not a singleton vector");
    PartialBinOpTable t;
    t.size = n;
    t.table.assign(n, std::vector<int>(n, kUndefined));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int v = 0; v < n; ++v)
                if (m.op.at(x * n + y, v)) t.table[x][y] = v;
    t.zero = 0;
    for (int v = 0; v < n; ++v)
        if (m.zero.at(0, v)) t.zero = v;
    t.one = one_hint != kUndefined ? one_hint : t.zero;
    return t;
}

inline PartialBinOpTable ortho_to_table(const OrthoAlgebra& alg) {
    int one = kUndefined;
    for (int v = 0; v < alg.monoid.carrier; ++v)
        if (alg.one.at(0, v)) one = v;
    PartialBinOpTable t = monoid_to_table(alg.monoid, one);
    std::vector<int> neg(t.size, kUndefined);
    for (int x = 0; x < t.size; ++x)
        for (int y = 0; y < t.size; ++y)
            if (alg.neg.at(x, y)) neg[x] = y;
    t.neg = neg;
    return t;
}

// ---- pullbacks in Pfn ----

// Partial function table: f[i] in 0..dst-1 or kUndefined.
struct PartialFn {
    int src = 0;
    int dst = 0;
    std::vector<int> map;

    int operator()(int i) const { return map[i]; }
    int compose_at(const PartialFn& then, int i) const {
        int v = map[i];
        return v == kUndefined ? kUndefined : then.map[v];
    }
};

// Commuting square p: P->X, q: P->Y, f: X->Z, g: Y->Z with f o p = g o q.
struct PfnSquare {
    PartialFn p, q, f, g;

    PfnSquare(PartialFn p_, PartialFn q_, PartialFn f_, PartialFn g_)
        : p(std::move(p_)), q(std::move(q_)), f(std::move(f_)), g(std::move(g_)) {
        if (p.src != q.src || p.dst != f.src || q.dst != g.src || f.dst != g.dst)
            throw DimensionError("PfnSquare: endpoint mismatch");
        for (int u = 0; u < p.src; ++u)
            if (p.compose_at(f, u) != q.compose_at(g, u))
                throw std::invalid_argument("PfnSquare: square does not commute at " +
                                            std::to_string(u));
    }
};

// Pullback test via the pointed-set completion with the smash-product
// pairing: pairs with an undefined component collapse to the base point.
// The candidate square is a pullback iff the comparison u -> (p(u), q(u))
// is a bijection from {u : p(u), q(u) defined} onto
// {(x, y) : f^(x) = g^(y), x and y defined}, and no point of P has both
// legs undefined.
inline bool pfn_pullback_check(const PfnSquare& sq) {
    std::vector<std::vector<int>> canonical;  // defined pairs (x, y)
    for (int x = 0; x < sq.f.src; ++x)
        for (int y = 0; y < sq.g.src; ++y)
            if (sq.f.map[x] == sq.g.map[y]) canonical.push_back({x, y});
    std::vector<bool> hit(canonical.size(), false);
    for (int u = 0; u < sq.p.src; ++u) {
        int x = sq.p.map[u], y = sq.q.map[u];
        if (x == kUndefined && y == kUndefined) return false;  // duplicates the base point
        if (x == kUndefined || y == kUndefined) continue;      // collapses to base, harmless
        bool found = false;
        for (size_t k = 0; k < canonical.size(); ++k)
            if (canonical[k][0] == x && canonical[k][1] == y) {
                if (hit[k]) return false;  // not injective
                hit[k] = true;
                found = true;
                break;
            }
        if (!found) return false;  // cannot happen for commuting squares
    }
    for (bool h : hit)
        if (!h) return false;  // not surjective
    return true;
}

// ---- general effect algebras and superspecial algebras ----

inline bool is_general_effect_algebra(const CommMonoidRel& m, const FinRel& zero,
                                      const FinRel& one, const FinRel& neg) {
    int n = m.carrier;
    if (!rel_is_single_valued(m.op) || !rel_is_single_valued(zero) || !rel_is_single_valued(one) ||
        !rel_is_single_valued(neg))
        return false;
    if (n > 0 && (zero.count() != 1 || one.count() != 1)) return false;
    CommMonoidRel check{n, m.op, zero};
    if (!check.validate().ok()) return false;

    PartialBinOpTable t;
    try {
        t = monoid_to_table(check);
    } catch (const std::invalid_argument&) {
        return false;
    }
    int one_e = kUndefined;
    for (int v = 0; v < n; ++v)
        if (one.at(0, v)) one_e = v;
    std::vector<int> neg_map(n, kUndefined);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (neg.at(x, y)) neg_map[x] = y;

    PartialFn vee{n * n, n, {}};
    vee.map.assign(n * n, kUndefined);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) vee.map[x * n + y] = t.table[x][y];

    // left square: A --<id,neg>--> A(x)A --vee--> A  <--1-- I <--!-- A
    PartialFn pair_id_neg{n, n * n, {}};
    pair_id_neg.map.assign(n, kUndefined);
    for (int x = 0; x < n; ++x)
        if (neg_map[x] != kUndefined) pair_id_neg.map[x] = x * n + neg_map[x];
    PartialFn bang{n, 1, std::vector<int>(n, 0)};
    PartialFn one_fn{1, n, {one_e}};
    if (n == 0) one_fn.map.clear(), one_fn.src = 1, one_fn.map = {kUndefined};
    try {
        PfnSquare left(pair_id_neg, bang, vee, one_fn);
        if (!pfn_pullback_check(left)) return false;
    } catch (const std::invalid_argument&) {
        return false;  // square does not even commute
    }

    // right square: I --<0,0>--> A(x)A --vee--> A  <--0-- I <--id-- I
    int zero_e = t.zero;
    PartialFn pair_zz{1, n * n, {n ? zero_e * n + zero_e : kUndefined}};
    PartialFn id_I{1, 1, {0}};
    PartialFn zero_fn{1, n, {n ? zero_e : kUndefined}};
    try {
        PfnSquare right(pair_zz, id_I, vee, zero_fn);
        if (!pfn_pullback_check(right)) return false;
    } catch (const std::invalid_argument&) {
        return false;
    }
    return true;
}

struct SuperspecialRecord {
    bool special = false;         // (A, vee, 0, vee+, 0+)
    bool antispecial = false;     // (A, vee, 0, wedge+, 1+)
    bool dual_special = false;    // (A, wedge, 1, wedge+, 1+)
    bool parenthetical_agree = false;
    bool superspecial() const { return special && antispecial; }
};

inline SuperspecialRecord superspecial_check(const OrthoAlgebra& alg) {
    const CommMonoidRel& m = alg.monoid;
    ConvolutionAlgebra vee_self{m.carrier, m.op, m.zero, dagger(m.op), dagger(m.zero)};
    ConvolutionAlgebra mixed{m.carrier, m.op, m.zero, dagger(alg.wedge), dagger(alg.one)};
    ConvolutionAlgebra wedge_self{m.carrier, alg.wedge, alg.one, dagger(alg.wedge),
                                  dagger(alg.one)};
    SuperspecialRecord rec;
    rec.special = is_special(vee_self);
    rec.antispecial = is_antispecial(mixed);
    rec.dual_special = is_special(wedge_self);
    rec.parenthetical_agree = (rec.special == rec.dual_special);
    return rec;
}

inline bool is_superspecial(const OrthoAlgebra& alg) {
    return superspecial_check(alg).superspecial();
}

struct PropEffRecord {
    bool superspecial = false;
    bool general_effect = false;
    bool agree = false;
    std::string witness;
};

inline PropEffRecord verify_prop_eff(const OrthoAlgebra& alg) {
    PropEffRecord rec;
    rec.superspecial = is_superspecial(alg);
    rec.general_effect =
        is_general_effect_algebra(alg.monoid, alg.monoid.zero, alg.one, alg.neg);
    rec.agree = (rec.superspecial == rec.general_effect);
    if (!rec.agree)
        rec.witness = rec.superspecial ? "superspecial but not a general effect algebra"
                                       : "general effect algebra but not superspecial";
    return rec;
}

}  // namespace effrel
