#pragma once

// Classical structures on finite objects in Rel: disjoint unions of finite
// abelian groups, stored as explicit Cayley tables. Generates the four
// structure relations (multiply, copy, unit, counit) and validates the
// Frobenius laws by direct relation-equation evaluation.

#include <numeric>
#include <string>
#include <vector>

#include "effrel/finrel.hpp"
#include "effrel/report.hpp"

namespace effrel {

struct AbelianGroupTable {
    int order = 1;
    std::vector<std::vector<int>> add;  // order x order element indices
    int zero = 0;
    std::string name = "Z1";

    void validate() const {
        if (order <= 0) throw std::invalid_argument("group: order must be positive");
        if (static_cast<int>(add.size()) != order)
            throw std::invalid_argument("group: table row count mismatch");
        for (const auto& row : add) {
            if (static_cast<int>(row.size()) != order)
                throw std::invalid_argument("group: table column count mismatch");
            for (int v : row)
                if (v < 0 || v >= order) throw std::invalid_argument("group: entry out of range");
        }
        if (zero < 0 || zero >= order) throw std::invalid_argument("group: zero out of range");
        for (int x = 0; x < order; ++x) {
            if (add[zero][x] != x || add[x][zero] != x)
                throw std::invalid_argument("group: unit law fails");
            bool has_inverse = false;
            for (int y = 0; y < order; ++y) {
                if (add[x][y] != add[y][x]) throw std::invalid_argument("group: not commutative");
                if (add[x][y] == zero) has_inverse = true;
            }
            if (!has_inverse) throw std::invalid_argument("group: missing inverse");
        }
        for (int x = 0; x < order; ++x)
            for (int y = 0; y < order; ++y)
                for (int z = 0; z < order; ++z)
                    if (add[add[x][y]][z] != add[x][add[y][z]])
                        throw std::invalid_argument("group: not associative");
    }
};

inline AbelianGroupTable cyclic_group(int n) {
    AbelianGroupTable g;
    g.order = n;
    g.zero = 0;
    g.name = "Z" + std::to_string(n);
    g.add.assign(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) g.add[x][y] = (x + y) % n;
    return g;
}

inline AbelianGroupTable product_group(const AbelianGroupTable& a, const AbelianGroupTable& b) {
    AbelianGroupTable g;
    g.order = a.order * b.order;
    g.zero = a.zero * b.order + b.zero;
    g.name = a.name + "x" + b.name;
    g.add.assign(g.order, std::vector<int>(g.order));
    for (int x = 0; x < g.order; ++x)
        for (int y = 0; y < g.order; ++y) {
            int xa = x / b.order, xb = x % b.order;
            int ya = y / b.order, yb = y % b.order;
            g.add[x][y] = a.add[xa][ya] * b.order + b.add[xb][yb];
        }
    return g;
}

// Abelian groups of each order up to isomorphism, orders 1..8.
inline const std::vector<AbelianGroupTable>& groups_of_order(int n) {
    static const std::vector<std::vector<AbelianGroupTable>> table = [] {
        std::vector<std::vector<AbelianGroupTable>> t(9);
        for (int k = 1; k <= 8; ++k) t[k].push_back(cyclic_group(k));
        t[4].push_back(product_group(cyclic_group(2), cyclic_group(2)));
        t[8].push_back(product_group(cyclic_group(4), cyclic_group(2)));
        t[8].push_back(product_group(product_group(cyclic_group(2), cyclic_group(2)), cyclic_group(2)));
        return t;
    }();
    if (n < 1 || n > 8) throw std::invalid_argument("groups_of_order: order out of supported range 1..8");
    return table[n];
}

struct ClassicalStructure {
    struct Block {
        std::vector<int> elements;  // carrier indices, in order; position = group element
        AbelianGroupTable group;
    };

    int carrier = 0;
    std::vector<Block> blocks;

    void validate() const {
        std::vector<int> seen(carrier, 0);
        for (const auto& b : blocks) {
            b.group.validate();
            if (static_cast<int>(b.elements.size()) != b.group.order)
                throw std::invalid_argument("classical structure: block size != group order");
            for (int e : b.elements) {
                if (e < 0 || e >= carrier)
                    throw std::invalid_argument("classical structure: element out of range");
                if (seen[e]++) throw std::invalid_argument("classical structure: element repeated");
            }
        }
        for (int e = 0; e < carrier; ++e)
            if (!seen[e]) throw std::invalid_argument("classical structure: element not covered");
    }
};

inline ClassicalStructure standard_structure(int n) {
    ClassicalStructure cs;
    cs.carrier = n;
    for (int i = 0; i < n; ++i) cs.blocks.push_back({{i}, cyclic_group(1)});
    return cs;
}

// The classical monoid: (a,b) related to c iff a,b lie in one block and
// a+b=c there.
inline FinRel cs_mult(const ClassicalStructure& cs) {
    int n = cs.carrier;
    FinRel r(n * n, n);
    for (const auto& b : cs.blocks)
        for (int p = 0; p < b.group.order; ++p)
            for (int q = 0; q < b.group.order; ++q)
                r.set(b.elements[p] * n + b.elements[q], b.elements[b.group.add[p][q]]);
    return r;
}

inline FinRel cs_copy(const ClassicalStructure& cs) { return dagger(cs_mult(cs)); }

inline FinRel cs_unit(const ClassicalStructure& cs) {
    FinRel r(1, cs.carrier);
    for (const auto& b : cs.blocks) r.set(0, b.elements[b.group.zero]);
    return r;
}

// Frobenius counit: the dagger of the unit.  For the standard structure the
// unit is the full vector, so this is the discard covector there.
inline FinRel cs_counit(const ClassicalStructure& cs) { return dagger(cs_unit(cs)); }

inline Report validate_classical(const ClassicalStructure& cs) {
    Report rep;
    int n = cs.carrier;
    FinRel mult = cs_mult(cs);
    FinRel unit = cs_unit(cs);
    FinRel copy = cs_copy(cs);
    FinRel id = identity(n);

    FinRel assoc_l = compose(tensor(mult, id), mult);
    FinRel assoc_r = compose(tensor(id, mult), mult);
    rep.add("associativity", assoc_l == assoc_r);
    rep.add("commutativity", compose(swap_rel(n, n), mult) == mult);
    rep.add("unit", compose(tensor(unit, id), mult) == id &&
                        compose(tensor(id, unit), mult) == id);
    rep.add("comonoid-is-dagger", copy == dagger(mult) && cs_counit(cs) == dagger(unit));
    rep.add("comonoid-counit", compose(copy, tensor(cs_counit(cs), id)) == id);
    // Frobenius: copy o mult = (id (x) mult) o (copy (x) id)
    FinRel frob_l = compose(mult, copy);
    FinRel frob_m = compose(tensor(copy, id), tensor(id, mult));
    FinRel frob_r = compose(tensor(id, copy), tensor(mult, id));
    rep.add("frobenius", frob_l == frob_m && frob_l == frob_r);
    rep.add("special", compose(copy, mult) == id);
    return rep;
}

namespace detail {
inline void partitions_rgs(int n, std::vector<std::vector<int>>& out) {
    // restricted growth strings, lexicographic
    std::vector<int> rgs(n, 0);
    auto rec = [&](auto&& self, int i, int max_used) -> void {
        if (i == n) {
            out.push_back(rgs);
            return;
        }
        for (int v = 0; v <= max_used + 1; ++v) {
            rgs[i] = v;
            self(self, i + 1, std::max(max_used, v));
        }
    };
    if (n == 0)
        out.push_back({});
    else
        rec(rec, 0, -1);
}
}  // namespace detail

// All classical structures on n elements: one per (set partition, choice of
// abelian group per block). Partitions run in restricted-growth-string
// order; blocks are listed by least element.
inline std::vector<ClassicalStructure> enumerate_classical(int n, int bound = 8) {
    if (n > bound) throw std::invalid_argument("enumerate_classical: size exceeds bound");
    std::vector<std::vector<int>> rgss;
    detail::partitions_rgs(n, rgss);
    std::vector<ClassicalStructure> out;
    for (const auto& rgs : rgss) {
        int nblocks = rgs.empty() ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
        std::vector<std::vector<int>> blocks(nblocks);
        for (int i = 0; i < n; ++i) blocks[rgs[i]].push_back(i);
        // group choice per block, odometer order
        std::vector<int> choice(nblocks, 0);
        while (true) {
            ClassicalStructure cs;
            cs.carrier = n;
            bool feasible = true;
            for (int b = 0; b < nblocks; ++b) {
                int sz = static_cast<int>(blocks[b].size());
                if (sz > 8) { feasible = false; break; }
                cs.blocks.push_back({blocks[b], groups_of_order(sz)[choice[b]]});
            }
            if (feasible) out.push_back(std::move(cs));
            int k = nblocks - 1;
            while (k >= 0) {
                int sz = static_cast<int>(blocks[k].size());
                int ngroups = sz <= 8 ? static_cast<int>(groups_of_order(sz).size()) : 1;
                if (++choice[k] < ngroups) break;
                choice[k] = 0;
                --k;
            }
            if (k < 0) break;
        }
    }
    return out;
}

}  // namespace effrel
