#pragma once

// Exhaustive enumeration of effect algebras up to isomorphism,
// canonicalization, classification, and the theorem-verification sweep.

#include <algorithm>
#include <functional>
#include <future>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "effrel/effectlaw.hpp"
#include "effrel/frobmod.hpp"
#include "effrel/ortho.hpp"

namespace effrel {

constexpr int kEnumBound = 6;

struct CanonicalAlgebra {
    PartialBinOpTable table;
    bool degenerate = false;  // zero = one (only the one-element algebra)
    bool modular = false;
    bool frobenius = false;
    bool superspecial = false;
    bool general_effect = false;
};

// Flat lexicographic key; undefined sorts after every element.
inline std::vector<int> table_key(const PartialBinOpTable& t) {
    std::vector<int> key;
    key.reserve(t.size * t.size + 1);
    for (const auto& row : t.table)
        for (int v : row) key.push_back(v == kUndefined ? t.size : v);
    key.push_back(t.one);
    return key;
}

// Lexicographically least relabeling among permutations sending zero to 0.
inline PartialBinOpTable canonicalize(const PartialBinOpTable& t) {
    int n = t.size;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    PartialBinOpTable best;
    std::vector<int> best_key;
    do {
        if (perm[t.zero] != 0) continue;
        PartialBinOpTable cand;
        cand.size = n;
        cand.zero = 0;
        cand.one = perm[t.one];
        cand.table.assign(n, std::vector<int>(n, kUndefined));
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                int v = t.table[x][y];
                cand.table[perm[x]][perm[y]] = (v == kUndefined) ? kUndefined : perm[v];
            }
        std::vector<int> key = table_key(cand);
        if (best_key.empty() || key < best_key) {
            best_key = std::move(key);
            best = std::move(cand);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (t.neg) {
        // recompute rather than permute: keeps the stored table self-contained
        best.neg = derived_complements(best);
    }
    return best;
}

namespace detail {

// Backtracking enumerator with zero fixed at 0 (row/column 0 is identity).
// Free cells are the symmetric pairs (x, y), 1 <= x <= y; candidate values
// are the elements in order, then undefined.  first_val, when >= 0, pins the
// first free cell (undefined encoded as n) so workers can split the tree.
inline void enumerate_raw(int n, int one, int first_val,
                          std::vector<PartialBinOpTable>& out) {
    std::vector<std::pair<int, int>> cells;
    for (int x = 1; x < n; ++x)
        for (int y = x; y < n; ++y) cells.push_back({x, y});

    constexpr int kUnset = -2;
    std::vector<std::vector<int>> tab(n, std::vector<int>(n, kUnset));
    for (int i = 0; i < n; ++i) tab[0][i] = tab[i][0] = i;

    auto assoc_ok = [&](void) {
        // check only triples whose lookups are all decided
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                int ab = tab[a][b];
                if (ab == kUnset) continue;
                for (int c = 0; c < n; ++c) {
                    int bc = tab[b][c];
                    if (bc == kUnset) continue;
                    int l = ab == kUndefined ? kUndefined : tab[ab][c];
                    int r = bc == kUndefined ? kUndefined : tab[a][bc];
                    if (l == kUnset || r == kUnset) continue;
                    if (l != r) return false;
                }
            }
        return true;
    };

    auto emit = [&]() {
        PartialBinOpTable t;
        t.size = n;
        t.zero = 0;
        t.one = one;
        t.table = tab;
        if (check_effect_axioms(t).ok()) {
            t.neg = derived_complements(t);
            out.push_back(std::move(t));
        }
    };

    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == cells.size()) {
            emit();
            return;
        }
        auto [x, y] = cells[k];
        for (int vi = 0; vi <= n; ++vi) {
            int v = (vi == n) ? kUndefined : vi;  // undefined tried last
            if (k == 0 && first_val >= 0 && vi != first_val) continue;
            // condition (3): x (+) one is undefined off x = 0, and free
            // cells never touch row 0
            if (v != kUndefined && (x == one || y == one)) continue;
            tab[x][y] = tab[y][x] = v;
            bool ok = assoc_ok();
            if (ok && v == one) {
                // condition (2) partial: no element with two complements
                int cx = 0, cy = 0;
                for (int j = 0; j < n; ++j) {
                    if (tab[x][j] == one && tab[x][j] != kUnset) ++cx;
                    if (tab[y][j] == one && tab[y][j] != kUnset) ++cy;
                }
                if (cx > 1 || cy > 1) ok = false;
            }
            if (ok) rec(k + 1);
        }
        tab[x][y] = tab[y][x] = kUnset;
    };
    rec(0);
}

inline std::set<std::vector<int>> canonical_set(int n, int jobs) {
    std::vector<std::pair<int, int>> tasks;  // (one, first_val)
    if (n == 1) {
        tasks.push_back({0, -1});
    } else {
        for (int one = 1; one < n; ++one) {
            if (n == 2)
                tasks.push_back({one, -1});
            else
                for (int fv = 0; fv <= n; ++fv) tasks.push_back({one, fv});
        }
    }
    auto run = [n](std::pair<int, int> task) {
        std::vector<PartialBinOpTable> raw;
        enumerate_raw(n, task.first, task.second, raw);
        std::set<std::vector<int>> keys;
        for (const auto& t : raw) keys.insert(table_key(canonicalize(t)));
        return keys;
    };
    std::set<std::vector<int>> all;
    if (jobs <= 1) {
        for (auto& task : tasks) all.merge(run(task));
    } else {
        std::vector<std::future<std::set<std::vector<int>>>> futs;
        for (auto& task : tasks)
            futs.push_back(std::async(std::launch::async, run, task));
        for (auto& f : futs) all.merge(f.get());
    }
    return all;
}

inline PartialBinOpTable key_to_table(int n, const std::vector<int>& key) {
    PartialBinOpTable t;
    t.size = n;
    t.zero = 0;
    t.one = key.back();
    t.table.assign(n, std::vector<int>(n, kUndefined));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int v = key[x * n + y];
            t.table[x][y] = (v == n) ? kUndefined : v;
        }
    t.neg = derived_complements(t);
    return t;
}

}  // namespace detail

inline OrthoAlgebra table_to_ortho(const PartialBinOpTable& t) {
    CommMonoidRel m = table_to_monoid(t);
    return make_ortho_algebra(m, unit_vector(t.size, {t.one}));
}

inline CanonicalAlgebra classify(const PartialBinOpTable& t) {
    CanonicalAlgebra alg;
    alg.table = t;
    alg.degenerate = (t.zero == t.one);
    OrthoAlgebra oa = table_to_ortho(t);
    alg.superspecial = is_superspecial(oa);
    alg.general_effect = is_general_effect_algebra(oa.monoid, oa.monoid.zero, oa.one, oa.neg);
    alg.frobenius = frobenius_holds(oa.monoid.op, dagger(oa.wedge));
    alg.modular = is_modular_pointwise(t).holds;
    return alg;
}

inline std::vector<CanonicalAlgebra> enumerate_effect_algebras(int n, int jobs = 1,
                                                               bool override_guard = false) {
    if (n < 1) throw std::invalid_argument("enumerate_effect_algebras: size must be positive");
    if (n > kEnumBound && !override_guard)
        throw std::invalid_argument("enumerate_effect_algebras: size " + std::to_string(n) +
                                    " exceeds bound " + std::to_string(kEnumBound));
    std::vector<CanonicalAlgebra> out;
    for (const auto& key : detail::canonical_set(n, jobs))
        out.push_back(classify(detail::key_to_table(n, key)));
    return out;
}

struct SweepRow {
    int n = 0;
    long count = 0;
    long modular_count = 0;
    long frobenius_count = 0;
    long superspecial_count = 0;
    long general_effect_count = 0;
    long disagreements = 0;
};

struct SweepReport {
    int max_size = 0;
    std::vector<SweepRow> rows;
    std::vector<CanonicalAlgebra> algebras;
    std::vector<std::string> disagreement_details;

    long total_disagreements() const {
        long s = 0;
        for (const auto& r : rows) s += r.disagreements;
        return s;
    }

    std::string csv() const {
        std::ostringstream os;
        os << "n,count,modular,frobenius,disagreements\n";
        for (const auto& r : rows)
            os << r.n << ',' << r.count << ',' << r.modular_count << ',' << r.frobenius_count
               << ',' << r.disagreements << '\n';
        return os.str();
    }
};

// For every algebra up to max_size: the superspecial/effect-algebra
// equivalence, and where superspecial, the Frobenius/modularity equivalence.
inline SweepReport sweep_verify(int maxN, int jobs = 1, bool override_guard = false) {
    SweepReport rep;
    rep.max_size = maxN;
    for (int n = 1; n <= maxN; ++n) {
        SweepRow row;
        row.n = n;
        for (CanonicalAlgebra& alg : enumerate_effect_algebras(n, jobs, override_guard)) {
            ++row.count;
            if (alg.modular) ++row.modular_count;
            if (alg.frobenius) ++row.frobenius_count;
            if (alg.superspecial) ++row.superspecial_count;
            if (alg.general_effect) ++row.general_effect_count;
            OrthoAlgebra oa = table_to_ortho(alg.table);
            PropEffRecord pe = verify_prop_eff(oa);
            if (!pe.agree) {
                ++row.disagreements;
                rep.disagreement_details.push_back("n=" + std::to_string(n) + " prop-eff: " +
                                                   pe.witness);
            }
            if (alg.superspecial) {
                CorollaryRecord cor = verify_corollary(oa);
                if (!cor.agree) {
                    ++row.disagreements;
                    rep.disagreement_details.push_back("n=" + std::to_string(n) +
                                                       " corollary: " + cor.witness);
                }
            }
            rep.algebras.push_back(std::move(alg));
        }
        rep.rows.push_back(row);
    }
    return rep;
}

}  // namespace effrel
