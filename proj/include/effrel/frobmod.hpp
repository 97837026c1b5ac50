#pragma once

// Modularity (pointwise and relational readings) and the mixed Frobenius
// law, plus the corollary checker tying them together over superspecial
// algebras.  The relational wiring used here is documented in
// docs/diagram-readings.md.

#include <string>

#include "effrel/effectlaw.hpp"
#include "effrel/finrel.hpp"
#include "effrel/ortho.hpp"
#include "effrel/report.hpp"

namespace effrel {

// x <= y in the algebraic order: some v with x (+) v = y.
inline bool elem_leq(const PartialBinOpTable& t, int x, int y) {
    for (int v = 0; v < t.size; ++v)
        if (t.table[x][v] == y) return true;
    return false;
}

// De Morgan dual table: x . z = neg(neg x (+) neg z), Kleene-style.
inline int wedge_apply(const PartialBinOpTable& t, int x, int z) {
    const std::vector<int>& neg = *t.neg;
    int u = t.table[neg[x]][neg[z]];
    return u == kUndefined ? kUndefined : neg[u];
}

struct ModularResult {
    bool holds = true;
    std::string witness;
};

// (16): x <= neg y <= z implies (x (+) y) . z = x (+) (y . z), where both
// sides are read as Kleene equality.  Requires a derived complement.
inline ModularResult is_modular_pointwise(const PartialBinOpTable& t) {
    ModularResult res;
    if (!t.neg) throw std::invalid_argument("is_modular_pointwise: no complement table");
    const std::vector<int>& neg = *t.neg;
    for (int x = 0; x < t.size; ++x)
        for (int y = 0; y < t.size; ++y) {
            if (!elem_leq(t, x, neg[y])) continue;
            for (int z = 0; z < t.size; ++z) {
                if (!elem_leq(t, neg[y], z)) continue;
                int u = t.table[x][y];
                int lhs = u == kUndefined ? kUndefined : wedge_apply(t, u, z);
                int w = wedge_apply(t, y, z);
                int rhs = w == kUndefined ? kUndefined : t.table[x][w];
                if (lhs != rhs) {
                    res.holds = false;
                    res.witness = "(x,y,z)=(" + std::to_string(x) + "," + std::to_string(y) +
                                  "," + std::to_string(z) + ")";
                    return res;
                }
            }
        }
    return res;
}

// copy dot a -> (a, a)
inline FinRel copy_rel(int n) {
    FinRel r(n, n * n);
    for (int a = 0; a < n; ++a) r.set(a, a * n + a);
    return r;
}

// (17), left side: the closed composite where the middle element is shared.
// (x, z) is in the domain iff there are y, u, w, p with u in x (+) y,
// w in y . z, p in u . z and p in x (+) w.
inline FinRel modular_lhs_rel(const FinRel& vee, const FinRel& wedge) {
    int n = vee.dst();
    FinRel stage = tensor(copy_rel(n), copy_rel(n));          // (x,z) -> x1 x2 z1 z2
    stage = compose(stage, tensor(identity(n * n * n * n), std_cup(n)));  // + y1 y2
    std::vector<int> sizes(6, n);
    stage = compose(stage, wire_perm(sizes, {0, 4, 5, 2, 1, 3}));  // x1 y1 y2 z1 x2 z2
    stage = compose(stage, tensor(vee, tensor(wedge, identity(n * n))));  // u w x2 z2
    stage = compose(stage, wire_perm({n, n, n, n}, {0, 3, 2, 1}));        // u z2 x2 w
    stage = compose(stage, tensor(wedge, vee));                           // p1 p2
    return compose(stage, dagger(std_cup(n)));                // cap: force p1 = p2
}

// (17), right side: (x, z) is in the domain iff some y makes both
// x (+) y and y . z defined.
inline FinRel modular_rhs_rel(const FinRel& vee, const FinRel& wedge) {
    int n = vee.dst();
    FinRel stage = tensor(identity(n), tensor(std_cup(n), identity(n)));  // x y1 y2 z
    stage = compose(stage, tensor(vee, wedge));                           // u w
    return compose(stage, tensor(full_rel(n, 1), full_rel(n, 1)));        // discard
}

inline bool is_modular_relational(const FinRel& vee, const FinRel& wedge) {
    return modular_lhs_rel(vee, wedge) == modular_rhs_rel(vee, wedge);
}

// (18): the Frobenius law for a monoid/comonoid pair.
inline bool frobenius_holds(const FinRel& mult, const FinRel& comult) {
    int n = mult.dst();
    FinRel closed = compose(mult, comult);
    FinRel right = compose(tensor(identity(n), comult), tensor(mult, identity(n)));
    FinRel left = compose(tensor(comult, identity(n)), tensor(identity(n), mult));
    return closed == right && closed == left;
}

// (19) variants, evaluated against the mixed pair (vee, wedge+).  Each
// single equation below is equivalent to the full Frobenius condition; the
// equivalence itself is what verify-lemmas checks.
inline bool frobenius_right_form(const FinRel& vee, const FinRel& wedge) {
    int n = vee.dst();
    FinRel lam = dagger(wedge);
    return compose(vee, lam) == compose(tensor(identity(n), lam), tensor(vee, identity(n)));
}

inline bool frobenius_left_form(const FinRel& vee, const FinRel& wedge) {
    int n = vee.dst();
    FinRel lam = dagger(wedge);
    return compose(vee, lam) == compose(tensor(lam, identity(n)), tensor(identity(n), vee));
}

inline bool frobenius_sided_agree(const FinRel& vee, const FinRel& wedge) {
    int n = vee.dst();
    FinRel lam = dagger(wedge);
    FinRel right = compose(tensor(identity(n), lam), tensor(vee, identity(n)));
    FinRel left = compose(tensor(lam, identity(n)), tensor(identity(n), vee));
    return right == left;
}

inline Report frobenius_variants(const FinRel& vee, const FinRel& wedge) {
    Report rep;
    rep.add("frobenius", frobenius_holds(vee, dagger(wedge)));
    rep.add("right-form", frobenius_right_form(vee, wedge));
    rep.add("left-form", frobenius_left_form(vee, wedge));
    rep.add("sided-forms-agree", frobenius_sided_agree(vee, wedge));
    return rep;
}

struct CorollaryRecord {
    bool superspecial = false;
    bool frobenius = false;
    bool modular = false;
    bool agree = false;        // frobenius <-> modular (only claimed when superspecial)
    bool lemma_agree = false;  // relational reading of (17) matches the pointwise one
    std::string witness;
};

inline CorollaryRecord verify_corollary(const OrthoAlgebra& alg) {
    CorollaryRecord rec;
    rec.superspecial = is_superspecial(alg);
    rec.frobenius = frobenius_holds(alg.monoid.op, dagger(alg.wedge));
    ModularResult mod = is_modular_pointwise(ortho_to_table(alg));
    rec.modular = mod.holds;
    rec.lemma_agree =
        (is_modular_relational(alg.monoid.op, alg.wedge) == mod.holds);
    rec.agree = (rec.frobenius == rec.modular);
    if (!rec.agree) rec.witness = mod.holds ? "modular but not Frobenius" : mod.witness;
    return rec;
}

}  // namespace effrel
