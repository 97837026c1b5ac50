#pragma once

// Convolution of morphisms along a chosen comonoid/monoid pair, the
// convolution preorder, the Carboni-Walters map predicates, the Cayley
// representation, and the special / antispecial tests.

#include <string>
#include <vector>

#include "effrel/classical.hpp"
#include "effrel/finrel.hpp"
#include "effrel/report.hpp"

namespace effrel {

struct MonoidView {
    int carrier = 0;
    FinRel mult;  // A(x)A -> A
    FinRel unit;  // I -> A
};

struct ComonoidView {
    int carrier = 0;
    FinRel comult;  // A -> A(x)A
    FinRel counit;  // A -> I
};

inline MonoidView cs_monoid(const ClassicalStructure& cs) {
    return {cs.carrier, cs_mult(cs), cs_unit(cs)};
}
inline ComonoidView cs_comonoid(const ClassicalStructure& cs) {
    return {cs.carrier, cs_copy(cs), cs_counit(cs)};
}

struct ConvolutionAlgebra {
    int carrier = 0;
    FinRel mult;    // mu: A(x)A -> A
    FinRel unit;    // iota: I -> A
    FinRel comult;  // lambda: A -> A(x)A
    FinRel counit;  // epsilon: A -> I

    Report validate() const {
        Report rep;
        int n = carrier;
        FinRel id = identity(n);
        rep.add("mult-endpoints", mult.src() == n * n && mult.dst() == n &&
                                      unit.src() == 1 && unit.dst() == n);
        rep.add("comult-endpoints", comult.src() == n && comult.dst() == n * n &&
                                        counit.src() == n && counit.dst() == 1);
        if (!rep.ok()) return rep;
        rep.add("monoid-assoc", compose(tensor(mult, id), mult) == compose(tensor(id, mult), mult));
        rep.add("monoid-comm", compose(swap_rel(n, n), mult) == mult);
        rep.add("monoid-unit", compose(tensor(unit, id), mult) == id);
        rep.add("comonoid-assoc",
                compose(comult, tensor(comult, id)) == compose(comult, tensor(id, comult)));
        rep.add("comonoid-comm", compose(comult, swap_rel(n, n)) == comult);
        rep.add("comonoid-counit", compose(comult, tensor(counit, id)) == id);
        return rep;
    }
};

inline void require_valid(const ConvolutionAlgebra& ca, const char* what) {
    Report rep = ca.validate();
    if (!rep.ok())
        throw std::invalid_argument(std::string(what) + ": malformed convolution algebra (" +
                                    rep.first_failure()->law + ")");
}

// f * g = mult o (f (x) g) o comult.
inline FinRel convolve(const FinRel& f, const FinRel& g, const ComonoidView& co,
                       const MonoidView& mo) {
    if (f.src() != co.carrier || f.dst() != mo.carrier)
        throw DimensionError("convolve: f does not match the chosen carriers");
    require_same_endpoints(f, g, "convolve");
    return compose(co.comult, compose(tensor(f, g), mo.mult));
}

// Cayley action of a vector: Upsilon(b) = mult o (b (x) id).
inline FinRel cayley(const MonoidView& mo, const FinRel& b) {
    if (b.src() != 1 || b.dst() != mo.carrier)
        throw DimensionError("cayley: b is not a vector into the monoid carrier");
    return compose(tensor(b, identity(mo.carrier)), mo.mult);
}

inline bool is_unitary(const FinRel& e) {
    if (e.src() != e.dst()) throw DimensionError("is_unitary: non-square endpoints");
    return is_bijection_graph(e);
}

// e is of the form a o b+ for vectors a, b iff e equals the full rectangle
// dom(e) x ran(e). The empty relation qualifies (empty witness).
inline bool is_scaled_projector(const FinRel& e) {
    if (e.src() != e.dst()) throw DimensionError("is_scaled_projector: non-square endpoints");
    int n = e.src();
    std::vector<bool> dom(n, false), ran(n, false);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (e.at(i, j)) dom[i] = ran[j] = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (e.at(i, j) != (dom[i] && ran[j])) return false;
    return true;
}

inline FinRel id_convolved_id(const ConvolutionAlgebra& ca) {
    return compose(ca.comult, ca.mult);
}

inline bool is_special(const ConvolutionAlgebra& ca) {
    require_valid(ca, "is_special");
    return is_unitary(id_convolved_id(ca));
}

inline bool is_antispecial(const ConvolutionAlgebra& ca) {
    require_valid(ca, "is_antispecial");
    return is_scaled_projector(id_convolved_id(ca));
}

// Convolution preorder: f <= g iff some witness ell has f * ell = g. When
// the algebra is the standard one (convolution = intersection) this is
// subset containment of g in f; otherwise candidates are searched in
// population-count order up to the configured cap.
inline bool conv_leq_witness_search(const FinRel& f, const FinRel& g, const ComonoidView& co,
                                    const MonoidView& mo, int cap_bits = 16) {
    require_same_endpoints(f, g, "conv_leq");
    int bits = f.src() * f.dst();
    if (bits > cap_bits)
        throw std::invalid_argument("conv_leq: search infeasible, carrier product " +
                                    std::to_string(bits) + " exceeds cap " +
                                    std::to_string(cap_bits));
    std::vector<uint32_t> masks(static_cast<size_t>(1) << bits);
    for (size_t m = 0; m < masks.size(); ++m) masks[m] = static_cast<uint32_t>(m);
    std::stable_sort(masks.begin(), masks.end(), [](uint32_t a, uint32_t b) {
        return __builtin_popcount(a) < __builtin_popcount(b);
    });
    for (uint32_t m : masks) {
        FinRel ell(f.src(), f.dst());
        for (int k = 0; k < bits; ++k)
            if ((m >> k) & 1) ell.set(k / f.dst(), k % f.dst());
        if (convolve(f, ell, co, mo) == g) return true;
    }
    return false;
}

inline bool is_standard_pair(const ComonoidView& co, const MonoidView& mo) {
    ClassicalStructure sa = standard_structure(co.carrier);
    ClassicalStructure sb = standard_structure(mo.carrier);
    return co.comult == cs_copy(sa) && co.counit == cs_counit(sa) && mo.mult == cs_mult(sb) &&
           mo.unit == cs_unit(sb);
}

inline bool conv_leq(const FinRel& f, const FinRel& g, const ComonoidView& co,
                     const MonoidView& mo, int cap_bits = 16) {
    if (is_standard_pair(co, mo)) return leq_subset(g, f);
    return conv_leq_witness_search(f, g, co, mo, cap_bits);
}

// Equational totality / single-valuedness against chosen classical
// structures (the comonoid-homomorphism characterization).
inline bool is_total(const FinRel& f, const ClassicalStructure& csA, const ClassicalStructure& csB) {
    if (f.src() != csA.carrier || f.dst() != csB.carrier)
        throw DimensionError("is_total: carrier mismatch");
    return compose(f, cs_counit(csB)) == cs_counit(csA);
}

inline bool is_single_valued(const FinRel& f, const ClassicalStructure& csA,
                             const ClassicalStructure& csB) {
    if (f.src() != csA.carrier || f.dst() != csB.carrier)
        throw DimensionError("is_single_valued: carrier mismatch");
    return compose(f, cs_copy(csB)) == compose(cs_copy(csA), tensor(f, f));
}

inline bool is_map(const FinRel& f, const ClassicalStructure& csA, const ClassicalStructure& csB) {
    return is_total(f, csA, csB) && is_single_valued(f, csA, csB);
}

// Equality detection for single-valued f, g through convolution covectors.
// The operational reading compares domains:
//   dom(f * g) = dom(f)  and  dom(f * g) = dom(g)
// where, for standard structures, f * g is the intersection. The report
// also evaluates the one-sided chain ending at dom(f) alone, whose reverse
// direction is falsified by any strict inclusion f < g; see
// docs/diagram-readings.md.
struct SveqRecord {
    bool equal;           // f == g
    bool reading_holds;   // symmetric domain chain
    bool one_sided_holds; // chain using dom(f) only
    bool forward_ok;      // equal implies reading
    bool backward_ok;     // reading implies equal
};

inline SveqRecord check_sveq(const FinRel& f, const FinRel& g, const ClassicalStructure& csA,
                             const ClassicalStructure& csB) {
    require_same_endpoints(f, g, "check_sveq");
    if (!is_single_valued(f, csA, csB) || !is_single_valued(g, csA, csB))
        throw std::invalid_argument("check_sveq: inputs must be single-valued");
    ComonoidView coA = cs_comonoid(csA);
    FinRel epsB = cs_counit(csB);
    FinRel agree_endo =
        convolve(compose(f, dagger(g)), identity(f.src()), coA, cs_monoid(csA));
    FinRel t_fix = compose(agree_endo, cs_counit(csA));            // eps o ((g+ o f) * id)
    FinRel t_meet = compose(convolve(f, g, coA, cs_monoid(csB)), epsB);  // eps o (f * g)
    FinRel t_f = compose(f, epsB);
    FinRel t_g = compose(g, epsB);

    SveqRecord rec;
    rec.equal = (f == g);
    rec.reading_holds = (t_fix == t_meet) && (t_meet == t_f) && (t_meet == t_g);
    rec.one_sided_holds = (t_fix == t_meet) && (t_meet == t_f);
    rec.forward_ok = !rec.equal || rec.reading_holds;
    rec.backward_ok = !rec.reading_holds || rec.equal;
    return rec;
}

}  // namespace effrel
