#pragma once

// JSON (de)serialization for every structure the tools exchange.

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "effrel/classical.hpp"
#include "effrel/convolution.hpp"
#include "effrel/effectlaw.hpp"
#include "effrel/finrel.hpp"
#include "effrel/ortho.hpp"
#include "effrel/report.hpp"
#include "effrel/search.hpp"

namespace effrel {

using nlohmann::json;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- Relation: {"src": n, "dst": m, "pairs": [[i,j], ...]} ----

inline json rel_to_json(const FinRel& r) {
    json pairs = json::array();
    for (auto [i, j] : r.pairs()) pairs.push_back({i, j});  // pairs() is already lex-sorted
    return {{"src", r.src()}, {"dst", r.dst()}, {"pairs", pairs}};
}

inline FinRel rel_from_json(const json& j) {
    if (!j.is_object() || !j.contains("src") || !j.contains("dst") || !j.contains("pairs"))
        throw ParseError("relation: expected {src, dst, pairs}");
    int src = j.at("src").get<int>(), dst = j.at("dst").get<int>();
    if (src < 0 || dst < 0) throw ParseError("relation: negative carrier size");
    FinRel r(src, dst);
    for (const auto& p : j.at("pairs")) {
        if (!p.is_array() || p.size() != 2) throw ParseError("relation: malformed pair");
        int a = p[0].get<int>(), b = p[1].get<int>();
        if (a < 0 || a >= src || b < 0 || b >= dst)
            throw ParseError("relation: pair out of range");
        r.set(a, b);
    }
    return r;
}

// ---- ClassicalStructure ----

inline json classical_to_json(const ClassicalStructure& cs) {
    json blocks = json::array();
    for (const auto& b : cs.blocks)
        blocks.push_back({{"elements", b.elements},
                          {"group",
                           {{"order", b.group.order},
                            {"add", b.group.add},
                            {"zero", b.group.zero}}}});
    return {{"carrier", cs.carrier}, {"blocks", blocks}};
}

inline ClassicalStructure classical_from_json(const json& j) {
    if (!j.is_object() || !j.contains("carrier") || !j.contains("blocks"))
        throw ParseError("classical structure: expected {carrier, blocks}");
    ClassicalStructure cs;
    cs.carrier = j.at("carrier").get<int>();
    for (const auto& bj : j.at("blocks")) {
        ClassicalStructure::Block b;
        b.elements = bj.at("elements").get<std::vector<int>>();
        const json& g = bj.at("group");
        b.group.order = g.at("order").get<int>();
        b.group.add = g.at("add").get<std::vector<std::vector<int>>>();
        b.group.zero = g.at("zero").get<int>();
        cs.blocks.push_back(std::move(b));
    }
    try {
        cs.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    return cs;
}

// ---- ConvolutionAlgebra ----

inline json convolution_to_json(const ConvolutionAlgebra& ca) {
    return {{"carrier", ca.carrier},
            {"mult", rel_to_json(ca.mult)},
            {"unit", rel_to_json(ca.unit)},
            {"comult", rel_to_json(ca.comult)},
            {"counit", rel_to_json(ca.counit)}};
}

inline ConvolutionAlgebra convolution_from_json(const json& j) {
    for (const char* k : {"carrier", "mult", "unit", "comult", "counit"})
        if (!j.contains(k)) throw ParseError(std::string("convolution algebra: missing ") + k);
    ConvolutionAlgebra ca{j.at("carrier").get<int>(), rel_from_json(j.at("mult")),
                          rel_from_json(j.at("unit")), rel_from_json(j.at("comult")),
                          rel_from_json(j.at("counit"))};
    Report rep = ca.validate();
    if (!rep.ok()) throw ParseError("convolution algebra: fails " + rep.first_failure()->law);
    return ca;
}

// ---- OrthoAlgebra; wedge optional, recomputed when omitted ----

inline json ortho_to_json(const OrthoAlgebra& alg) {
    return {{"monoid",
             {{"carrier", alg.monoid.carrier},
              {"op", rel_to_json(alg.monoid.op)},
              {"zero", rel_to_json(alg.monoid.zero)}}},
            {"one", rel_to_json(alg.one)},
            {"neg", rel_to_json(alg.neg)},
            {"wedge", rel_to_json(alg.wedge)}};
}

inline OrthoAlgebra ortho_from_json(const json& j) {
    if (!j.contains("monoid") || !j.contains("one") || !j.contains("neg"))
        throw ParseError("ortho algebra: expected {monoid, one, neg[, wedge]}");
    const json& mj = j.at("monoid");
    CommMonoidRel m{mj.at("carrier").get<int>(), rel_from_json(mj.at("op")),
                    rel_from_json(mj.at("zero"))};
    OrthoAlgebra alg;
    alg.monoid = m;
    alg.one = rel_from_json(j.at("one"));
    alg.neg = rel_from_json(j.at("neg"));
    alg.wedge = j.contains("wedge") ? rel_from_json(j.at("wedge"))
                                    : demorgan_dual(m, alg.neg).op;
    if (alg.one.src() != 1 || alg.one.dst() != m.carrier || alg.neg.src() != m.carrier ||
        alg.neg.dst() != m.carrier || alg.wedge.src() != m.carrier * m.carrier ||
        alg.wedge.dst() != m.carrier)
        throw ParseError("ortho algebra: component dimension mismatch");
    return alg;
}

// ---- Table: {"size", "zero", "one", "table" with null for undefined} ----

inline json table_to_json(const PartialBinOpTable& t) {
    json rows = json::array();
    for (const auto& row : t.table) {
        json r = json::array();
        for (int v : row)
            v == kUndefined ? r.push_back(nullptr) : r.push_back(v);
        rows.push_back(r);
    }
    return {{"size", t.size}, {"zero", t.zero}, {"one", t.one}, {"table", rows}};
}

inline PartialBinOpTable table_from_json(const json& j) {
    for (const char* k : {"size", "zero", "one", "table"})
        if (!j.contains(k)) throw ParseError(std::string("table: missing ") + k);
    PartialBinOpTable t;
    t.size = j.at("size").get<int>();
    t.zero = j.at("zero").get<int>();
    t.one = j.at("one").get<int>();
    for (const auto& rj : j.at("table")) {
        std::vector<int> row;
        for (const auto& v : rj) {
            if (v.is_null()) {
                row.push_back(kUndefined);
            } else {
                int e = v.get<int>();
                if (e < 0 || e >= t.size) throw ParseError("table: entry out of range");
                row.push_back(e);
            }
        }
        t.table.push_back(std::move(row));
    }
    if (static_cast<int>(t.table.size()) != t.size) throw ParseError("table: wrong row count");
    for (const auto& row : t.table)
        if (static_cast<int>(row.size()) != t.size) throw ParseError("table: ragged row");
    if (t.zero < 0 || t.zero >= t.size || t.one < 0 || t.one >= t.size)
        throw ParseError("table: constants out of range");
    return t;
}

// ---- reports and catalog records ----

inline json report_to_json(const Report& rep) {
    json out = json::array();
    for (const auto& c : rep.checks) {
        json e = {{"law", c.law}, {"pass", c.pass}};
        if (!c.witness.empty()) e["witness"] = c.witness;
        out.push_back(e);
    }
    return out;
}

inline json canonical_to_json(const CanonicalAlgebra& alg) {
    json j = table_to_json(alg.table);
    j["degenerate"] = alg.degenerate;
    j["modular"] = alg.modular;
    j["frobenius"] = alg.frobenius;
    j["superspecial"] = alg.superspecial;
    j["general_effect"] = alg.general_effect;
    return j;
}

inline json sweep_to_json(const SweepReport& rep) {
    json rows = json::array();
    for (const auto& r : rep.rows)
        rows.push_back({{"n", r.n},
                        {"count", r.count},
                        {"modular", r.modular_count},
                        {"frobenius", r.frobenius_count},
                        {"superspecial", r.superspecial_count},
                        {"general_effect", r.general_effect_count},
                        {"disagreements", r.disagreements}});
    return {{"max_size", rep.max_size},
            {"rows", rows},
            {"disagreements", rep.total_disagreements()},
            {"details", rep.disagreement_details}};
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("JSON parse error: ") + e.what());
    }
    return j;
}

}  // namespace effrel
