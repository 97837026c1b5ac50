#pragma once

// Exact arithmetic for the dagger-compact category of finite sets and
// relations. Objects are anonymous ordinals 0..size-1; tensor indices are
// flattened row-major, so the pair (i,j) of A(x)C sits at i*|C|+j. This
// flattening is a bit-exact contract shared by every module and by the
// serialized formats.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace effrel {

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct FinObj {
    int size = 0;
    std::optional<std::vector<std::string>> labels;

    FinObj() = default;
    explicit FinObj(int n) : size(n) {
        if (n < 0) throw DimensionError("FinObj: negative size");
    }
    FinObj(int n, std::vector<std::string> names) : size(n), labels(std::move(names)) {
        if (n < 0) throw DimensionError("FinObj: negative size");
        if (static_cast<int>(labels->size()) != n)
            throw DimensionError("FinObj: label count does not match size");
    }

    friend bool operator==(const FinObj& a, const FinObj& b) { return a.size == b.size; }
    friend bool operator!=(const FinObj& a, const FinObj& b) { return !(a == b); }
};

// Dense boolean incidence matrix. Immutable by convention after
// construction; all operations return fresh values.
class FinRel {
  public:
    FinRel() : src_(0), dst_(0) {}
    FinRel(int src, int dst) : src_(src), dst_(dst) {
        if (src < 0 || dst < 0) throw DimensionError("FinRel: negative carrier size");
        bits_.assign((static_cast<size_t>(src) * dst + 63) / 64, 0);
    }
    FinRel(FinObj src, FinObj dst) : FinRel(src.size, dst.size) {}

    static FinRel from_pairs(int src, int dst, const std::vector<std::pair<int, int>>& pairs) {
        FinRel r(src, dst);
        for (auto [i, j] : pairs) r.set(i, j);
        return r;
    }

    int src() const { return src_; }
    int dst() const { return dst_; }

    bool at(int i, int j) const {
        check_range(i, j);
        size_t k = static_cast<size_t>(i) * dst_ + j;
        return (bits_[k / 64] >> (k % 64)) & 1;
    }
    void set(int i, int j, bool v = true) {
        check_range(i, j);
        size_t k = static_cast<size_t>(i) * dst_ + j;
        if (v)
            bits_[k / 64] |= uint64_t(1) << (k % 64);
        else
            bits_[k / 64] &= ~(uint64_t(1) << (k % 64));
    }

    size_t count() const {
        size_t c = 0;
        for (uint64_t w : bits_) c += static_cast<size_t>(__builtin_popcountll(w));
        return c;
    }
    bool empty() const {
        for (uint64_t w : bits_)
            if (w) return false;
        return true;
    }

    std::vector<std::pair<int, int>> pairs() const {
        std::vector<std::pair<int, int>> out;
        for (int i = 0; i < src_; ++i)
            for (int j = 0; j < dst_; ++j)
                if (at(i, j)) out.emplace_back(i, j);
        return out;
    }

    friend bool operator==(const FinRel& a, const FinRel& b) {
        return a.src_ == b.src_ && a.dst_ == b.dst_ && a.bits_ == b.bits_;
    }
    friend bool operator!=(const FinRel& a, const FinRel& b) { return !(a == b); }
    friend bool operator<(const FinRel& a, const FinRel& b) {
        if (a.src_ != b.src_) return a.src_ < b.src_;
        if (a.dst_ != b.dst_) return a.dst_ < b.dst_;
        return a.bits_ < b.bits_;
    }

    const std::vector<uint64_t>& words() const { return bits_; }

  private:
    void check_range(int i, int j) const {
        if (i < 0 || i >= src_ || j < 0 || j >= dst_)
            throw DimensionError("FinRel: index out of range");
    }
    int src_, dst_;
    std::vector<uint64_t> bits_;
};

inline void require_same_endpoints(const FinRel& f, const FinRel& g, const char* what) {
    if (f.src() != g.src() || f.dst() != g.dst())
        throw DimensionError(std::string(what) + ": endpoint mismatch (" +
                             std::to_string(f.src()) + "x" + std::to_string(f.dst()) + " vs " +
                             std::to_string(g.src()) + "x" + std::to_string(g.dst()) + ")");
}

inline FinRel identity(int n) {
    FinRel r(n, n);
    for (int i = 0; i < n; ++i) r.set(i, i);
    return r;
}

inline FinRel empty_rel(int src, int dst) { return FinRel(src, dst); }

inline FinRel full_rel(int src, int dst) {
    FinRel r(src, dst);
    for (int i = 0; i < src; ++i)
        for (int j = 0; j < dst; ++j) r.set(i, j);
    return r;
}

// Diagrammatic order: compose(f, g) represents g o f.
inline FinRel compose(const FinRel& f, const FinRel& g) {
    if (f.dst() != g.src())
        throw DimensionError("compose: middle object mismatch (" + std::to_string(f.dst()) +
                             " vs " + std::to_string(g.src()) + ")");
    FinRel r(f.src(), g.dst());
    for (int a = 0; a < f.src(); ++a)
        for (int b = 0; b < f.dst(); ++b)
            if (f.at(a, b))
                for (int c = 0; c < g.dst(); ++c)
                    if (g.at(b, c)) r.set(a, c);
    return r;
}

inline FinRel dagger(const FinRel& f) {
    FinRel r(f.dst(), f.src());
    for (int i = 0; i < f.src(); ++i)
        for (int j = 0; j < f.dst(); ++j)
            if (f.at(i, j)) r.set(j, i);
    return r;
}

inline FinRel tensor(const FinRel& f, const FinRel& g) {
    FinRel r(f.src() * g.src(), f.dst() * g.dst());
    for (int a = 0; a < f.src(); ++a)
        for (int b = 0; b < f.dst(); ++b) {
            if (!f.at(a, b)) continue;
            for (int c = 0; c < g.src(); ++c)
                for (int d = 0; d < g.dst(); ++d)
                    if (g.at(c, d)) r.set(a * g.src() + c, b * g.dst() + d);
        }
    return r;
}

inline FinRel swap_rel(int a, int b) {
    FinRel r(a * b, b * a);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) r.set(i * b + j, j * a + i);
    return r;
}

// Vector I -> A picking out the members of S.
inline FinRel unit_vector(int n, const std::vector<int>& members) {
    FinRel r(1, n);
    for (int m : members) r.set(0, m);
    return r;
}

inline FinRel full_vector(int n) { return full_rel(1, n); }

// Self-duality vector for the standard classical structure: * -> (a,a).
inline FinRel std_cup(int n) {
    FinRel r(1, n * n);
    for (int a = 0; a < n; ++a) r.set(0, a * n + a);
    return r;
}

inline bool leq_subset(const FinRel& f, const FinRel& g) {
    require_same_endpoints(f, g, "leq_subset");
    const auto& a = f.words();
    const auto& b = g.words();
    for (size_t k = 0; k < a.size(); ++k)
        if (a[k] & ~b[k]) return false;
    return true;
}

inline FinRel meet(const FinRel& f, const FinRel& g) {
    require_same_endpoints(f, g, "meet");
    FinRel r(f.src(), f.dst());
    for (int i = 0; i < f.src(); ++i)
        for (int j = 0; j < f.dst(); ++j)
            if (f.at(i, j) && g.at(i, j)) r.set(i, j);
    return r;
}

inline FinRel join(const FinRel& f, const FinRel& g) {
    require_same_endpoints(f, g, "join");
    FinRel r(f.src(), f.dst());
    for (int i = 0; i < f.src(); ++i)
        for (int j = 0; j < f.dst(); ++j)
            if (f.at(i, j) || g.at(i, j)) r.set(i, j);
    return r;
}

// Permutation of tensor factors. sizes lists the input wires in order;
// out_of_in[k] names the input wire routed to output position k.
inline FinRel wire_perm(const std::vector<int>& sizes, const std::vector<int>& out_of_in) {
    if (sizes.size() != out_of_in.size())
        throw DimensionError("wire_perm: permutation length mismatch");
    int total = 1;
    for (int s : sizes) total *= s;
    FinRel r(total, total);
    std::vector<int> tuple(sizes.size(), 0);
    for (int flat = 0; flat < total; ++flat) {
        int rest = flat;
        for (int k = static_cast<int>(sizes.size()) - 1; k >= 0; --k) {
            tuple[k] = rest % sizes[k];
            rest /= sizes[k];
        }
        int out = 0;
        for (size_t k = 0; k < out_of_in.size(); ++k) out = out * sizes[out_of_in[k]] + tuple[out_of_in[k]];
        r.set(flat, out);
    }
    return r;
}

// A relation is the graph of a bijection iff every row and column holds
// exactly one bit; equivalent to e o e+ = e+ o e = id on square carriers.
inline bool is_bijection_graph(const FinRel& e) {
    if (e.src() != e.dst()) return false;
    int n = e.src();
    std::vector<int> col_hits(n, 0);
    for (int i = 0; i < n; ++i) {
        int row_hits = 0;
        for (int j = 0; j < n; ++j)
            if (e.at(i, j)) {
                ++row_hits;
                ++col_hits[j];
            }
        if (row_hits != 1) return false;
    }
    for (int c : col_hits)
        if (c != 1) return false;
    return true;
}

inline bool rel_is_single_valued(const FinRel& f) {
    for (int i = 0; i < f.src(); ++i) {
        int hits = 0;
        for (int j = 0; j < f.dst(); ++j)
            if (f.at(i, j)) ++hits;
        if (hits > 1) return false;
    }
    return true;
}

inline bool rel_is_total(const FinRel& f) {
    for (int i = 0; i < f.src(); ++i) {
        bool hit = false;
        for (int j = 0; j < f.dst(); ++j)
            if (f.at(i, j)) { hit = true; break; }
        if (!hit) return false;
    }
    return true;
}

}  // namespace effrel
