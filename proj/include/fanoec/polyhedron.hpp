#pragma once

#include <map>
#include <set>

#include "fanoec/matrix.hpp"

namespace fanoec {

struct UnboundedPolyhedron : std::runtime_error {
    explicit UnboundedPolyhedron(const std::string& what) : std::runtime_error(what) {}
};

// Exact rational polyhedron {x : <normal_i, x> >= offset_i, <eq_j, x> == c_j}
// with integer data. Emptiness, boundedness and lattice-point queries are
// decided exactly via Fourier-Motzkin projection.
struct RationalPolyhedron {
    std::size_t dim = 0;
    std::vector<std::vector<Int>> normals;
    std::vector<Int> offsets;
    std::vector<std::vector<Int>> eq_normals;
    std::vector<Int> eq_offsets;

    explicit RationalPolyhedron(std::size_t d) : dim(d) {}

    void add_inequality(std::vector<Int> normal, Int offset) {
        if (normal.size() != dim) throw std::invalid_argument("add_inequality: bad normal size");
        normals.push_back(std::move(normal));
        offsets.push_back(std::move(offset));
    }

    void add_equality(std::vector<Int> normal, Int offset) {
        if (normal.size() != dim) throw std::invalid_argument("add_equality: bad normal size");
        eq_normals.push_back(std::move(normal));
        eq_offsets.push_back(std::move(offset));
    }
};

namespace fm {

// One inequality a . x >= b.
struct Row {
    std::vector<Int> a;
    Int b;

    bool operator<(const Row& o) const {
        if (a != o.a) return a < o.a;
        return b < o.b;
    }
};

inline void normalize(Row& r) {
    Int g = vector_gcd(r.a);
    if (g > 1) {
        for (Int& x : r.a) x /= g;
        // rhs rounds up: a.x >= b with a = g*a' means a'.x >= b/g
        r.b = ceil_div(r.b, g);
    }
}

// Eliminate variable `var`, producing a system over the remaining variables
// (coefficient slot `var` becomes zero in every row).
inline std::vector<Row> eliminate(const std::vector<Row>& rows, std::size_t var) {
    std::vector<const Row*> pos, neg;
    std::set<Row> out;
    for (const Row& r : rows) {
        if (r.a[var] > 0)
            pos.push_back(&r);
        else if (r.a[var] < 0)
            neg.push_back(&r);
        else {
            Row c = r;
            out.insert(std::move(c));
        }
    }
    const std::size_t n = rows.empty() ? 0 : rows[0].a.size();
    for (const Row* p : pos)
        for (const Row* q : neg) {
            // (-q_k) * p + p_k * q has zero coefficient on var
            Int cp = -q->a[var], cq = p->a[var];
            Row c;
            c.a.resize(n);
            for (std::size_t j = 0; j < n; ++j) c.a[j] = cp * p->a[j] + cq * q->a[j];
            c.b = cp * p->b + cq * q->b;
            normalize(c);
            out.insert(std::move(c));
        }
    // keep only the strongest offset per normal
    std::vector<Row> res;
    std::map<std::vector<Int>, Int> best;
    for (const Row& r : out) {
        auto it = best.find(r.a);
        if (it == best.end())
            best.emplace(r.a, r.b);
        else if (r.b > it->second)
            it->second = r.b;
    }
    res.reserve(best.size());
    for (auto& [a, b] : best) res.push_back(Row{a, b});
    return res;
}

// Projection chain: chain[k] constrains variables 0..k-1 only. chain[dim] is
// the input system; chain[0] holds the constant rows (feasibility witness).
inline std::vector<std::vector<Row>> projection_chain(std::vector<Row> rows, std::size_t dim) {
    std::vector<std::vector<Row>> chain(dim + 1);
    chain[dim] = std::move(rows);
    for (std::size_t k = dim; k > 0; --k) chain[k - 1] = eliminate(chain[k], k - 1);
    return chain;
}

// A system over no remaining variables is infeasible iff some constant row
// reads 0 >= b with b > 0.
inline bool constant_rows_feasible(const std::vector<Row>& rows) {
    for (const Row& r : rows) {
        bool zero = true;
        for (const Int& x : r.a)
            if (x != 0) {
                zero = false;
                break;
            }
        if (zero && r.b > 0) return false;
    }
    return true;
}

// Bounds on x_k given fixed values of x_0..x_{k-1}, read from chain[k+1].
// Returns false if the slice is empty. lo/hi unset mean unbounded on that side.
struct VarBounds {
    std::optional<Int> lo, hi;  // integer bounds (ceil/floor of rational ones)
    bool feasible = true;
};

inline VarBounds slice_bounds(const std::vector<Row>& rows, std::size_t k, const std::vector<Int>& fixed) {
    VarBounds vb;
    for (const Row& r : rows) {
        Int partial = r.b;
        for (std::size_t j = 0; j < k; ++j) partial -= r.a[j] * fixed[j];
        const Int& c = r.a[k];
        if (c == 0) {
            if (partial > 0) {
                vb.feasible = false;
                return vb;
            }
            continue;
        }
        if (c > 0) {
            Int lo = ceil_div(partial, c);
            if (!vb.lo || lo > *vb.lo) vb.lo = lo;
        } else {
            Int hi = floor_div(partial, c);
            if (!vb.hi || hi < *vb.hi) vb.hi = hi;
        }
    }
    return vb;
}

}  // namespace fm

namespace detail {

inline std::vector<fm::Row> polyhedron_rows(const RationalPolyhedron& p) {
    std::vector<fm::Row> rows;
    rows.reserve(p.normals.size() + 2 * p.eq_normals.size());
    for (std::size_t i = 0; i < p.normals.size(); ++i) rows.push_back(fm::Row{p.normals[i], p.offsets[i]});
    for (std::size_t i = 0; i < p.eq_normals.size(); ++i) {
        rows.push_back(fm::Row{p.eq_normals[i], p.eq_offsets[i]});
        fm::Row neg;
        neg.a.resize(p.dim);
        for (std::size_t j = 0; j < p.dim; ++j) neg.a[j] = -p.eq_normals[i][j];
        neg.b = -p.eq_offsets[i];
        rows.push_back(std::move(neg));
    }
    return rows;
}

// Core enumeration over a projection chain. Throws UnboundedPolyhedron when a
// feasible slice has a missing bound.
template <typename Visitor>
inline void enumerate_chain(const std::vector<std::vector<fm::Row>>& chain, std::size_t dim, Visitor&& visit) {
    if (!fm::constant_rows_feasible(chain[0])) return;  // empty over the reals
    std::vector<Int> x(dim, Int(0));
    std::vector<std::pair<Int, Int>> range(dim);

    std::size_t level = 0;
    for (;;) {
        if (level == dim) {
            visit(x);
            // backtrack
            while (level > 0) {
                --level;
                if (x[level] < range[level].second) {
                    ++x[level];
                    ++level;
                    break;
                }
            }
            if (level == 0) return;
            continue;
        }
        fm::VarBounds vb = fm::slice_bounds(chain[level + 1], level, x);
        if (vb.feasible && (!vb.lo || !vb.hi))
            throw UnboundedPolyhedron("polyhedron is unbounded in coordinate " + std::to_string(level));
        if (!vb.feasible || *vb.lo > *vb.hi) {
            // empty slice: backtrack
            bool moved = false;
            while (level > 0) {
                --level;
                if (x[level] < range[level].second) {
                    ++x[level];
                    ++level;
                    moved = true;
                    break;
                }
            }
            if (!moved) return;
            continue;
        }
        range[level] = {*vb.lo, *vb.hi};
        x[level] = *vb.lo;
        ++level;
    }
}

}  // namespace detail

inline bool is_empty(const RationalPolyhedron& p) {
    auto chain = fm::projection_chain(detail::polyhedron_rows(p), p.dim);
    for (const auto& sys : chain)
        if (!fm::constant_rows_feasible(sys)) return true;
    // all projections consistent: nonempty over R; still must check the last
    // interval is nonempty (constant rows already cover it)
    return false;
}

// Exactly the integer points of a bounded polyhedron, in lexicographic order.
// Throws UnboundedPolyhedron if the polyhedron is feasible but unbounded.
inline std::vector<std::vector<Int>> lattice_points(const RationalPolyhedron& p) {
    auto chain = fm::projection_chain(detail::polyhedron_rows(p), p.dim);
    std::vector<std::vector<Int>> pts;
    detail::enumerate_chain(chain, p.dim, [&](const std::vector<Int>& x) { pts.push_back(x); });
    return pts;
}

inline Int lattice_point_count(const RationalPolyhedron& p) {
    auto chain = fm::projection_chain(detail::polyhedron_rows(p), p.dim);
    Int n = 0;
    detail::enumerate_chain(chain, p.dim, [&](const std::vector<Int>&) { ++n; });
    return n;
}

}  // namespace fanoec
