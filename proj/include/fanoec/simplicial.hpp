#pragma once

#include <array>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>

#include "fanoec/fan.hpp"

namespace fanoec {

// Reduced cohomology ranks of a full subcomplex, indexed by degree p = -1..d-1
// stored at slot p+1. Degrees above d-1 vanish for fan complexes.
using ReducedRanks = std::array<int, 8>;

// Combinatorial model of the fan: vertices are ray indices, faces are the ray
// sets of the cones (closed under subsets, including the empty face).
struct SimplicialModel {
    int n = 0;    // vertex count
    int dim = 0;  // fan dimension, faces have at most dim vertices
    std::vector<std::uint32_t> faces;  // sorted bitmasks, includes 0
    std::unordered_set<std::uint32_t> face_set;

    static SimplicialModel from_fan(const Fan& f) {
        if (f.ray_count() > 31) throw std::invalid_argument("too many rays for bitmask representation");
        SimplicialModel m;
        m.n = static_cast<int>(f.ray_count());
        m.dim = f.dim;
        for (const auto& cone : f.max_cones) {
            std::uint32_t full = 0;
            for (int i : cone) full |= (1u << i);
            // all subsets of the cone
            std::uint32_t sub = full;
            for (;;) {
                m.face_set.insert(sub);
                if (sub == 0) break;
                sub = (sub - 1) & full;
            }
        }
        m.faces.assign(m.face_set.begin(), m.face_set.end());
        std::sort(m.faces.begin(), m.faces.end());
        return m;
    }

    bool has_face(std::uint32_t mask) const { return face_set.count(mask) != 0; }
};

namespace detail {

constexpr std::int64_t kRankPrime = 2147483647;  // 2^31 - 1

// Rank over GF(p); a fast filter. Always a lower bound for the rational rank.
inline int rank_mod_p(std::vector<std::vector<std::int64_t>> m) {
    const std::int64_t p = kRankPrime;
    int rank = 0;
    std::size_t rows = m.size();
    if (rows == 0) return 0;
    std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] % p == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        // normalize pivot to 1
        std::int64_t inv = 1, base = ((m[r][c] % p) + p) % p, e = p - 2;
        while (e) {
            if (e & 1) inv = static_cast<std::int64_t>((__int128)inv * base % p);
            base = static_cast<std::int64_t>((__int128)base * base % p);
            e >>= 1;
        }
        for (std::size_t j = c; j < cols; ++j)
            m[r][j] = static_cast<std::int64_t>((__int128)(((m[r][j] % p) + p) % p) * inv % p);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            std::int64_t f = ((m[i][c] % p) + p) % p;
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j) {
                std::int64_t v = m[i][j] % p - static_cast<std::int64_t>((__int128)f * m[r][j] % p);
                m[i][j] = ((v % p) + p) % p;
            }
        }
        ++r;
        ++rank;
    }
    return rank;
}

// Exact rational rank by integer elimination with minimal-pivot selection and
// gcd row reduction. Entries here are coboundary signs, so growth stays tame.
inline int rank_exact(std::vector<std::vector<Int>> m) {
    std::size_t rows = m.size();
    if (rows == 0) return 0;
    std::size_t cols = m[0].size();
    int rank = 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            if (piv == rows || abs(m[i][c]) < abs(m[piv][c])) piv = i;
        }
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Int a = m[r][c], b = m[i][c];
            Int g;
            mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            Int fa = b / g, fb = a / g;
            Int row_gcd = 0;
            for (std::size_t j = c; j < cols; ++j) {
                m[i][j] = fb * m[i][j] - fa * m[r][j];
                mpz_gcd(row_gcd.get_mpz_t(), row_gcd.get_mpz_t(), m[i][j].get_mpz_t());
            }
            if (row_gcd > 1)
                for (std::size_t j = c; j < cols; ++j) m[i][j] /= row_gcd;
        }
        ++r;
        ++rank;
    }
    return rank;
}

}  // namespace detail

// Reduced simplicial cohomology ranks (rational coefficients) of the full
// subcomplex on the vertex set `mask`. Faces survive iff all their vertices
// lie in the mask.
inline ReducedRanks reduced_cohomology_ranks(const SimplicialModel& model, std::uint32_t mask) {
    ReducedRanks out{};
    // faces per dimension; dimension of a face = popcount - 1
    std::vector<std::vector<std::uint32_t>> by_dim(model.dim + 1);
    for (std::uint32_t f : model.faces)
        if ((f & mask) == f) by_dim[__builtin_popcount(f)].push_back(f);
    const int vertex_count = static_cast<int>(by_dim.size() > 1 ? by_dim[1].size() : 0);

    if (vertex_count == 0) {
        out[0] = 1;  // empty complex: rank 1 in degree -1
        return out;
    }

    // cone point: subcomplex is contractible, all reduced cohomology vanishes
    for (std::uint32_t v : by_dim[1]) {
        bool cone = true;
        for (std::uint32_t f : model.faces) {
            if ((f & mask) != f) continue;
            if (!model.has_face(f | v)) {
                cone = false;
                break;
            }
        }
        if (cone) return out;
    }

    // coboundary ranks; delta_p maps (p+1)-vertex faces to (p+2)-vertex faces
    std::vector<int> dim_count(model.dim + 2, 0);
    for (int k = 0; k <= model.dim; ++k) dim_count[k] = static_cast<int>(by_dim[k].size());

    std::vector<int> ranks(model.dim + 1, 0);  // ranks[k] = rank of delta from k-vertex to (k+1)-vertex faces
    for (int k = 0; k <= model.dim - 1; ++k) {
        const auto& lo = by_dim[k];
        const auto& hi = by_dim[k + 1];
        if (lo.empty() || hi.empty()) continue;
        std::unordered_map<std::uint32_t, int> lo_index;
        for (std::size_t i = 0; i < lo.size(); ++i) lo_index[lo[i]] = static_cast<int>(i);
        std::vector<std::vector<std::int64_t>> m(hi.size(), std::vector<std::int64_t>(lo.size(), 0));
        for (std::size_t i = 0; i < hi.size(); ++i) {
            std::uint32_t f = hi[i];
            int pos = 0;
            for (int v = 0; v < model.n; ++v) {
                if (!(f & (1u << v))) continue;
                std::uint32_t g = f & ~(1u << v);
                auto it = lo_index.find(g);
                if (it != lo_index.end()) m[i][it->second] = (pos % 2 == 0) ? 1 : -1;
                ++pos;
            }
        }
        int rank = detail::rank_mod_p(m);
        ranks[k] = rank;
    }

    // betti over GF(p) as a screen; exact recompute when anything survives
    auto betti_from = [&](const std::vector<int>& rk) {
        ReducedRanks b{};
        for (int p = -1; p <= model.dim - 1; ++p) {
            int faces_p = dim_count[p + 1];
            int coboundary_out = (p + 1 <= model.dim - 1) ? rk[p + 1] : 0;
            int coboundary_in = (p >= 0) ? rk[p] : 0;
            b[p + 1] = faces_p - coboundary_out - coboundary_in;
        }
        return b;
    };
    ReducedRanks screened = betti_from(ranks);
    bool any = false;
    for (int v : screened)
        if (v != 0) any = true;
    if (!any) return out;

    // exact pass
    std::vector<int> exact_ranks(model.dim + 1, 0);
    for (int k = 0; k <= model.dim - 1; ++k) {
        const auto& lo = by_dim[k];
        const auto& hi = by_dim[k + 1];
        if (lo.empty() || hi.empty()) continue;
        std::unordered_map<std::uint32_t, int> lo_index;
        for (std::size_t i = 0; i < lo.size(); ++i) lo_index[lo[i]] = static_cast<int>(i);
        std::vector<std::vector<Int>> m(hi.size(), std::vector<Int>(lo.size(), Int(0)));
        for (std::size_t i = 0; i < hi.size(); ++i) {
            std::uint32_t f = hi[i];
            int pos = 0;
            for (int v = 0; v < model.n; ++v) {
                if (!(f & (1u << v))) continue;
                std::uint32_t g = f & ~(1u << v);
                auto it = lo_index.find(g);
                if (it != lo_index.end()) m[i][it->second] = (pos % 2 == 0) ? 1 : -1;
                ++pos;
            }
        }
        exact_ranks[k] = detail::rank_exact(std::move(m));
    }
    return betti_from(exact_ranks);
}

}  // namespace fanoec
