#pragma once

#include <numeric>
#include <set>
#include <string>

#include "fanoec/matrix.hpp"

namespace fanoec {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

struct TorsionClassGroup : std::runtime_error {
    explicit TorsionClassGroup(const std::string& what) : std::runtime_error(what) {}
};

struct NonSmoothWall : std::runtime_error {
    explicit NonSmoothWall(const std::string& what) : std::runtime_error(what) {}
};

// A complete simplicial fan: primitive ray generators plus maximal cones given
// as d-subsets of ray indices (0-based, in file order).
struct Fan {
    int dim = 0;
    std::vector<std::vector<long>> rays;
    std::vector<std::vector<int>> max_cones;

    std::size_t ray_count() const { return rays.size(); }

    IntMatrix ray_matrix() const {  // n x d, rows are the rays
        IntMatrix b(rays.size(), dim);
        for (std::size_t i = 0; i < rays.size(); ++i)
            for (int j = 0; j < dim; ++j) b.at(i, j) = rays[i][j];
        return b;
    }
};

struct VarietyRecord {
    int dim = 0;
    long index = -1;
    Fan fan;
    std::string provenance;
};

// The surjection pi : Z^n -> Cl(X) = Z^{n-d} from the fundamental exact
// sequence, with a deterministic basis chosen from the Smith decomposition of
// the ray matrix.
struct DivisorClassMap {
    std::size_t n = 0;
    std::size_t cl_rank = 0;
    IntMatrix pi;     // cl_rank x n
    IntMatrix u_inv;  // n x n, inverse of the Smith row transform; used for preimages

    std::vector<Int> apply(const std::vector<Int>& divisor) const {
        if (divisor.size() != n) throw std::invalid_argument("class map: divisor length mismatch");
        return pi.apply(divisor);
    }

    // A deterministic integer preimage a with pi(a) = cl.
    std::vector<Int> preimage(const std::vector<Int>& cl) const {
        if (cl.size() != cl_rank) throw std::invalid_argument("class map: class length mismatch");
        std::vector<Int> padded(n, Int(0));
        for (std::size_t i = 0; i < cl_rank; ++i) padded[n - cl_rank + i] = cl[i];
        return u_inv.apply(padded);
    }
};

// A (d-1)-cone shared by two maximal cones; carries the unique linear relation
// u_a + u_b + sum_i coeffs[i] * u_tau[i] = 0 (normalized so the two apex
// coefficients are 1). The coeffs are the intersection numbers of the
// corresponding toric curve with the divisors containing it.
struct Wall {
    std::vector<int> tau;
    int cone_a = -1, cone_b = -1;
    int apex_a = -1, apex_b = -1;
    std::vector<Int> coeffs;
};

namespace detail {

inline std::string vec_to_string(const std::vector<long>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += std::to_string(v[i]) + (i + 1 < v.size() ? "," : "");
    return s + ")";
}

}  // namespace detail

// Structural validation: primitive rays, d-subset cones with independent rays,
// no duplicates, every ray used. Throws ValidationError.
inline void validate_structure(const Fan& f) {
    if (f.dim < 1) throw ValidationError("fan dimension must be positive");
    if (f.rays.empty()) throw ValidationError("fan has no rays");
    std::set<std::vector<long>> seen;
    for (const auto& r : f.rays) {
        if (static_cast<int>(r.size()) != f.dim) throw ValidationError("ray arity mismatch");
        std::vector<Int> ri(r.begin(), r.end());
        Int g = vector_gcd(ri);
        if (g != 1) throw ValidationError("non-primitive ray " + detail::vec_to_string(r));
        if (!seen.insert(r).second) throw ValidationError("duplicate ray " + detail::vec_to_string(r));
    }
    std::vector<bool> used(f.rays.size(), false);
    if (f.max_cones.empty()) throw ValidationError("fan has no maximal cones");
    std::set<std::vector<int>> cone_seen;
    for (const auto& c : f.max_cones) {
        if (static_cast<int>(c.size()) != f.dim) throw ValidationError("maximal cone arity mismatch");
        std::set<int> uniq(c.begin(), c.end());
        if (static_cast<int>(uniq.size()) != f.dim) throw ValidationError("repeated ray index in cone");
        for (int i : c) {
            if (i < 0 || i >= static_cast<int>(f.rays.size())) throw ValidationError("cone ray index out of range");
            used[i] = true;
        }
        std::vector<int> sorted(uniq.begin(), uniq.end());
        if (!cone_seen.insert(sorted).second) throw ValidationError("duplicate maximal cone");
    }
    for (std::size_t i = 0; i < used.size(); ++i)
        if (!used[i]) throw ValidationError("ray " + std::to_string(i) + " appears in no maximal cone");
}

inline Int cone_determinant(const Fan& f, const std::vector<int>& cone) {
    IntMatrix m(f.dim, f.dim);
    for (int i = 0; i < f.dim; ++i)
        for (int j = 0; j < f.dim; ++j) m.at(i, j) = f.rays[cone[i]][j];
    return determinant(m);
}

// Smoothness: every maximal cone spans by a lattice basis. Completeness:
// every facet of a maximal cone is shared by exactly two maximal cones and the
// facet-adjacency graph is connected. Returns nullopt on success, else a
// human-readable violation.
inline std::optional<std::string> validate_smooth_complete(const Fan& f) {
    for (std::size_t c = 0; c < f.max_cones.size(); ++c) {
        Int det = cone_determinant(f, f.max_cones[c]);
        if (det != 1 && det != -1)
            return "cone " + std::to_string(c) + " is not smooth (determinant " + det.get_str() + ")";
    }
    // facet pairing
    std::map<std::vector<int>, std::vector<int>> facet_cones;
    for (std::size_t c = 0; c < f.max_cones.size(); ++c) {
        std::vector<int> cone = f.max_cones[c];
        std::sort(cone.begin(), cone.end());
        for (int skip = 0; skip < f.dim; ++skip) {
            std::vector<int> facet;
            for (int i = 0; i < f.dim; ++i)
                if (i != skip) facet.push_back(cone[i]);
            facet_cones[facet].push_back(static_cast<int>(c));
        }
    }
    for (const auto& [facet, cones] : facet_cones) {
        if (cones.size() != 2) {
            std::string fs;
            for (int i : facet) fs += std::to_string(i) + " ";
            return "facet {" + fs + "} lies in " + std::to_string(cones.size()) + " maximal cone(s), expected 2";
        }
    }
    // connectivity of the facet-adjacency graph
    std::vector<std::vector<int>> adj(f.max_cones.size());
    for (const auto& [facet, cones] : facet_cones) {
        adj[cones[0]].push_back(cones[1]);
        adj[cones[1]].push_back(cones[0]);
    }
    std::vector<bool> vis(f.max_cones.size(), false);
    std::vector<int> stack{0};
    vis[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        int c = stack.back();
        stack.pop_back();
        for (int nb : adj[c])
            if (!vis[nb]) {
                vis[nb] = true;
                ++count;
                stack.push_back(nb);
            }
    }
    if (count != f.max_cones.size()) return "facet-adjacency graph is disconnected";
    return std::nullopt;
}

inline DivisorClassMap class_group(const Fan& f) {
    const std::size_t n = f.ray_count();
    const std::size_t d = static_cast<std::size_t>(f.dim);
    IntMatrix b = f.ray_matrix();  // n x d: the map M -> Z^n
    SmithDecomposition sd = smith_normal_form(b);
    if (sd.rank() != d) throw TorsionClassGroup("ray matrix does not have full rank");
    for (std::size_t i = 0; i < d; ++i)
        if (sd.s.at(i, i) != 1)
            throw TorsionClassGroup("class group has torsion (elementary divisor " + sd.s.at(i, i).get_str() + ")");
    DivisorClassMap cm;
    cm.n = n;
    cm.cl_rank = n - d;
    cm.pi = IntMatrix(cm.cl_rank, n);
    for (std::size_t i = 0; i < cm.cl_rank; ++i)
        for (std::size_t j = 0; j < n; ++j) cm.pi.at(i, j) = sd.u.at(d + i, j);
    cm.u_inv = unimodular_inverse(sd.u);
    return cm;
}

// Bayer-Popescu-Sturmfels unimodularity: the ray matrix has independent
// columns and every maximal minor lies in {0, +1, -1}.
inline bool unimodular(const Fan& f) {
    IntMatrix b = f.ray_matrix();
    const std::size_t n = b.rows(), d = b.cols();
    if (n < d) return false;
    bool full_rank = false;
    std::vector<std::size_t> idx(d);
    for (std::size_t i = 0; i < d; ++i) idx[i] = i;
    for (;;) {
        IntMatrix sub(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) sub.at(i, j) = b.at(idx[i], j);
        Int det = determinant(sub);
        if (det != 0) full_rank = true;
        if (det < -1 || det > 1) return false;
        std::size_t i = d;
        while (i > 0 && idx[i - 1] == n - d + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
    return full_rank;
}

inline std::vector<Wall> walls(const Fan& f) {
    std::vector<Wall> out;
    if (f.dim < 2) return out;
    std::map<std::vector<int>, std::vector<std::pair<int, int>>> facet_sides;  // facet -> (cone idx, apex ray)
    for (std::size_t c = 0; c < f.max_cones.size(); ++c) {
        std::vector<int> cone = f.max_cones[c];
        std::sort(cone.begin(), cone.end());
        for (int skip = 0; skip < f.dim; ++skip) {
            std::vector<int> facet;
            for (int i = 0; i < f.dim; ++i)
                if (i != skip) facet.push_back(cone[i]);
            facet_sides[facet].push_back({static_cast<int>(c), cone[skip]});
        }
    }
    for (const auto& [tau, sides] : facet_sides) {
        if (sides.size() != 2) continue;  // incomplete fans handled by validation
        Wall w;
        w.tau = tau;
        w.cone_a = sides[0].first;
        w.cone_b = sides[1].first;
        w.apex_a = sides[0].second;
        w.apex_b = sides[1].second;
        // solve u_b = x0 * u_a + sum x_i * u_tau[i]; smoothness forces x0 = -1
        IntMatrix basis(f.dim, f.dim);
        for (int r = 0; r < f.dim; ++r) {
            basis.at(r, 0) = f.rays[w.apex_a][r];
            for (int i = 0; i + 1 < f.dim; ++i) basis.at(r, i + 1) = f.rays[tau[i]][r];
        }
        std::vector<Int> rhs(f.dim);
        for (int r = 0; r < f.dim; ++r) rhs[r] = f.rays[w.apex_b][r];
        auto x = solve_rational(basis, rhs);
        if (!x) throw NonSmoothWall("wall relation is singular");
        if ((*x)[0] != Rat(-1)) throw NonSmoothWall("wall relation does not normalize to unit apex coefficients");
        w.coeffs.resize(f.dim - 1);
        for (int i = 0; i + 1 < f.dim; ++i) {
            if (!is_integral((*x)[i + 1])) throw NonSmoothWall("wall relation has non-integer coefficient");
            w.coeffs[i] = -(*x)[i + 1].get_num();
        }
        out.push_back(std::move(w));
    }
    return out;
}

struct BondalCertificate {
    bool holds = true;
    std::vector<std::pair<Wall, bool>> per_wall;  // wall, passes
};

// Bondal's numerical criterion: along every wall the intersection numbers
// satisfy a_i >= -1 with -1 appearing at most once.
inline BondalCertificate bondal_criterion(const Fan& f) {
    BondalCertificate cert;
    for (const Wall& w : walls(f)) {
        int minus_ones = 0;
        bool ok = true;
        for (const Int& a : w.coeffs) {
            if (a < -1) ok = false;
            if (a == -1) ++minus_ones;
        }
        if (minus_ones > 1) ok = false;
        if (!ok) cert.holds = false;
        cert.per_wall.push_back({w, ok});
    }
    return cert;
}

// Ampleness of -K on a smooth complete toric variety: strict positivity of
// (-K).C = 2 + sum a_i across all walls. The point P^1 fan has no walls and is
// Fano.
inline bool fano_check(const Fan& f) {
    if (f.dim == 1) return true;
    for (const Wall& w : walls(f)) {
        Int deg = 2;
        for (const Int& a : w.coeffs) deg += a;
        if (deg <= 0) return false;
    }
    return true;
}

// Face fan of the polytope conv(rays): maximal cones are the hull facets.
// Valid for the Fano situation where the rays are exactly the polytope
// vertices and every facet is a simplex.
inline Fan face_fan_from_vertices(int dim, const std::vector<std::vector<long>>& verts) {
    Fan f;
    f.dim = dim;
    f.rays = verts;
    const std::size_t n = verts.size();
    const std::size_t d = static_cast<std::size_t>(dim);
    if (n < d + 1) throw ValidationError("too few vertices for a full-dimensional polytope");
    std::vector<std::size_t> idx(d);
    for (std::size_t i = 0; i < d; ++i) idx[i] = i;
    std::set<std::vector<int>> facets;
    for (;;) {
        IntMatrix a(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) a.at(i, j) = verts[idx[i]][j];
        std::vector<Int> ones(d, Int(1));
        auto u = solve_rational(a, ones);
        if (u) {
            bool supporting = true, strict = true;
            for (std::size_t v = 0; v < n && supporting; ++v) {
                Rat s(0);
                for (std::size_t j = 0; j < d; ++j) s += (*u)[j] * Rat(Int(verts[v][j]));
                if (s > 1) supporting = false;
                if (s == 1 && std::find(idx.begin(), idx.end(), v) == idx.end()) strict = false;
            }
            if (supporting && !strict)
                throw ValidationError("hull has a non-simplicial facet; not a smooth Fano configuration");
            if (supporting) {
                std::vector<int> facet(idx.begin(), idx.end());
                facets.insert(facet);
            }
        }
        std::size_t i = d;
        while (i > 0 && idx[i - 1] == n - d + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
    std::vector<bool> used(n, false);
    for (const auto& facet : facets) {
        f.max_cones.push_back(facet);
        for (int v : facet) used[v] = true;
    }
    for (std::size_t v = 0; v < n; ++v)
        if (!used[v]) throw ValidationError("vertex " + std::to_string(v) + " is interior to the hull");
    return f;
}

}  // namespace fanoec
