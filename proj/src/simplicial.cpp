#include "permres/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace permres {

using Mask = SimplicialComplex::Mask;

namespace {

bool size_then_value(Mask a, Mask b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
}

Mask full_mask(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

std::vector<int> to_list(Mask m) {
    std::vector<int> out;
    for (int v = 0; m; ++v, m >>= 1) {
        if (m & 1) out.push_back(v);
    }
    return out;
}

}  // namespace

SimplicialComplex::SimplicialComplex(int num_vertices, std::vector<Mask> non_faces) : num_vertices_(num_vertices) {
    if (num_vertices < 0 || num_vertices > 64) throw std::invalid_argument("complex needs 0..64 vertices");
    const Mask all = full_mask(num_vertices);
    std::sort(non_faces.begin(), non_faces.end(), size_then_value);
    non_faces.erase(std::unique(non_faces.begin(), non_faces.end()), non_faces.end());
    for (Mask m : non_faces) {
        if (m == 0) throw std::invalid_argument("the empty set cannot be a non-face");
        if (m & ~all) throw std::invalid_argument("non-face uses a vertex out of range");
        // Sorted by size, so any non-face contained in m has been kept already.
        const bool redundant = std::any_of(non_faces_.begin(), non_faces_.end(), [m](Mask k) { return (k & m) == k; });
        if (!redundant) non_faces_.push_back(m);
    }
}

SimplicialComplex SimplicialComplex::from_facets(int num_vertices, const std::vector<Mask>& facets) {
    // A minimal non-face is a set outside every facet all of whose
    // codimension-one subsets are faces; search by increasing size.
    auto in_complex = [&](Mask m) {
        return std::any_of(facets.begin(), facets.end(), [m](Mask f) { return (m & f) == m; });
    };
    std::vector<Mask> non_faces;
    for (int v = 0; v < num_vertices; ++v) {
        if (!in_complex(Mask{1} << v)) non_faces.push_back(Mask{1} << v);
    }
    // Grow faces one vertex at a time; a non-face whose proper subsets are all
    // faces is minimal.
    std::vector<Mask> layer;
    for (int v = 0; v < num_vertices; ++v) {
        if (in_complex(Mask{1} << v)) layer.push_back(Mask{1} << v);
    }
    while (!layer.empty()) {
        std::vector<Mask> next;
        for (Mask f : layer) {
            const int top = 63 - std::countl_zero(f);
            for (int v = top + 1; v < num_vertices; ++v) {
                const Mask g = f | (Mask{1} << v);
                if (in_complex(g)) {
                    next.push_back(g);
                    continue;
                }
                bool minimal = true;
                for (Mask rest = g; rest && minimal; rest &= rest - 1) {
                    const Mask sub = g & ~(rest & -rest);
                    if (!in_complex(sub)) minimal = false;
                }
                if (minimal) non_faces.push_back(g);
            }
        }
        layer = std::move(next);
    }
    return SimplicialComplex(num_vertices, std::move(non_faces));
}

bool SimplicialComplex::is_face(Mask face) const {
    if (face & ~full_mask(num_vertices_)) return false;
    return std::none_of(non_faces_.begin(), non_faces_.end(), [face](Mask k) { return (k & face) == k; });
}

std::vector<Mask> SimplicialComplex::facets() const {
    std::vector<Mask> out;
    if (!is_face(0)) return out;
    std::vector<Mask> stack{0};
    while (!stack.empty()) {
        const Mask f = stack.back();
        stack.pop_back();
        bool maximal = true;
        for (int v = 0; v < num_vertices_; ++v) {
            const Mask bit = Mask{1} << v;
            if ((f & bit) || !is_face(f | bit)) continue;
            maximal = false;
            // Extend only past the top vertex to visit each face once.
            if (f == 0 || v > 63 - std::countl_zero(f)) stack.push_back(f | bit);
        }
        if (maximal) out.push_back(f);
    }
    std::sort(out.begin(), out.end(), size_then_value);
    return out;
}

std::vector<BigInt> count_faces(const SimplicialComplex& delta, int max_dim, std::uint64_t node_cap) {
    const int n = delta.num_vertices();
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(std::max(max_dim + 2, 1)), 0);
    counts[0] = 1;
    // Non-faces bucketed by their largest vertex: when v is added on top of a
    // face, only those can newly appear.
    std::vector<std::vector<Mask>> by_top(static_cast<std::size_t>(n));
    for (Mask m : delta.minimal_non_faces()) by_top[static_cast<std::size_t>(63 - std::countl_zero(m))].push_back(m);

    std::uint64_t visited = 0;
    auto dfs = [&](auto&& self, Mask face, int size, int next) -> void {
        if (size - 1 >= max_dim) return;
        for (int v = next; v < n; ++v) {
            if (++visited > node_cap) throw FaceCountCapError("face enumeration exceeded the node cap");
            const Mask g = face | (Mask{1} << v);
            const auto& bucket = by_top[static_cast<std::size_t>(v)];
            if (std::any_of(bucket.begin(), bucket.end(), [g](Mask k) { return (k & g) == k; })) continue;
            ++counts[static_cast<std::size_t>(size + 1)];
            self(self, g, size + 1, v + 1);
        }
    };
    if (max_dim >= 0) dfs(dfs, 0, 0, 0);
    return {counts.begin(), counts.end()};
}

std::vector<BigInt> f_vector(const SimplicialComplex& delta) {
    auto f = count_faces(delta, delta.num_vertices() - 1);
    while (f.size() > 1 && f.back() == 0) f.pop_back();
    return f;
}

std::vector<BigInt> h_vector(const SimplicialComplex& delta) {
    const auto f = f_vector(delta);
    const int d = static_cast<int>(f.size()) - 1;
    std::vector<BigInt> h(f.size(), 0);
    for (int k = 0; k <= d; ++k) {
        for (int i = 0; i <= k; ++i) {
            BigInt term = binomial(d - i, k - i) * f[static_cast<std::size_t>(i)];
            if ((k - i) % 2) term = -term;
            h[static_cast<std::size_t>(k)] += term;
        }
    }
    return h;
}

SimplicialComplex skeleton_complex(int n, int dim) {
    if (n < 0 || n > 64) throw std::invalid_argument("skeleton_complex needs 0 <= n <= 64");
    if (dim < -1 || dim > n - 1) throw std::invalid_argument("skeleton_complex needs -1 <= dim <= n-1");
    std::vector<Mask> non_faces;
    const int k = dim + 2;  // smallest excluded size
    if (k <= n) {
        // All k-subsets, by Gosper's hack.
        Mask m = (Mask{1} << k) - 1;
        const Mask limit = Mask{1} << n;
        while (m < limit) {
            non_faces.push_back(m);
            const Mask c = m & -m;
            const Mask r = m + c;
            m = (((r ^ m) >> 2) / c) | r;
        }
    }
    return SimplicialComplex(n, std::move(non_faces));
}

SimplicialComplex alexander_dual(const SimplicialComplex& delta) {
    // tau is a non-face of the dual iff its complement is a face, so the
    // minimal non-faces are the complements of the facets.
    const Mask all = full_mask(delta.num_vertices());
    std::vector<Mask> non_faces;
    for (Mask f : delta.facets()) {
        if (f == all) throw std::invalid_argument("the dual of the full simplex is the void complex");
        non_faces.push_back(all & ~f);
    }
    return SimplicialComplex(delta.num_vertices(), std::move(non_faces));
}

std::vector<std::vector<int>> stanley_reisner_generators(const SimplicialComplex& delta) {
    std::vector<std::vector<int>> out;
    for (Mask m : delta.minimal_non_faces()) out.push_back(to_list(m));
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

std::vector<std::vector<int>> alexander_dual_ideal(const SimplicialComplex& delta) {
    if (delta.minimal_non_faces().empty()) return {};
    return stanley_reisner_generators(alexander_dual(delta));
}

SimplicialComplex perm2_complex(int n) {
    if (n < 2 || n > 8) throw std::invalid_argument("perm2_complex needs 2 <= n <= 8");
    auto cell = [n](int i, int j) { return Mask{1} << (i * n + j); };
    std::vector<Mask> non_faces;
    for (int i = 0; i < n; ++i) {
        for (int k = i + 1; k < n; ++k) {
            for (int j = 0; j < n; ++j) {
                for (int l = j + 1; l < n; ++l) non_faces.push_back(cell(i, j) | cell(k, l));
            }
        }
    }
    // Two rows/three columns and three rows/two columns, then the anti-diagonal.
    for (int i1 = 0; i1 < n; ++i1) {
        for (int i2 = 0; i2 < i1; ++i2) {
            for (int j1 = 0; j1 < n; ++j1) {
                for (int j2 = j1 + 1; j2 < n; ++j2) {
                    for (int j3 = j2 + 1; j3 < n; ++j3) {
                        non_faces.push_back(cell(i1, j1) | cell(i1, j2) | cell(i2, j3));
                        non_faces.push_back(cell(i1, j1) | cell(i2, j2) | cell(i2, j3));
                    }
                }
            }
        }
    }
    for (int i1 = 0; i1 < n; ++i1) {
        for (int i2 = i1 + 1; i2 < n; ++i2) {
            for (int i3 = i2 + 1; i3 < n; ++i3) {
                for (int j1 = 0; j1 < n; ++j1) {
                    for (int j2 = 0; j2 < j1; ++j2) {
                        non_faces.push_back(cell(i1, j1) | cell(i2, j1) | cell(i3, j2));
                        non_faces.push_back(cell(i1, j1) | cell(i2, j2) | cell(i3, j2));
                        for (int j3 = 0; j3 < j2; ++j3) non_faces.push_back(cell(i1, j1) | cell(i2, j2) | cell(i3, j3));
                    }
                }
            }
        }
    }
    return SimplicialComplex(n * n, std::move(non_faces));
}

}  // namespace permres
