// Finite simplicial sets presented by their nondegenerate simplices.
//
// Every simplex of a simplicial set is a degeneracy of a unique nondegenerate
// one (Eilenberg-Zilber), so face data is stored only on nondegenerate
// simplices, as a pair (nondegenerate core, degeneracy word in normal form
// s_{i1}...s_{ik} with i1 > ... > ik).  Arbitrary simplices are represented
// as a monotone surjection applied to a core, and simplicial operators act
// through the standard epi-mono factorization in the simplex category.
//
// Also here: the cosimplicial coordinate algebras O(A^n) = Q[x_1..x_n] in
// interior coordinates (barycentric x_0 eliminated via x_0 = 1 - sum x_i)
// and the algebra maps realizing arbitrary monotone maps of simplices.

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "superpoint/superalg.hpp"

namespace superpoint {

struct SimplexRef {
    int dim = -1;
    int id = -1;
    friend bool operator==(const SimplexRef&, const SimplexRef&) = default;
    friend auto operator<=>(const SimplexRef&, const SimplexRef&) = default;
};

// s_{i1}...s_{ik} with i1 > ... > ik (EZ normal form).
struct DegeneracyWord {
    std::vector<int> indices;
    bool normal() const {
        for (size_t k = 0; k + 1 < indices.size(); ++k)
            if (indices[k] <= indices[k + 1]) return false;
        return true;
    }
    friend bool operator==(const DegeneracyWord&, const DegeneracyWord&) = default;
};

struct Face {
    SimplexRef ref;
    DegeneracyWord degen;
    friend bool operator==(const Face&, const Face&) = default;
};

// A monotone map [p] -> [q] as its value vector (size p+1, nondecreasing).
using MonotoneMap = std::vector<int>;

inline MonotoneMap coface_map(int i, int n) {  // delta_i: [n-1] -> [n]
    MonotoneMap phi;
    for (int j = 0; j <= n; ++j)
        if (j != i) phi.push_back(j);
    return phi;
}

inline MonotoneMap codegeneracy_map(int i, int n) {  // sigma_i: [n+1] -> [n]
    MonotoneMap phi;
    for (int j = 0; j <= n + 1; ++j) phi.push_back(j <= i ? j : j - 1);
    return phi;
}

inline MonotoneMap compose_monotone(const MonotoneMap& outer, const MonotoneMap& inner) {
    MonotoneMap r;
    r.reserve(inner.size());
    for (int v : inner) r.push_back(outer.at(size_t(v)));
    return r;
}

inline bool is_surjective_onto(const MonotoneMap& phi, int q) {
    std::vector<bool> hit(size_t(q) + 1, false);
    for (int v : phi) {
        if (v < 0 || v > q) return false;
        hit[size_t(v)] = true;
    }
    for (bool h : hit)
        if (!h) return false;
    return true;
}

// A possibly degenerate m-simplex: a monotone surjection [m] ->> [dim core]
// applied to a nondegenerate core.
struct Element {
    MonotoneMap surj;  // size m+1, surjective onto [0..ref.dim]
    SimplexRef ref;
    int dim() const { return int(surj.size()) - 1; }
    bool degenerate() const { return dim() != ref.dim; }
    friend bool operator==(const Element&, const Element&) = default;
};

inline MonotoneMap word_to_surjection(const DegeneracyWord& w, int core_dim) {
    MonotoneMap f(size_t(core_dim) + 1);
    std::iota(f.begin(), f.end(), 0);
    for (auto it = w.indices.rbegin(); it != w.indices.rend(); ++it)
        f = compose_monotone(f, codegeneracy_map(*it, int(f.size()) - 1));
    return f;
}

inline DegeneracyWord surjection_to_word(const MonotoneMap& f) {
    DegeneracyWord w;
    for (int i = int(f.size()) - 2; i >= 0; --i)
        if (f[size_t(i)] == f[size_t(i) + 1]) w.indices.push_back(i);
    return w;
}

class SimplicialSet {
public:
    SimplicialSet() = default;

    int top_dim() const { return int(names_.size()) - 1; }
    int count(int dim) const {
        return (dim >= 0 && dim <= top_dim()) ? int(names_[size_t(dim)].size()) : 0;
    }
    int total_cells() const {
        int n = 0;
        for (int d = 0; d <= top_dim(); ++d) n += count(d);
        return n;
    }
    const std::string& name(SimplexRef r) const { return names_[size_t(r.dim)][size_t(r.id)]; }
    std::optional<SimplexRef> find(int dim, const std::string& nm) const {
        if (dim < 0 || dim > top_dim()) return std::nullopt;
        for (int i = 0; i < count(dim); ++i)
            if (names_[size_t(dim)][size_t(i)] == nm) return SimplexRef{dim, i};
        return std::nullopt;
    }

    SimplexRef add_simplex(int dim, std::string name, std::vector<Face> faces = {}) {
        if (dim < 0) throw std::invalid_argument("add_simplex: negative dimension");
        if (int(names_.size()) <= dim) {
            names_.resize(size_t(dim) + 1);
            faces_.resize(size_t(dim) + 1);
        }
        if (dim == 0 && !faces.empty())
            throw std::invalid_argument("add_simplex: vertices have no faces");
        if (dim > 0 && int(faces.size()) != dim + 1)
            throw std::invalid_argument("add_simplex: need dim+1 faces");
        names_[size_t(dim)].push_back(std::move(name));
        faces_[size_t(dim)].push_back(std::move(faces));
        return SimplexRef{dim, int(names_[size_t(dim)].size()) - 1};
    }

    const Face& stored_face(SimplexRef r, int i) const {
        return faces_[size_t(r.dim)][size_t(r.id)][size_t(i)];
    }

    friend bool operator==(const SimplicialSet& a, const SimplicialSet& b) {
        return a.names_ == b.names_ && a.faces_ == b.faces_;
    }

    Element nondegenerate_element(SimplexRef r) const {
        MonotoneMap id(size_t(r.dim) + 1);
        std::iota(id.begin(), id.end(), 0);
        return Element{std::move(id), r};
    }

    Element face_element(SimplexRef r, int i) const {
        const Face& f = stored_face(r, i);
        return Element{word_to_surjection(f.degen, f.ref.dim), f.ref};
    }

    // phi^*(elem) for an arbitrary monotone phi: [p] -> [elem.dim], computed
    // through the epi-mono factorization: peel off missed values as stored
    // faces, then carry the surjective part along.
    Element apply_monotone(const Element& elem, const MonotoneMap& phi) const {
        MonotoneMap gamma = compose_monotone(elem.surj, phi);
        int d = elem.ref.dim;
        if (is_surjective_onto(gamma, d)) return Element{std::move(gamma), elem.ref};
        std::vector<bool> hit(size_t(d) + 1, false);
        for (int v : gamma) hit[size_t(v)] = true;
        int j = d;
        while (hit[size_t(j)]) --j;
        MonotoneMap reduced;
        reduced.reserve(gamma.size());
        for (int v : gamma) reduced.push_back(v > j ? v - 1 : v);
        return apply_monotone(face_element(elem.ref, j), reduced);
    }

    Element face_of(const Element& elem, int i) const {
        return apply_monotone(elem, coface_map(i, elem.dim()));
    }

    // Structural consistency plus the simplicial identities d_i d_j =
    // d_{j-1} d_i (i < j) on the normalized face data; the mixed identities
    // hold by construction of the degeneracy-word arithmetic.
    Report validate() const {
        Report rep;
        for (int n = 1; n <= top_dim(); ++n) {
            for (int id = 0; id < count(n); ++id) {
                SimplexRef r{n, id};
                for (int i = 0; i <= n; ++i) {
                    const Face& f = stored_face(r, i);
                    if (f.ref.dim < 0 || f.ref.dim >= n || f.ref.id < 0 ||
                        f.ref.id >= count(f.ref.dim)) {
                        rep.fail("simplex " + name(r) + ": face " + std::to_string(i) +
                                 " has a dangling reference");
                        continue;
                    }
                    if (!f.degen.normal())
                        rep.fail("simplex " + name(r) + ": face " + std::to_string(i) +
                                 " degeneracy word not in normal form");
                    if (f.ref.dim + int(f.degen.indices.size()) != n - 1)
                        rep.fail("simplex " + name(r) + ": face " + std::to_string(i) +
                                 " dimension mismatch");
                }
            }
        }
        if (!rep.ok) return rep;  // face arithmetic needs sane structure
        for (int n = 2; n <= top_dim(); ++n) {
            for (int id = 0; id < count(n); ++id) {
                SimplexRef r{n, id};
                for (int j = 1; j <= n; ++j) {
                    Element dj = face_element(r, j);
                    for (int i = 0; i < j; ++i) {
                        Element lhs = face_of(dj, i);
                        Element rhs = face_of(face_element(r, i), j - 1);
                        if (!(lhs == rhs))
                            rep.fail("simplex " + name(r) + ": d_" + std::to_string(i) + " d_" +
                                     std::to_string(j) + " != d_" + std::to_string(j - 1) +
                                     " d_" + std::to_string(i));
                    }
                }
            }
        }
        return rep;
    }

    // Number of path components of the 1-skeleton.
    int pi0() const {
        int nv = count(0);
        std::vector<int> parent(size_t(nv), 0);
        std::iota(parent.begin(), parent.end(), 0);
        auto find_root = [&](int a) {
            while (parent[size_t(a)] != a) a = parent[size_t(a)] = parent[size_t(parent[size_t(a)])];
            return a;
        };
        for (int id = 0; id < count(1); ++id) {
            int a = find_root(stored_face({1, id}, 0).ref.id);
            int b = find_root(stored_face({1, id}, 1).ref.id);
            if (a != b) parent[size_t(a)] = b;
        }
        int components = 0;
        for (int i = 0; i < nv; ++i)
            if (find_root(i) == i) ++components;
        return components;
    }

private:
    std::vector<std::vector<std::string>> names_;            // [dim][id]
    std::vector<std::vector<std::vector<Face>>> faces_;      // [dim][id][face index]
};

using SpacePtr = std::shared_ptr<const SimplicialSet>;

inline bool same_space(const SpacePtr& a, const SpacePtr& b) {
    return a == b || (a && b && *a == *b);
}

// ---------------------------------------------------------------------------
// Standard examples
// ---------------------------------------------------------------------------

namespace detail {

inline std::string subset_name(const std::vector<int>& verts) {
    std::string s;
    for (int v : verts) s += std::to_string(v);
    return s;
}

inline void subsets_of_size(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (int(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v <= n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

}  // namespace detail

// The standard n-simplex; nondegenerate k-simplices are the (k+1)-subsets of
// {0..n}, named by their vertex strings.
inline SimplicialSet standard_simplex(int n) {
    if (n < 0 || n > 4) throw std::invalid_argument("standard_simplex: need 0 <= n <= 4");
    SimplicialSet X;
    std::map<std::vector<int>, SimplexRef> by_verts;
    for (int k = 0; k <= n; ++k) {
        std::vector<std::vector<int>> subs;
        detail::subsets_of_size(n, k + 1, subs);
        for (const auto& s : subs) {
            std::vector<Face> faces;
            if (k > 0) {
                for (int i = 0; i <= k; ++i) {
                    std::vector<int> sub = s;
                    sub.erase(sub.begin() + i);
                    faces.push_back(Face{by_verts.at(sub), {}});
                }
            }
            by_verts[s] = X.add_simplex(k, detail::subset_name(s), std::move(faces));
        }
    }
    return X;
}

inline SimplicialSet boundary_simplex(int n) {
    if (n < 1 || n > 4) throw std::invalid_argument("boundary_simplex: need 1 <= n <= 4");
    SimplicialSet X;
    std::map<std::vector<int>, SimplexRef> by_verts;
    for (int k = 0; k < n; ++k) {
        std::vector<std::vector<int>> subs;
        detail::subsets_of_size(n, k + 1, subs);
        for (const auto& s : subs) {
            std::vector<Face> faces;
            if (k > 0) {
                for (int i = 0; i <= k; ++i) {
                    std::vector<int> sub = s;
                    sub.erase(sub.begin() + i);
                    faces.push_back(Face{by_verts.at(sub), {}});
                }
            }
            by_verts[s] = X.add_simplex(k, detail::subset_name(s), std::move(faces));
        }
    }
    return X;
}

// S^n = Delta^n / boundary: one vertex and one nondegenerate n-cell whose
// faces are the maximal degeneracy of the vertex.
inline SimplicialSet sphere(int n) {
    if (n < 1 || n > 4) throw std::invalid_argument("sphere: need 1 <= n <= 4");
    SimplicialSet X;
    SimplexRef v = X.add_simplex(0, "v");
    DegeneracyWord w;
    for (int i = n - 2; i >= 0; --i) w.indices.push_back(i);
    std::vector<Face> faces(size_t(n) + 1, Face{v, w});
    X.add_simplex(n, "c", std::move(faces));
    return X;
}

// Minimal simplicial-set torus: one vertex, three edges a, b, c, two
// triangles glued as in the usual square-with-diagonal picture.
inline SimplicialSet torus() {
    SimplicialSet X;
    SimplexRef v = X.add_simplex(0, "v");
    SimplexRef a = X.add_simplex(1, "a", {Face{v, {}}, Face{v, {}}});
    SimplexRef b = X.add_simplex(1, "b", {Face{v, {}}, Face{v, {}}});
    SimplexRef c = X.add_simplex(1, "c", {Face{v, {}}, Face{v, {}}});
    X.add_simplex(2, "L", {Face{b, {}}, Face{c, {}}, Face{a, {}}});
    X.add_simplex(2, "U", {Face{a, {}}, Face{c, {}}, Face{b, {}}});
    return X;
}

// Named dispatch used by the CLI and tests: "delta2", "boundary-delta3",
// "s1", "s2", "torus", "point".
inline SimplicialSet standard_space(const std::string& name) {
    if (name == "point" || name == "delta0") return standard_simplex(0);
    if (name.rfind("delta", 0) == 0) return standard_simplex(std::stoi(name.substr(5)));
    if (name.rfind("boundary-delta", 0) == 0)
        return boundary_simplex(std::stoi(name.substr(14)));
    if (name == "s1" || name == "circle") return sphere(1);
    if (name.size() == 2 && name[0] == 's' && isdigit(name[1]))
        return sphere(std::stoi(name.substr(1)));
    if (name == "torus") return torus();
    throw std::invalid_argument("unknown standard space: " + name);
}

// ---------------------------------------------------------------------------
// Simplicial maps
// ---------------------------------------------------------------------------

struct SimplicialMap {
    SpacePtr from;
    SpacePtr to;
    std::vector<std::vector<Element>> images;  // [dim][id] -> element of `to`

    const Element& image(SimplexRef r) const { return images[size_t(r.dim)][size_t(r.id)]; }

    Element map_element(const Element& e) const {
        return to->apply_monotone(image(e.ref), e.surj);
    }

    Report check_simplicial() const {
        Report rep;
        for (int n = 1; n <= from->top_dim(); ++n) {
            for (int id = 0; id < from->count(n); ++id) {
                SimplexRef r{n, id};
                for (int i = 0; i <= n; ++i) {
                    Element lhs = map_element(from->face_element(r, i));
                    Element rhs = to->face_of(image(r), i);
                    if (!(lhs == rhs))
                        rep.fail("map not simplicial at " + from->name(r) + ", face " +
                                 std::to_string(i));
                }
            }
        }
        return rep;
    }
};

// ---------------------------------------------------------------------------
// Prisms X x Delta^1
// ---------------------------------------------------------------------------

// Where a cell of the prism came from: a level copy (sigma, t) of a cell of X
// (t = number of 0-values of the Delta^1 coordinate, 0 <= t <= m+1), or the
// k-th shuffle prism over a cell of X (0 <= k <= dim sigma).
struct PrismCellOrigin {
    bool is_prism = false;
    SimplexRef base;
    int param = 0;  // t for levels, k for prisms
};

struct PrismResult {
    SpacePtr space;
    SimplicialMap f0, f1;        // the two ends X -> X x Delta^1 (t=0 resp. t=1)
    SimplicialMap projection;    // X x Delta^1 -> X
    std::vector<std::vector<PrismCellOrigin>> origin;  // [dim][id]
};

namespace detail {

// Delta^1 coordinate of a level: value vector of b_t: [m] -> [1], i |-> (i<t ? 0 : 1).
inline std::vector<int> interval_values(int m, int t) {
    std::vector<int> b(size_t(m) + 1);
    for (int i = 0; i <= m; ++i) b[size_t(i)] = (i < t) ? 0 : 1;
    return b;
}

struct PairKey {
    bool is_prism;
    SimplexRef base;
    int param;
    friend auto operator<=>(const PairKey&, const PairKey&) = default;
};

// EZ normal form of the pair (xe, b): strip common degeneracies (largest
// first, which directly yields the normal word), then identify the
// nondegenerate pair as a level or a prism cell.
inline std::pair<DegeneracyWord, PairKey> normalize_pair(const SimplicialSet& X, Element xe,
                                                         std::vector<int> b) {
    DegeneracyWord w;
    for (;;) {
        int pos = -1;
        for (int i = int(b.size()) - 2; i >= 0; --i) {
            if (xe.surj[size_t(i)] == xe.surj[size_t(i) + 1] && b[size_t(i)] == b[size_t(i) + 1]) {
                pos = i;
                break;
            }
        }
        if (pos < 0) break;
        w.indices.push_back(pos);
        xe.surj.erase(xe.surj.begin() + pos + 1);
        b.erase(b.begin() + pos + 1);
    }
    int degen_pos = -1, degen_count = 0;
    for (size_t i = 0; i + 1 < xe.surj.size(); ++i) {
        if (xe.surj[i] == xe.surj[i + 1]) {
            degen_pos = int(i);
            ++degen_count;
        }
    }
    int t = 0;
    for (int v : b)
        if (v == 0) ++t;
    if (degen_count == 0) return {w, PairKey{false, xe.ref, t}};
    if (degen_count != 1 || b[size_t(degen_pos)] == b[size_t(degen_pos) + 1])
        throw std::logic_error("normalize_pair: impossible residual degeneracy");
    return {w, PairKey{true, xe.ref, degen_pos}};
}

}  // namespace detail

// The product X x Delta^1 in its standard shuffle presentation, together
// with the end inclusions (induced by the coface maps of Delta^1) and the
// projection back to X.
inline PrismResult prism(const SpacePtr& X) {
    using detail::PairKey;
    auto P = std::make_shared<SimplicialSet>();
    std::map<PairKey, SimplexRef> cell_of;
    std::vector<std::vector<PrismCellOrigin>> origin;

    auto reserve_dim = [&](int m) {
        if (int(origin.size()) <= m) origin.resize(size_t(m) + 1);
    };

    int top = X->top_dim();
    for (int m = 0; m <= top + 1; ++m) {
        reserve_dim(m);
        // level cells (sigma in X_m, t in 0..m+1)
        for (int id = 0; id < X->count(m); ++id) {
            SimplexRef sigma{m, id};
            for (int t = 0; t <= m + 1; ++t) {
                std::vector<Face> faces;
                for (int i = 0; m > 0 && i <= m; ++i) {
                    Element xe = X->face_element(sigma, i);
                    std::vector<int> b = detail::interval_values(m, t);
                    b.erase(b.begin() + i);
                    auto [w, key] = detail::normalize_pair(*X, xe, b);
                    faces.push_back(Face{cell_of.at(key), w});
                }
                SimplexRef r = P->add_simplex(
                    m, X->name(sigma) + "@" + std::to_string(t), std::move(faces));
                cell_of[PairKey{false, sigma, t}] = r;
                origin[size_t(m)].push_back(PrismCellOrigin{false, sigma, t});
            }
        }
        // prism cells (sigma in X_{m-1}, k in 0..m-1): the pair (s_k sigma, b_{k+1})
        for (int id = 0; m >= 1 && id < X->count(m - 1); ++id) {
            SimplexRef sigma{m - 1, id};
            Element s_k_sigma;
            std::vector<Face> faces;
            for (int k = 0; k <= m - 1; ++k) {
                MonotoneMap sk = codegeneracy_map(k, m - 1);
                Element xe{sk, sigma};
                faces.clear();
                for (int i = 0; i <= m; ++i) {
                    Element xf = X->apply_monotone(xe, coface_map(i, m));
                    std::vector<int> b = detail::interval_values(m, k + 1);
                    b.erase(b.begin() + i);
                    auto [w, key] = detail::normalize_pair(*X, xf, b);
                    faces.push_back(Face{cell_of.at(key), w});
                }
                SimplexRef r = P->add_simplex(
                    m, X->name(sigma) + "#" + std::to_string(k), std::move(faces));
                cell_of[PairKey{true, sigma, k}] = r;
                origin[size_t(m)].push_back(PrismCellOrigin{true, sigma, k});
            }
        }
    }

    PrismResult out;
    out.space = P;
    out.origin = std::move(origin);

    auto make_end = [&](int which) {
        SimplicialMap f;
        f.from = X;
        f.to = P;
        f.images.resize(size_t(top) + 1);
        for (int m = 0; m <= top; ++m) {
            for (int id = 0; id < X->count(m); ++id) {
                // t = m+1 is the all-zeros interval coordinate (the 0 end).
                int t = (which == 0) ? m + 1 : 0;
                SimplexRef cell = cell_of.at(PairKey{false, SimplexRef{m, id}, t});
                f.images[size_t(m)].push_back(P->nondegenerate_element(cell));
            }
        }
        return f;
    };
    out.f0 = make_end(0);
    out.f1 = make_end(1);

    SimplicialMap pr;
    pr.from = P;
    pr.to = X;
    pr.images.resize(size_t(P->top_dim()) + 1);
    for (int m = 0; m <= P->top_dim(); ++m) {
        for (int id = 0; id < P->count(m); ++id) {
            const PrismCellOrigin& o = out.origin[size_t(m)][size_t(id)];
            if (!o.is_prism) {
                pr.images[size_t(m)].push_back(X->nondegenerate_element(o.base));
            } else {
                pr.images[size_t(m)].push_back(
                    Element{codegeneracy_map(o.param, m - 1), o.base});
            }
        }
    }
    out.projection = std::move(pr);
    return out;
}

// ---------------------------------------------------------------------------
// Cosimplicial coordinate algebras
// ---------------------------------------------------------------------------

// O(A^n) = Q[x_1..x_n] in interior coordinates.
inline TablePtr coord_table(int n) {
    std::vector<std::string> evens;
    for (int i = 1; i <= n; ++i) evens.push_back("x" + std::to_string(i));
    return make_table(std::move(evens), {});
}

// The affine image of the i-th interior coordinate of Delta^n under
// phi: [m] -> [n], in the coordinates of Delta^m (barycentric y_i pulled back
// to the sum of y_j over phi^{-1}(i), with y_0 = 1 - sum eliminated).
template <class C>
SuperPolynomial<C> barycentric_image(const TablePtr& target, const MonotoneMap& phi, int i) {
    using Poly = SuperPolynomial<C>;
    int m = int(phi.size()) - 1;
    Poly img = Poly::zero(target);
    bool hits_zero = false;
    for (int j = 0; j <= m; ++j) {
        if (phi[size_t(j)] != i) continue;
        if (j == 0) {
            hits_zero = true;
        } else {
            img += Poly::even_variable(target, size_t(j) - 1);
        }
    }
    if (hits_zero) {
        Poly x0 = Poly::one(target);
        for (int j = 1; j <= m; ++j) x0 -= Poly::even_variable(target, size_t(j) - 1);
        img += x0;
    }
    return img;
}

// O(A^n) -> O(A^m) realizing phi: [m] -> [n].
template <class C = Rational>
AlgebraMap<C> realize_coords(const MonotoneMap& phi, int n) {
    AlgebraMap<C> f;
    f.source = coord_table(n);
    int m = int(phi.size()) - 1;
    f.target = coord_table(m);
    for (int i = 1; i <= n; ++i)
        f.even_images.push_back(barycentric_image<C>(f.target, phi, i));
    return f;
}

enum class CosimplicialKind { coface, codegeneracy };

// The coface delta_i (its realization O(A^n) -> O(A^{n-1}) sets barycentric
// coordinate i to zero and reindexes) or the codegeneracy sigma_i
// (O(A^n) -> O(A^{n+1}), barycentric x_i |-> x_i + x_{i+1}).
struct CosimplicialMap {
    CosimplicialKind kind;
    int index = 0;
    int source_dim = 0;  // n: the map acts on O(A^n)
    int target_dim = 0;
    AlgebraMap<Rational> map;
};

inline CosimplicialMap realization_map(CosimplicialKind kind, int i, int n) {
    CosimplicialMap cm;
    cm.kind = kind;
    cm.index = i;
    cm.source_dim = n;
    if (kind == CosimplicialKind::coface) {
        if (i < 0 || i > n) throw std::invalid_argument("realization_map: coface index");
        cm.target_dim = n - 1;
        cm.map = realize_coords<Rational>(coface_map(i, n), n);
    } else {
        if (i < 0 || i > n) throw std::invalid_argument("realization_map: codegeneracy index");
        cm.target_dim = n + 1;
        cm.map = realize_coords<Rational>(codegeneracy_map(i, n), n);
    }
    return cm;
}

// Functoriality of the realization on all generator pairs up to dimension
// n_max: realize(phi) . realize(psi) == realize(psi . phi) as algebra maps.
// Every cosimplicial identity is an instance.
inline Report validate_realization(int n_max) {
    if (n_max > 5) throw std::invalid_argument("validate_realization: n_max <= 5");
    Report rep;
    struct Gen {
        MonotoneMap phi;
        int src, dst;  // phi: [src] -> [dst]
        std::string label;
    };
    std::vector<Gen> gens;
    for (int n = 0; n <= n_max; ++n) {
        for (int i = 0; i <= n; ++i) {
            if (n >= 1)
                gens.push_back({coface_map(i, n), n - 1, n,
                                "d_" + std::to_string(i) + "^" + std::to_string(n)});
            if (n + 1 <= n_max)
                gens.push_back({codegeneracy_map(i, n), n + 1, n,
                                "s_" + std::to_string(i) + "^" + std::to_string(n)});
        }
    }
    for (const Gen& phi : gens) {
        for (const Gen& psi : gens) {
            if (psi.src != phi.dst) continue;  // need psi . phi defined: phi:[a]->[b], psi:[b]->[c]
            MonotoneMap chi = compose_monotone(psi.phi, phi.phi);
            auto lhs = compose(realize_coords<Rational>(phi.phi, phi.dst),
                               realize_coords<Rational>(psi.phi, psi.dst));
            auto rhs = realize_coords<Rational>(chi, psi.dst);
            if (!algebra_maps_equal(lhs, rhs))
                rep.fail("realization not functorial on " + psi.label + " . " + phi.label);
        }
    }
    return rep;
}

}  // namespace superpoint
