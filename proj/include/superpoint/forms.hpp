// Sullivan polynomial differential forms on a finite simplicial set, and the
// function rings of mapping spaces out of the superpoint.
//
// The ring O(Map(A^{0|1}, A^{n|q})) has even generators x_1..x_n (degree 0)
// and de_1..de_q (degree 1), and odd generators dx_1..dx_n (degree 1) and
// e_1..e_q (degree 0).  Forms on a simplicial set are compatible families of
// values in these rings with q = 0, one value per nondegenerate simplex;
// compatibility along faces is checked, not enforced by construction.

#pragma once

#include <cstdint>
#include <random>

#include "superpoint/linalg.hpp"
#include "superpoint/simplicial.hpp"
#include "superpoint/superalg.hpp"

namespace superpoint {

using QPoly = SuperPolynomial<Rational>;
using QMap = AlgebraMap<Rational>;

struct MappingSpaceRing {
    int n = 0;
    int q = 0;
    TablePtr table;

    size_t x_index(int i) const { return size_t(i); }        // even block\[0, n)
    size_t de_index(int i) const { return size_t(n + i); }   // even block [n, n+q)
    size_t dx_index(int i) const { return size_t(i); }       // odd block [0, n)
    size_t e_index(int i) const { return size_t(n + i); }    // odd block [n, n+q)
};

inline MappingSpaceRing mapping_space_ring(int n, int q) {
    if (n < 0 || q < 0) throw std::invalid_argument("mapping_space_ring: negative rank");
    std::vector<std::string> evens, odds;
    for (int i = 1; i <= n; ++i) evens.push_back("x" + std::to_string(i));
    for (int i = 1; i <= q; ++i) evens.push_back("de" + std::to_string(i));
    for (int i = 1; i <= n; ++i) odds.push_back("dx" + std::to_string(i));
    for (int i = 1; i <= q; ++i) odds.push_back("e" + std::to_string(i));
    return MappingSpaceRing{n, q, make_table(std::move(evens), std::move(odds))};
}

inline TablePtr form_table(int n) { return mapping_space_ring(n, 0).table; }

// Cohomological degree: dx and de contribute one each, x and e contribute
// nothing.
inline uint32_t form_degree(const MappingSpaceRing& ring, const Monomial& m) {
    uint32_t d = 0;
    for (int i = 0; i < ring.q; ++i) d += m.even[ring.de_index(i)];
    for (int i = 0; i < ring.n; ++i) d += uint32_t((m.odd >> ring.dx_index(i)) & 1);
    return d;
}

inline bool degree_homogeneous(const MappingSpaceRing& ring, const QPoly& p, uint32_t k) {
    for (const auto& [m, c] : p.terms())
        if (form_degree(ring, m) != k) return false;
    return true;
}

inline QPoly degree_component(const MappingSpaceRing& ring, const QPoly& p, uint32_t k) {
    QPoly r(p.table());
    for (const auto& [m, c] : p.terms())
        if (form_degree(ring, m) == k) r.add_term(m, c);
    return r;
}

inline uint32_t max_form_degree(const MappingSpaceRing& ring, const QPoly& p) {
    uint32_t d = 0;
    for (const auto& [m, c] : p.terms()) d = std::max(d, form_degree(ring, m));
    return d;
}

// The de Rham differential of the ring: x |-> dx, e |-> de, dx, de |-> 0.
inline OddDerivation<Rational> de_rham(const MappingSpaceRing& ring) {
    OddDerivation<Rational> d;
    d.table = ring.table;
    for (int i = 0; i < ring.n; ++i)
        d.even_images.push_back(QPoly::odd_variable(ring.table, ring.dx_index(i)));
    for (int i = 0; i < ring.q; ++i)
        d.even_images.push_back(QPoly::zero(ring.table));
    for (int i = 0; i < ring.n; ++i) d.odd_images.push_back(QPoly::zero(ring.table));
    for (int i = 0; i < ring.q; ++i)
        d.odd_images.push_back(QPoly::even_variable(ring.table, ring.de_index(i)));
    return d;
}

// Omega(Delta^n) -> Omega(Delta^m) realizing phi: [m] -> [n] as a cdga map:
// x_i goes to the barycentric affine image, dx_i to its formal differential.
inline QMap realize_forms(const MonotoneMap& phi, int n) {
    int m = int(phi.size()) - 1;
    QMap f;
    f.source = form_table(n);
    f.target = form_table(m);
    MappingSpaceRing target_ring = mapping_space_ring(m, 0);
    OddDerivation<Rational> d = de_rham(target_ring);
    for (int i = 1; i <= n; ++i) {
        QPoly img = barycentric_image<Rational>(f.target, phi, i);
        f.even_images.push_back(img);
    }
    for (int i = 0; i < n; ++i) f.odd_images.push_back(odd_derivation(d, f.even_images[size_t(i)]));
    return f;
}

// ---------------------------------------------------------------------------
// Sullivan forms
// ---------------------------------------------------------------------------

class SullivanForm {
public:
    SullivanForm() = default;
    explicit SullivanForm(SpacePtr space) : space_(std::move(space)) {
        values_.resize(size_t(space_->top_dim()) + 1);
        for (int d = 0; d <= space_->top_dim(); ++d)
            values_[size_t(d)].assign(size_t(space_->count(d)), QPoly::zero(form_table(d)));
    }

    static SullivanForm zero(SpacePtr space) { return SullivanForm(std::move(space)); }

    static SullivanForm constant(SpacePtr space, const Rational& c) {
        SullivanForm f(std::move(space));
        for (int d = 0; d <= f.space_->top_dim(); ++d)
            for (int id = 0; id < f.space_->count(d); ++id)
                f.values_[size_t(d)][size_t(id)] = QPoly::constant(form_table(d), c);
        return f;
    }

    const SpacePtr& space() const { return space_; }
    const QPoly& value(SimplexRef r) const { return values_[size_t(r.dim)][size_t(r.id)]; }
    void set_value(SimplexRef r, QPoly p) {
        if (!same_table(p.table(), form_table(r.dim)))
            throw std::invalid_argument("SullivanForm: value over the wrong ring");
        values_[size_t(r.dim)][size_t(r.id)] = std::move(p);
    }

    bool is_zero() const {
        for (const auto& dim : values_)
            for (const auto& p : dim)
                if (!p.is_zero()) return false;
        return true;
    }

    friend SullivanForm operator+(const SullivanForm& a, const SullivanForm& b) {
        require_same_space(a, b);
        SullivanForm r = a;
        for (size_t d = 0; d < r.values_.size(); ++d)
            for (size_t i = 0; i < r.values_[d].size(); ++i)
                r.values_[d][i] += b.values_[d][i];
        return r;
    }
    friend SullivanForm operator-(const SullivanForm& a, const SullivanForm& b) {
        require_same_space(a, b);
        SullivanForm r = a;
        for (size_t d = 0; d < r.values_.size(); ++d)
            for (size_t i = 0; i < r.values_[d].size(); ++i)
                r.values_[d][i] -= b.values_[d][i];
        return r;
    }
    SullivanForm operator-() const {
        SullivanForm r = *this;
        for (auto& dim : r.values_)
            for (auto& p : dim) p = -p;
        return r;
    }
    friend SullivanForm operator*(const Rational& c, const SullivanForm& a) {
        SullivanForm r = a;
        for (auto& dim : r.values_)
            for (auto& p : dim) p = c * p;
        return r;
    }
    friend bool operator==(const SullivanForm& a, const SullivanForm& b) {
        if (!same_space(a.space_, b.space_)) return false;
        return a.values_ == b.values_;
    }

    friend void require_same_space(const SullivanForm& a, const SullivanForm& b) {
        if (!same_space(a.space_, b.space_))
            throw std::invalid_argument("SullivanForm: space mismatch");
    }

private:
    SpacePtr space_;
    std::vector<std::vector<QPoly>> values_;
};

inline SullivanForm wedge(const SullivanForm& a, const SullivanForm& b) {
    require_same_space(a, b);
    SullivanForm r = SullivanForm::zero(a.space());
    const auto& X = *a.space();
    for (int d = 0; d <= X.top_dim(); ++d)
        for (int id = 0; id < X.count(d); ++id) {
            SimplexRef s{d, id};
            r.set_value(s, a.value(s) * b.value(s));
        }
    return r;
}

inline SullivanForm differential(const SullivanForm& a) {
    SullivanForm r = SullivanForm::zero(a.space());
    const auto& X = *a.space();
    for (int d = 0; d <= X.top_dim(); ++d) {
        OddDerivation<Rational> dd = de_rham(mapping_space_ring(d, 0));
        for (int id = 0; id < X.count(d); ++id) {
            SimplexRef s{d, id};
            r.set_value(s, odd_derivation(dd, a.value(s)));
        }
    }
    return r;
}

inline bool is_closed(const SullivanForm& a) { return differential(a).is_zero(); }

inline SullivanForm degree_component(const SullivanForm& a, uint32_t k) {
    SullivanForm r = SullivanForm::zero(a.space());
    const auto& X = *a.space();
    for (int d = 0; d <= X.top_dim(); ++d) {
        MappingSpaceRing ring = mapping_space_ring(d, 0);
        for (int id = 0; id < X.count(d); ++id) {
            SimplexRef s{d, id};
            r.set_value(s, degree_component(ring, a.value(s), k));
        }
    }
    return r;
}

inline bool degree_homogeneous(const SullivanForm& a, uint32_t k) {
    return degree_component(a, k) == a;
}

inline uint32_t max_degree(const SullivanForm& a) {
    uint32_t k = 0;
    const auto& X = *a.space();
    for (int d = 0; d <= X.top_dim(); ++d) {
        MappingSpaceRing ring = mapping_space_ring(d, 0);
        for (int id = 0; id < X.count(d); ++id)
            k = std::max(k, max_form_degree(ring, a.value({d, id})));
    }
    return k;
}

inline uint32_t max_polynomial_degree(const SullivanForm& a) {
    uint32_t k = 0;
    const auto& X = *a.space();
    for (int d = 0; d <= X.top_dim(); ++d)
        for (int id = 0; id < X.count(d); ++id)
            k = std::max(k, a.value({d, id}).even_degree());
    return k;
}

// The restriction of the value on sigma along the i-th coface equals the
// value on the face's nondegenerate core pulled back along the face's
// degeneracy word, for every pair.
inline Report check_compatibility(const SullivanForm& a) {
    Report rep;
    const auto& X = *a.space();
    for (int n = 1; n <= X.top_dim(); ++n) {
        for (int id = 0; id < X.count(n); ++id) {
            SimplexRef s{n, id};
            for (int i = 0; i <= n; ++i) {
                QPoly lhs = substitute(realize_forms(coface_map(i, n), n), a.value(s));
                const Face& f = X.stored_face(s, i);
                MonotoneMap alpha = word_to_surjection(f.degen, f.ref.dim);
                QPoly rhs = substitute(realize_forms(alpha, f.ref.dim), a.value(f.ref));
                if (lhs != rhs)
                    rep.fail("form incompatible at " + X.name(s) + ", face " + std::to_string(i) +
                             ": " + lhs.render() + " != " + rhs.render());
            }
        }
    }
    return rep;
}

// Pullback along a simplicial map f: X -> Y of a form on Y.
inline SullivanForm pullback(const SimplicialMap& f, const SullivanForm& a) {
    if (!same_space(f.to, a.space()))
        throw std::invalid_argument("pullback: form not on the map's target");
    SullivanForm r = SullivanForm::zero(f.from);
    const auto& X = *f.from;
    for (int d = 0; d <= X.top_dim(); ++d) {
        for (int id = 0; id < X.count(d); ++id) {
            SimplexRef s{d, id};
            const Element& img = f.image(s);
            r.set_value(s, substitute(realize_forms(img.surj, img.ref.dim), a.value(img.ref)));
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// The finite-dimensional spaces of compatible forms
// ---------------------------------------------------------------------------

// Basis over Q of the compatible degree-k forms whose coefficient polynomials
// have total degree <= polydeg.  Compatibility is a linear condition on the
// per-simplex coefficients, so the space is the kernel of one exact matrix.
struct FormBasis {
    SpacePtr space;
    int degree = 0;
    int polydeg = 0;
    std::vector<SullivanForm> forms;
};

namespace detail {

inline void enumerate_monomials(const MappingSpaceRing& ring, int degree, int polydeg,
                                std::vector<Monomial>& out) {
    // all odd subsets of the dx block with popcount == degree, all even
    // exponent vectors with total degree <= polydeg
    std::vector<uint64_t> odd_masks;
    for (uint64_t mask = 0; mask < (uint64_t(1) << ring.n); ++mask)
        if (std::popcount(mask) == degree) odd_masks.push_back(mask);
    std::vector<uint32_t> exps(size_t(ring.n), 0);
    auto rec = [&](auto&& self, size_t pos, int remaining) -> void {
        if (pos == exps.size()) {
            for (uint64_t mask : odd_masks) {
                Monomial m;
                m.even = exps;
                m.odd = mask;
                out.push_back(m);
            }
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            exps[pos] = uint32_t(e);
            self(self, pos + 1, remaining - e);
        }
        exps[pos] = 0;
    };
    rec(rec, 0, polydeg);
}

}  // namespace detail

inline FormBasis compatible_form_basis(const SpacePtr& space, int degree, int polydeg) {
    if (degree < 0 || polydeg < 0)
        throw std::invalid_argument("compatible_form_basis: negative bound");
    const auto& X = *space;

    // columns: (simplex, monomial)
    struct Unknown {
        SimplexRef s;
        Monomial m;
    };
    std::vector<Unknown> unknowns;
    std::vector<std::vector<size_t>> first_unknown(size_t(X.top_dim()) + 1);
    for (int d = 0; d <= X.top_dim(); ++d) {
        MappingSpaceRing ring = mapping_space_ring(d, 0);
        std::vector<Monomial> monos;
        detail::enumerate_monomials(ring, degree, polydeg, monos);
        for (int id = 0; id < X.count(d); ++id) {
            first_unknown[size_t(d)].push_back(unknowns.size());
            for (const auto& m : monos) unknowns.push_back(Unknown{SimplexRef{d, id}, m});
        }
    }
    size_t ncols = unknowns.size();

    // rows: (simplex, face index, target monomial), assembled sparsely
    struct RowKey {
        int dim, id, face;
        Monomial m;
        bool operator<(const RowKey& o) const {
            if (dim != o.dim) return dim < o.dim;
            if (id != o.id) return id < o.id;
            if (face != o.face) return face < o.face;
            return MonomialLess{}(m, o.m);
        }
    };
    std::map<RowKey, std::map<size_t, Rational>> rows;

    for (int n = 1; n <= X.top_dim(); ++n) {
        MappingSpaceRing ring = mapping_space_ring(n, 0);
        std::vector<Monomial> monos;
        detail::enumerate_monomials(ring, degree, polydeg, monos);
        for (int id = 0; id < X.count(n); ++id) {
            SimplexRef s{n, id};
            for (int i = 0; i <= n; ++i) {
                QMap restr = realize_forms(coface_map(i, n), n);
                const Face& f = X.stored_face(s, i);
                MonotoneMap alpha = word_to_surjection(f.degen, f.ref.dim);
                QMap ext = realize_forms(alpha, f.ref.dim);

                // + side: the unknowns on sigma
                size_t base = first_unknown[size_t(n)][size_t(id)];
                for (size_t k = 0; k < monos.size(); ++k) {
                    QPoly mono(form_table(n));
                    mono.add_term(monos[k], Rational(1));
                    QPoly img = substitute(restr, mono);
                    for (const auto& [tm, tc] : img.terms())
                        rows[RowKey{n, id, i, tm}][base + k] += tc;
                }
                // - side: the unknowns on the face core
                MappingSpaceRing fring = mapping_space_ring(f.ref.dim, 0);
                std::vector<Monomial> fmonos;
                detail::enumerate_monomials(fring, degree, polydeg, fmonos);
                size_t fbase = first_unknown[size_t(f.ref.dim)][size_t(f.ref.id)];
                for (size_t k = 0; k < fmonos.size(); ++k) {
                    QPoly mono(form_table(f.ref.dim));
                    mono.add_term(fmonos[k], Rational(1));
                    QPoly img = substitute(ext, mono);
                    for (const auto& [tm, tc] : img.terms())
                        rows[RowKey{n, id, i, tm}][fbase + k] -= tc;
                }
            }
        }
    }

    Matrix<Rational> mat(rows.size(), ncols);
    size_t r = 0;
    for (const auto& [key, entries] : rows) {
        for (const auto& [col, val] : entries) mat(r, col) = val;
        ++r;
    }

    FormBasis out;
    out.space = space;
    out.degree = degree;
    out.polydeg = polydeg;
    for (const auto& vec : kernel_basis(mat)) {
        SullivanForm form = SullivanForm::zero(space);
        for (size_t k = 0; k < ncols; ++k) {
            if (coeff_is_zero(vec[k])) continue;
            QPoly term(form_table(unknowns[k].s.dim));
            term.add_term(unknowns[k].m, vec[k]);
            form.set_value(unknowns[k].s, form.value(unknowns[k].s) + term);
        }
        out.forms.push_back(std::move(form));
    }
    return out;
}

// A pseudorandom compatible form: a small random integer combination of a
// kernel basis of the compatible-form space (deterministic per seed).
inline SullivanForm random_form(const SpacePtr& space, int degree, int polydeg, uint64_t seed) {
    FormBasis basis = compatible_form_basis(space, degree, polydeg);
    SullivanForm r = SullivanForm::zero(space);
    std::mt19937_64 rng(seed);
    for (const auto& b : basis.forms) {
        long long c = (long long)(rng() % 7) - 3;
        if (c != 0) r = r + Rational(c) * b;
    }
    return r;
}

inline SullivanForm random_form_from_basis(const FormBasis& basis, std::mt19937_64& rng) {
    SullivanForm r = SullivanForm::zero(basis.space);
    for (const auto& b : basis.forms) {
        long long c = (long long)(rng() % 7) - 3;
        if (c != 0) r = r + Rational(c) * b;
    }
    return r;
}

// Omega*(X) as a sub-cdga of the product over simplices: the compatible
// families are closed under sum, wedge and d (checked on small bases).
inline Report global_functions_ring_check(const SpacePtr& space) {
    Report rep;
    int top = space->top_dim();
    std::vector<FormBasis> bases;
    for (int k = 0; k <= top; ++k) bases.push_back(compatible_form_basis(space, k, 2));
    for (const auto& basis : bases) {
        for (const auto& b : basis.forms) {
            if (!check_compatibility(b).ok)
                rep.fail("basis form fails compatibility (degree " +
                         std::to_string(basis.degree) + ")");
            if (!check_compatibility(differential(b)).ok)
                rep.fail("d of a compatible form is incompatible (degree " +
                         std::to_string(basis.degree) + ")");
        }
    }
    for (const auto& ba : bases)
        for (const auto& a : ba.forms)
            for (const auto& bb : bases)
                for (const auto& b : bb.forms) {
                    if (!check_compatibility(a + b).ok)
                        rep.fail("sum of compatible forms is incompatible");
                    if (!check_compatibility(wedge(a, b)).ok)
                        rep.fail("wedge of compatible forms is incompatible");
                }
    return rep;
}

}  // namespace superpoint
