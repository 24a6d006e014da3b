// Exact rational cohomology and concordance: the normalized simplicial
// cochain complex, the simplexwise integration (Stokes) map from Sullivan
// forms to cochains, exactness decisions and degree-bounded witnesses, and
// the three concordance notions with their interval witnesses.
//
// Orientation convention: dx1 ^ ... ^ dxn integrates to +1/n! over the
// standard simplex, paired with the coboundary sign delta = sum (-1)^i d_i*;
// the Stokes identity holds exactly for this pair of choices.

#pragma once

#include <optional>

#include "superpoint/fieldtheory.hpp"
#include "superpoint/forms.hpp"
#include "superpoint/linalg.hpp"
#include "superpoint/simplicial.hpp"

namespace superpoint {

// ---------------------------------------------------------------------------
// The normalized cochain complex
// ---------------------------------------------------------------------------

struct Cochain {
    SpacePtr space;
    int dim = 0;
    std::vector<Rational> values;  // one per nondegenerate dim-simplex
};

struct CochainComplex {
    SpacePtr space;
    // coboundary[n]: C^n -> C^{n+1}; rows are (n+1)-simplices, columns n-simplices
    std::vector<Matrix<Rational>> coboundary;
};

inline CochainComplex cochain_complex(const SpacePtr& space) {
    CochainComplex cc;
    cc.space = space;
    const auto& X = *space;
    int top = X.top_dim();
    for (int n = 0; n < top; ++n) {
        Matrix<Rational> d(size_t(X.count(n + 1)), size_t(X.count(n)));
        for (int id = 0; id < X.count(n + 1); ++id) {
            for (int i = 0; i <= n + 1; ++i) {
                const Face& f = X.stored_face({n + 1, id}, i);
                if (!f.degen.indices.empty()) continue;  // normalized: degenerate faces drop
                d(size_t(id), size_t(f.ref.id)) += (i % 2 == 0) ? Rational(1) : Rational(-1);
            }
        }
        cc.coboundary.push_back(std::move(d));
    }
    // delta . delta = 0, exactly
    for (size_t n = 0; n + 1 < cc.coboundary.size(); ++n) {
        const auto& a = cc.coboundary[n + 1];
        const auto& b = cc.coboundary[n];
        for (size_t i = 0; i < a.rows(); ++i)
            for (size_t k = 0; k < b.cols(); ++k) {
                Rational s = 0;
                for (size_t j = 0; j < a.cols(); ++j) s += a(i, j) * b(j, k);
                if (s != 0) throw std::logic_error("cochain complex: delta^2 != 0");
            }
    }
    return cc;
}

inline Cochain apply_coboundary(const CochainComplex& cc, const Cochain& c) {
    Cochain out;
    out.space = cc.space;
    out.dim = c.dim + 1;
    if (c.dim >= int(cc.coboundary.size())) {
        out.values.assign(size_t(cc.space->count(c.dim + 1)), Rational(0));
        return out;
    }
    out.values = matvec(cc.coboundary[size_t(c.dim)], c.values);
    return out;
}

struct CohomologyBasis {
    int betti = 0;
    std::vector<Cochain> classes;  // representatives of a basis of H^n
};

// Rank of H^n over Q by exact elimination, with class representatives.
inline CohomologyBasis simplicial_cohomology(const SpacePtr& space, int n) {
    const auto& X = *space;
    CochainComplex cc = cochain_complex(space);
    size_t cn = size_t(X.count(n));
    if (n < 0 || cn == 0) return {};

    std::vector<std::vector<Rational>> kernel;
    if (n < int(cc.coboundary.size())) {
        kernel = kernel_basis(cc.coboundary[size_t(n)]);
    } else {
        for (size_t j = 0; j < cn; ++j) {
            std::vector<Rational> e(cn, Rational(0));
            e[j] = 1;
            kernel.push_back(std::move(e));
        }
    }
    size_t image_rank = 0;
    std::vector<std::vector<Rational>> image_cols;
    if (n >= 1 && n - 1 < int(cc.coboundary.size())) {
        const auto& d = cc.coboundary[size_t(n - 1)];
        for (size_t j = 0; j < d.cols(); ++j) {
            std::vector<Rational> col(d.rows());
            for (size_t i = 0; i < d.rows(); ++i) col[i] = d(i, j);
            image_cols.push_back(std::move(col));
        }
        Matrix<Rational> im(cn, image_cols.size());
        for (size_t j = 0; j < image_cols.size(); ++j)
            for (size_t i = 0; i < cn; ++i) im(i, j) = image_cols[j][i];
        image_rank = rank(im);
    }

    CohomologyBasis out;
    out.betti = int(kernel.size() - image_rank);

    // representatives: kernel vectors that are pivots beyond the image block
    Matrix<Rational> mix(cn, image_cols.size() + kernel.size());
    for (size_t j = 0; j < image_cols.size(); ++j)
        for (size_t i = 0; i < cn; ++i) mix(i, j) = image_cols[j][i];
    for (size_t j = 0; j < kernel.size(); ++j)
        for (size_t i = 0; i < cn; ++i) mix(i, image_cols.size() + j) = kernel[j][i];
    std::vector<size_t> pivots = rref(mix);
    for (size_t p : pivots) {
        if (p < image_cols.size()) continue;
        Cochain c;
        c.space = space;
        c.dim = n;
        c.values = kernel[p - image_cols.size()];
        out.classes.push_back(std::move(c));
    }
    return out;
}

// Periodic cohomology: the direct sum of H^k over k congruent to n mod 2.
inline int periodic_cohomology_rank(const SpacePtr& space, int n) {
    int total = 0;
    for (int k = ((n % 2) + 2) % 2; k <= space->top_dim(); k += 2)
        total += simplicial_cohomology(space, k).betti;
    return total;
}

// ---------------------------------------------------------------------------
// Integration of forms over simplices
// ---------------------------------------------------------------------------

// Exact integral over the standard n-simplex of a top-degree form component:
// int x1^a1 ... xn^an dx1...dxn = (prod ai!) / (n + sum ai)!.
inline Rational integrate(int n, const QPoly& top_part) {
    if (n == 0) {
        if (!top_part.is_constant()) throw std::invalid_argument("integrate: degree mismatch");
        return top_part.is_zero() ? Rational(0) : top_part.constant_value();
    }
    MappingSpaceRing ring = mapping_space_ring(n, 0);
    uint64_t full = (uint64_t(1) << n) - 1;
    Rational total = 0;
    for (const auto& [m, c] : top_part.terms()) {
        if (m.odd != full) throw std::invalid_argument("integrate: degree mismatch");
        BigInt numer = 1;
        uint32_t degsum = 0;
        for (int i = 0; i < n; ++i) {
            for (uint32_t k = 2; k <= m.even[size_t(i)]; ++k) numer *= k;
            degsum += m.even[size_t(i)];
        }
        BigInt denom = 1;
        for (uint32_t k = 2; k <= uint32_t(n) + degsum; ++k) denom *= k;
        total += c * Rational(numer, denom);
    }
    return total;
}

// sigma |-> integral over sigma of the degree-n part of a_sigma.
inline Cochain integration_cochain(const SullivanForm& a, int n) {
    Cochain c;
    c.space = a.space();
    c.dim = n;
    const auto& X = *a.space();
    MappingSpaceRing ring = mapping_space_ring(n, 0);
    for (int id = 0; id < X.count(n); ++id)
        c.values.push_back(integrate(n, degree_component(ring, a.value({n, id}), uint32_t(n))));
    return c;
}

// ---------------------------------------------------------------------------
// Exactness: decision via the integration map, witnesses by bounded solve
// ---------------------------------------------------------------------------

// Decides whether the closed form is exact by testing whether its integration
// cochain is a coboundary.  Complete over Q by the Sullivan comparison, which
// the acceptance suite exercises on the standard spaces.
inline bool is_exact(const SullivanForm& a) {
    if (!is_closed(a)) throw std::invalid_argument("is_exact: form is not closed");
    if (a.is_zero()) return true;
    uint32_t n = max_degree(a);
    if (degree_component(a, n) != a)
        throw std::invalid_argument("is_exact: form is not homogeneous");
    if (n == 0) return false;  // nonzero closed 0-forms are never exact
    CochainComplex cc = cochain_complex(a.space());
    Cochain c = integration_cochain(a, int(n));
    if (n - 1 >= cc.coboundary.size()) return false;
    return solve(cc.coboundary[n - 1], c.values).has_value();
}

// Solves d(eta) = a over the compatible (n-1)-forms of coefficient degree at
// most polydeg_bound.  Sound (any result re-verifies exactly); complete only
// relative to the bound.
inline std::optional<SullivanForm> exactness_witness(const SullivanForm& a, int polydeg_bound) {
    if (!is_closed(a)) throw std::invalid_argument("exactness_witness: form is not closed");
    if (a.is_zero()) return SullivanForm::zero(a.space());
    uint32_t n = max_degree(a);
    if (n == 0) return std::nullopt;
    FormBasis basis = compatible_form_basis(a.space(), int(n) - 1, polydeg_bound);
    if (basis.forms.empty()) return std::nullopt;

    // coordinates: (dim, id, monomial) over the union of supports
    struct Key {
        int dim, id;
        Monomial m;
        bool operator<(const Key& o) const {
            if (dim != o.dim) return dim < o.dim;
            if (id != o.id) return id < o.id;
            return MonomialLess{}(m, o.m);
        }
    };
    std::map<Key, size_t> row_of;
    auto touch = [&](const SullivanForm& f) {
        const auto& X = *f.space();
        for (int d = 0; d <= X.top_dim(); ++d)
            for (int id = 0; id < X.count(d); ++id)
                for (const auto& [m, c] : f.value({d, id}).terms())
                    row_of.emplace(Key{d, id, m}, 0);
    };
    std::vector<SullivanForm> dbasis;
    for (const auto& b : basis.forms) dbasis.push_back(differential(b));
    for (const auto& db : dbasis) touch(db);
    touch(a);
    size_t r = 0;
    for (auto& [k, idx] : row_of) idx = r++;

    Matrix<Rational> M(row_of.size(), dbasis.size());
    for (size_t j = 0; j < dbasis.size(); ++j) {
        const auto& X = *a.space();
        for (int d = 0; d <= X.top_dim(); ++d)
            for (int id = 0; id < X.count(d); ++id)
                for (const auto& [m, c] : dbasis[j].value({d, id}).terms())
                    M(row_of.at(Key{d, id, m}), j) = c;
    }
    std::vector<Rational> rhs(row_of.size(), Rational(0));
    {
        const auto& X = *a.space();
        for (int d = 0; d <= X.top_dim(); ++d)
            for (int id = 0; id < X.count(d); ++id)
                for (const auto& [m, c] : a.value({d, id}).terms())
                    rhs[row_of.at(Key{d, id, m})] = c;
    }
    auto sol = solve(M, rhs);
    if (!sol) return std::nullopt;
    SullivanForm eta = SullivanForm::zero(a.space());
    for (size_t j = 0; j < basis.forms.size(); ++j)
        if ((*sol)[j] != 0) eta = eta + (*sol)[j] * basis.forms[j];
    if (differential(eta) != a) throw std::logic_error("exactness_witness: verification failed");
    return eta;
}

// ---------------------------------------------------------------------------
// Forms with an interval coordinate: Omega*(X)[t, dt]
// ---------------------------------------------------------------------------

inline TablePtr t_form_table(int n) { return extend_table(form_table(n), {"t"}, {"dt"}); }

// A form on X x A^1, represented as Omega*(X) with the even coordinate t and
// its odd differential dt adjoined simplexwise.
struct TForm {
    SpacePtr space;
    std::vector<std::vector<QPoly>> values;  // [dim][id] over t_form_table(dim)

    const QPoly& value(SimplexRef r) const { return values[size_t(r.dim)][size_t(r.id)]; }

    friend bool operator==(const TForm& a, const TForm& b) {
        return same_space(a.space, b.space) && a.values == b.values;
    }
};

inline TForm embed_t(const SullivanForm& a) {
    TForm out;
    out.space = a.space();
    const auto& X = *a.space();
    out.values.resize(size_t(X.top_dim()) + 1);
    for (int d = 0; d <= X.top_dim(); ++d) {
        QMap incl = rename_map<Rational>(form_table(d), t_form_table(d));
        for (int id = 0; id < X.count(d); ++id)
            out.values[size_t(d)].push_back(substitute(incl, a.value({d, id})));
    }
    return out;
}

inline TForm operator+(const TForm& a, const TForm& b) {
    TForm r = a;
    for (size_t d = 0; d < r.values.size(); ++d)
        for (size_t i = 0; i < r.values[d].size(); ++i) r.values[d][i] += b.values[d][i];
    return r;
}

inline TForm wedge_t(const TForm& a, const TForm& b) {
    TForm r = a;
    for (size_t d = 0; d < r.values.size(); ++d)
        for (size_t i = 0; i < r.values[d].size(); ++i)
            r.values[d][i] = a.values[d][i] * b.values[d][i];
    return r;
}

// the 0-form t (resp. a polynomial in t) as a TForm
inline TForm t_polynomial(const SpacePtr& space, const std::vector<Rational>& coeffs) {
    TForm out;
    out.space = space;
    const auto& X = *space;
    out.values.resize(size_t(X.top_dim()) + 1);
    for (int d = 0; d <= X.top_dim(); ++d) {
        QPoly t = QPoly::variable(t_form_table(d), "t");
        QPoly p = QPoly::zero(t_form_table(d));
        for (size_t j = 0; j < coeffs.size(); ++j)
            if (coeffs[j] != 0) p += coeffs[j] * t.pow(uint32_t(j));
        out.values[size_t(d)].assign(size_t(X.count(d)), p);
    }
    return out;
}

inline TForm differential_t(const TForm& a) {
    TForm r = a;
    const auto& X = *a.space;
    for (int d = 0; d <= X.top_dim(); ++d) {
        MappingSpaceRing base = mapping_space_ring(d, 0);
        TablePtr tab = t_form_table(d);
        OddDerivation<Rational> dd;
        dd.table = tab;
        for (int i = 0; i < d; ++i)
            dd.even_images.push_back(QPoly::variable(tab, "dx" + std::to_string(i + 1)));
        dd.even_images.push_back(QPoly::variable(tab, "dt"));
        for (int i = 0; i < d; ++i) dd.odd_images.push_back(QPoly::zero(tab));
        dd.odd_images.push_back(QPoly::zero(tab));
        for (int id = 0; id < X.count(d); ++id)
            r.values[size_t(d)][size_t(id)] = odd_derivation(dd, a.value({d, id}));
    }
    return r;
}

inline bool t_closed(const TForm& a) {
    TForm d = differential_t(a);
    for (const auto& dim : d.values)
        for (const auto& p : dim)
            if (!p.is_zero()) return false;
    return true;
}

// evaluation at an endpoint: t -> j, dt -> 0
inline SullivanForm evaluate_t(const TForm& a, const Rational& j) {
    SullivanForm out = SullivanForm::zero(a.space);
    const auto& X = *a.space;
    for (int d = 0; d <= X.top_dim(); ++d) {
        TablePtr src = t_form_table(d);
        TablePtr dst = form_table(d);
        QMap f;
        f.source = src;
        f.target = dst;
        for (int i = 0; i < d; ++i)
            f.even_images.push_back(QPoly::variable(dst, "x" + std::to_string(i + 1)));
        f.even_images.push_back(QPoly::constant(dst, j));
        for (int i = 0; i < d; ++i)
            f.odd_images.push_back(QPoly::variable(dst, "dx" + std::to_string(i + 1)));
        f.odd_images.push_back(QPoly::zero(dst));
        for (int id = 0; id < X.count(d); ++id)
            out.set_value({d, id}, substitute(f, a.value({d, id})));
    }
    return out;
}

// compatibility of the family, with t and dt carried along
inline Report check_compatibility_t(const TForm& a) {
    Report rep;
    const auto& X = *a.space;
    for (int n = 1; n <= X.top_dim(); ++n) {
        for (int id = 0; id < X.count(n); ++id) {
            SimplexRef s{n, id};
            for (int i = 0; i <= n; ++i) {
                auto extend = [](const QMap& base, int src_dim, int dst_dim) {
                    QMap f;
                    f.source = t_form_table(src_dim);
                    f.target = t_form_table(dst_dim);
                    QMap push = rename_map<Rational>(form_table(dst_dim), t_form_table(dst_dim));
                    for (const auto& img : base.even_images)
                        f.even_images.push_back(substitute(push, img));
                    f.even_images.push_back(QPoly::variable(f.target, "t"));
                    for (const auto& img : base.odd_images)
                        f.odd_images.push_back(substitute(push, img));
                    f.odd_images.push_back(QPoly::variable(f.target, "dt"));
                    return f;
                };
                QMap restr = extend(realize_forms(coface_map(i, n), n), n, n - 1);
                const Face& f = X.stored_face(s, i);
                MonotoneMap alpha = word_to_surjection(f.degen, f.ref.dim);
                QMap ext = extend(realize_forms(alpha, f.ref.dim), f.ref.dim, n - 1);
                QPoly lhs = substitute(restr, a.value(s));
                QPoly rhs = substitute(ext, a.value(f.ref));
                if (lhs != rhs)
                    rep.fail("t-form incompatible at " + X.name(s) + ", face " +
                             std::to_string(i));
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Concordance
// ---------------------------------------------------------------------------

// The interval witness  omega1 t + omega0 (1-t) + (-1)^k alpha ^ dt  for
// closed degree-k forms with d alpha = omega0 - omega1.  (For odd k the sign
// on the alpha term is forced by closedness.)  Its endpoint evaluations at
// t = 0, 1 are omega0, omega1.
inline TForm cochain_concordance_witness(const SullivanForm& omega0, const SullivanForm& omega1,
                                         const SullivanForm& alpha) {
    require_same_space(omega0, omega1);
    require_same_space(omega0, alpha);
    if (!check_compatibility(omega0).ok || !check_compatibility(omega1).ok ||
        !check_compatibility(alpha).ok)
        throw std::invalid_argument("cochain_concordance_witness: inputs must be compatible forms");
    if (differential(alpha) != omega0 - omega1)
        throw std::invalid_argument("cochain_concordance_witness: d(alpha) != omega0 - omega1");
    if (!is_closed(omega0) || !is_closed(omega1))
        throw std::invalid_argument("cochain_concordance_witness: endpoints must be closed");
    uint32_t k = std::max(max_degree(omega0), max_degree(omega1));
    if (degree_component(omega0, k) != omega0 || degree_component(omega1, k) != omega1)
        throw std::invalid_argument("cochain_concordance_witness: endpoints must be homogeneous");

    SpacePtr X = omega0.space();
    TForm t = t_polynomial(X, {Rational(0), Rational(1)});
    TForm one_minus_t = t_polynomial(X, {Rational(1), Rational(-1)});
    TForm dt = differential_t(t);
    Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);

    TForm out = wedge_t(embed_t(omega1), t) + wedge_t(embed_t(omega0), one_minus_t);
    TForm alpha_dt = wedge_t(embed_t(sign * degree_component(alpha, k >= 1 ? k - 1 : 0)), dt);
    out = out + alpha_dt;

    if (!t_closed(out))
        throw std::logic_error("cochain_concordance_witness: witness is not closed");
    if (evaluate_t(out, Rational(0)) != omega0 || evaluate_t(out, Rational(1)) != omega1)
        throw std::logic_error("cochain_concordance_witness: endpoint evaluation failed");
    return out;
}

// Transport Omega*(X)[t,dt] -> Omega*(X x Delta^1) along the canonical map:
// t goes to the pullback of the interval coordinate, the X-coordinates to the
// prism projection.
inline SullivanForm transport_to_prism(const PrismResult& pr, const TForm& a) {
    SullivanForm out = SullivanForm::zero(pr.space);
    const auto& P = *pr.space;
    for (int m = 0; m <= P.top_dim(); ++m) {
        for (int id = 0; id < P.count(m); ++id) {
            const PrismCellOrigin& o = pr.origin[size_t(m)][size_t(id)];
            int b = o.base.dim;
            MonotoneMap xpart;
            std::vector<int> interval;
            if (!o.is_prism) {
                xpart.resize(size_t(m) + 1);
                std::iota(xpart.begin(), xpart.end(), 0);
                interval = detail::interval_values(m, o.param);
            } else {
                xpart = codegeneracy_map(o.param, m - 1);
                interval = detail::interval_values(m, o.param + 1);
            }
            // t pulls back along the interval coordinate: the affine function
            // of the barycentric coordinates hitting value 1
            TablePtr dst = form_table(m);
            QPoly t_img = barycentric_image<Rational>(dst, interval, 1);
            QMap base = realize_forms(xpart, b);
            MappingSpaceRing mring = mapping_space_ring(m, 0);
            OddDerivation<Rational> dd = de_rham(mring);
            QMap f;
            f.source = t_form_table(b);
            f.target = dst;
            f.even_images = base.even_images;
            f.even_images.push_back(t_img);
            f.odd_images = base.odd_images;
            f.odd_images.push_back(odd_derivation(dd, t_img));
            out.set_value({m, id}, substitute(f, a.value(o.base)));
        }
    }
    return out;
}

enum class ConcordanceNotion { cohomologous, cochain, algebraic, simplicial };

inline std::string notion_name(ConcordanceNotion n) {
    switch (n) {
        case ConcordanceNotion::cohomologous: return "cohomologous";
        case ConcordanceNotion::cochain: return "cochain";
        case ConcordanceNotion::algebraic: return "algebraic";
        case ConcordanceNotion::simplicial: return "simplicial";
    }
    return "?";
}

inline ConcordanceNotion notion_from_name(const std::string& s) {
    for (ConcordanceNotion n :
         {ConcordanceNotion::cohomologous, ConcordanceNotion::cochain,
          ConcordanceNotion::algebraic, ConcordanceNotion::simplicial})
        if (notion_name(n) == s) return n;
    throw std::invalid_argument("unknown concordance notion: " + s);
}

struct ConcordanceVerdict {
    ConcordanceNotion notion = ConcordanceNotion::cohomologous;
    bool holds = false;
    std::optional<SullivanForm> primitive;       // eta with d eta = omega0 - omega1
    std::optional<TForm> witness;                // interval witness
    std::optional<SullivanForm> prism_witness;   // transported witness (simplicial notion)
    int polydeg_bound = 0;
    std::string detail;
};

// Decide concordance of two closed forms of the same degree.  The
// cohomologous notion is decided completely via the integration map; the
// witness-based notions search for a primitive of coefficient degree up to
// the bound and verify every constructed witness exactly.
inline ConcordanceVerdict concordance_check(ConcordanceNotion notion, const SullivanForm& omega0,
                                            const SullivanForm& omega1, int polydeg_bound = 6) {
    require_same_space(omega0, omega1);
    if (!is_closed(omega0) || !is_closed(omega1))
        throw std::invalid_argument("concordance_check: forms must be closed");
    uint32_t k = std::max(max_degree(omega0), max_degree(omega1));
    if (degree_component(omega0, k) != omega0 || degree_component(omega1, k) != omega1)
        throw std::invalid_argument("concordance_check: forms must be homogeneous of one degree");

    ConcordanceVerdict v;
    v.notion = notion;
    v.polydeg_bound = polydeg_bound;

    if (notion == ConcordanceNotion::cohomologous) {
        v.holds = is_exact(omega0 - omega1);
        if (v.holds) {
            v.primitive = exactness_witness(omega0 - omega1, polydeg_bound);
            v.detail = v.primitive ? "difference is exact; primitive attached"
                                   : "difference is exact; no primitive within the bound";
        } else {
            v.detail = "difference is not exact";
        }
        return v;
    }

    std::optional<SullivanForm> eta = exactness_witness(omega0 - omega1, polydeg_bound);
    if (!eta) {
        v.holds = false;
        v.detail = is_exact(omega0 - omega1)
                       ? "no primitive within the polynomial-degree bound"
                       : "difference is not exact";
        return v;
    }
    TForm w = cochain_concordance_witness(omega0, omega1, *eta);
    v.primitive = eta;
    v.witness = w;

    switch (notion) {
        case ConcordanceNotion::cochain: {
            v.holds = true;
            v.detail = "interval witness constructed and verified";
            break;
        }
        case ConcordanceNotion::algebraic: {
            bool ok = t_closed(w) && check_compatibility_t(w).ok &&
                      evaluate_t(w, Rational(0)) == omega0 && evaluate_t(w, Rational(1)) == omega1;
            v.holds = ok;
            v.detail = ok ? "witness on X x A^1 verified" : "witness failed verification";
            break;
        }
        case ConcordanceNotion::simplicial: {
            PrismResult pr = prism(omega0.space());
            SullivanForm pw = transport_to_prism(pr, w);
            bool ok = check_compatibility(pw).ok && is_closed(pw) &&
                      pullback(pr.f0, pw) == omega0 && pullback(pr.f1, pw) == omega1;
            v.prism_witness = pw;
            v.holds = ok;
            v.detail = ok ? "witness transported to the prism and verified"
                          : "transported witness failed verification";
            break;
        }
        default: break;
    }
    return v;
}

}  // namespace superpoint
