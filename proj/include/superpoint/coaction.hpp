// The bialgebra O(End(A^{0|1})) = Q[x, e] of superpoint endomorphisms, its
// comultiplication m*(x) = x1 x2, m*(e) = e1 + x1 e2, and coactions of it on
// supercommutative rings.  A coaction of cdga type is the same data as a
// connective grading plus a degree-one odd differential: a generator of
// degree k maps to  g x^k + (dg) x^k e.
//
// Tensor factors are encoded by extending the variable table with the
// reserved pair (x, e); the double extension uses (xA, eA, xB, eB) to avoid
// clashing with coordinate names like x1.

#pragma once

#include "superpoint/forms.hpp"
#include "superpoint/superalg.hpp"

namespace superpoint {

// A coaction map A -> A[x,e] of the endomorphism bialgebra on the algebra
// with the given table.
struct Coaction {
    TablePtr algebra;
    TablePtr extended;      // algebra + (x even, e odd)
    QMap map;               // source = algebra, target = extended

    size_t x_index() const { return extended->num_evens() - 1; }
    size_t e_index() const { return extended->num_odds() - 1; }
};

inline Coaction make_coaction(const TablePtr& algebra, std::vector<QPoly> even_images,
                              std::vector<QPoly> odd_images) {
    Coaction c;
    c.algebra = algebra;
    c.extended = extend_table(algebra, {"x"}, {"e"});
    c.map.source = algebra;
    c.map.target = c.extended;
    c.map.even_images = std::move(even_images);
    c.map.odd_images = std::move(odd_images);
    return c;
}

inline Coaction trivial_coaction(const TablePtr& algebra) {
    TablePtr ext = extend_table(algebra, {"x"}, {"e"});
    std::vector<QPoly> ev, od;
    for (const auto& nm : algebra->evens) ev.push_back(QPoly::variable(ext, nm));
    for (const auto& nm : algebra->odds) od.push_back(QPoly::variable(ext, nm));
    return make_coaction(algebra, std::move(ev), std::move(od));
}

// x_i |-> x_i + dx_i e,  de_i |-> de_i x,  dx_i |-> dx_i x,  e_i |-> e_i + de_i e.
inline Coaction canonical_coaction(const MappingSpaceRing& ring) {
    TablePtr ext = extend_table(ring.table, {"x"}, {"e"});
    auto var = [&](const std::string& nm) { return QPoly::variable(ext, nm); };
    QPoly x = var("x"), e = var("e");
    std::vector<QPoly> ev, od;
    for (int i = 0; i < ring.n; ++i) {
        std::string si = std::to_string(i + 1);
        ev.push_back(var("x" + si) + var("dx" + si) * e);
    }
    for (int i = 0; i < ring.q; ++i)
        ev.push_back(var("de" + std::to_string(i + 1)) * x);
    for (int i = 0; i < ring.n; ++i)
        od.push_back(var("dx" + std::to_string(i + 1)) * x);
    for (int i = 0; i < ring.q; ++i) {
        std::string si = std::to_string(i + 1);
        od.push_back(var("e" + si) + var("de" + si) * e);
    }
    return make_coaction(ring.table, std::move(ev), std::move(od));
}

// The endomorphism bialgebra Q[x, e] with its comultiplication and counit.
struct EndBialgebra {
    TablePtr ring;          // Q[x | e]
    TablePtr doubled;       // Q[x1, x2 | e1, e2]
    QMap comultiplication;  // x |-> x1 x2, e |-> e1 + x1 e2
    QMap counit;            // x |-> 1, e |-> 0
};

inline EndBialgebra end_bialgebra() {
    EndBialgebra B;
    B.ring = make_table({"x"}, {"e"});
    B.doubled = make_table({"x1", "x2"}, {"e1", "e2"});
    B.comultiplication.source = B.ring;
    B.comultiplication.target = B.doubled;
    B.comultiplication.even_images = {QPoly::variable(B.doubled, "x1") *
                                      QPoly::variable(B.doubled, "x2")};
    B.comultiplication.odd_images = {QPoly::variable(B.doubled, "e1") +
                                     QPoly::variable(B.doubled, "x1") *
                                         QPoly::variable(B.doubled, "e2")};
    TablePtr scalars = make_table({}, {});
    B.counit.source = B.ring;
    B.counit.target = scalars;
    B.counit.even_images = {QPoly::one(scalars)};
    B.counit.odd_images = {QPoly::zero(scalars)};
    return B;
}

// Coassociativity and counitality of m*, checked symbolically in the triple
// tensor factor Q[x1,x2,x3 | e1,e2,e3].
inline Report verify_end_bialgebra(const EndBialgebra& B) {
    Report rep;
    TablePtr triple = make_table({"x1", "x2", "x3"}, {"e1", "e2", "e3"});
    auto v = [&](const std::string& nm) { return QPoly::variable(triple, nm); };

    QMap m12;  // m* on the first factor, old second factor -> slot 3
    m12.source = B.doubled;
    m12.target = triple;
    m12.even_images = {v("x1") * v("x2"), v("x3")};
    m12.odd_images = {v("e1") + v("x1") * v("e2"), v("e3")};

    QMap m23;  // first factor kept, m* on the second factor -> slots 2,3
    m23.source = B.doubled;
    m23.target = triple;
    m23.even_images = {v("x1"), v("x2") * v("x3")};
    m23.odd_images = {v("e1"), v("e2") + v("x2") * v("e3")};

    for (size_t i = 0; i < 2; ++i) {
        const QPoly& img = (i == 0) ? B.comultiplication.even_images[0]
                                    : B.comultiplication.odd_images[0];
        std::string nm = (i == 0) ? "x" : "e";
        QPoly lhs = substitute(m12, img);
        QPoly rhs = substitute(m23, img);
        if (lhs != rhs) rep.fail("m* not coassociative on " + nm);
    }

    // both counit triangles collapse m* to the identity
    QMap eps1, eps2;
    eps1.source = B.doubled;
    eps1.target = B.ring;
    eps1.even_images = {QPoly::one(B.ring), QPoly::variable(B.ring, "x")};
    eps1.odd_images = {QPoly::zero(B.ring), QPoly::variable(B.ring, "e")};
    eps2.source = B.doubled;
    eps2.target = B.ring;
    eps2.even_images = {QPoly::variable(B.ring, "x"), QPoly::one(B.ring)};
    eps2.odd_images = {QPoly::variable(B.ring, "e"), QPoly::zero(B.ring)};
    for (size_t i = 0; i < 2; ++i) {
        const QPoly& img = (i == 0) ? B.comultiplication.even_images[0]
                                    : B.comultiplication.odd_images[0];
        std::string nm = (i == 0) ? "x" : "e";
        QPoly gen = QPoly::variable(B.ring, nm);
        if (substitute(eps1, img) != gen) rep.fail("left counit fails on " + nm);
        if (substitute(eps2, img) != gen) rep.fail("right counit fails on " + nm);
    }
    return rep;
}

// Coassociativity (id x m*) mu* = (mu* x id) mu* and the counit triangle,
// checked symbolically on every generator (hence on the whole algebra).
inline Report verify_coaction(const Coaction& c) {
    Report rep;
    // parity sanity first, reported rather than thrown
    for (size_t i = 0; i < c.algebra->num_evens(); ++i)
        if (!c.map.even_images[i].parity_homogeneous(Parity::even))
            rep.fail("image of even generator " + c.algebra->evens[i] + " is not even");
    for (size_t i = 0; i < c.algebra->num_odds(); ++i)
        if (!c.map.odd_images[i].parity_homogeneous(Parity::odd))
            rep.fail("image of odd generator " + c.algebra->odds[i] + " is not odd");
    if (!rep.ok) return rep;

    TablePtr ext2 = extend_table(c.algebra, {"xA", "xB"}, {"eA", "eB"});
    auto v2 = [&](const std::string& nm) { return QPoly::variable(ext2, nm); };

    // (id x m*): base generators fixed, x |-> xA xB, e |-> eA + xA eB
    QMap id_m;
    id_m.source = c.extended;
    id_m.target = ext2;
    for (const auto& nm : c.algebra->evens) id_m.even_images.push_back(v2(nm));
    id_m.even_images.push_back(v2("xA") * v2("xB"));
    for (const auto& nm : c.algebra->odds) id_m.odd_images.push_back(v2(nm));
    id_m.odd_images.push_back(v2("eA") + v2("xA") * v2("eB"));

    // (mu* x id): base generators through mu* with the fresh pair named
    // (xA, eA), the old pair renamed to (xB, eB)
    QMap rename_first;
    rename_first.source = c.extended;
    rename_first.target = ext2;
    {
        for (const auto& nm : c.algebra->evens) rename_first.even_images.push_back(v2(nm));
        rename_first.even_images.push_back(v2("xA"));
        for (const auto& nm : c.algebra->odds) rename_first.odd_images.push_back(v2(nm));
        rename_first.odd_images.push_back(v2("eA"));
    }
    QMap mu_id;
    mu_id.source = c.extended;
    mu_id.target = ext2;
    for (size_t i = 0; i < c.algebra->num_evens(); ++i)
        mu_id.even_images.push_back(substitute(rename_first, c.map.even_images[i]));
    mu_id.even_images.push_back(v2("xB"));
    for (size_t i = 0; i < c.algebra->num_odds(); ++i)
        mu_id.odd_images.push_back(substitute(rename_first, c.map.odd_images[i]));
    mu_id.odd_images.push_back(v2("eB"));

    // counit: x |-> 1, e |-> 0, base fixed
    QMap eps;
    eps.source = c.extended;
    eps.target = c.algebra;
    for (const auto& nm : c.algebra->evens)
        eps.even_images.push_back(QPoly::variable(c.algebra, nm));
    eps.even_images.push_back(QPoly::one(c.algebra));
    for (const auto& nm : c.algebra->odds)
        eps.odd_images.push_back(QPoly::variable(c.algebra, nm));
    eps.odd_images.push_back(QPoly::zero(c.algebra));

    auto check_gen = [&](const std::string& nm, const QPoly& image, const QPoly& gen) {
        QPoly lhs = substitute(id_m, image);
        QPoly rhs = substitute(mu_id, image);
        if (lhs != rhs)
            rep.fail("coassociativity fails on " + nm + ": " + lhs.render() +
                     " != " + rhs.render());
        QPoly back = substitute(eps, image);
        if (back != gen)
            rep.fail("counit fails on " + nm + ": " + back.render() + " != " + gen.render());
    };
    for (size_t i = 0; i < c.algebra->num_evens(); ++i)
        check_gen(c.algebra->evens[i], c.map.even_images[i],
                  QPoly::variable(c.algebra, c.algebra->evens[i]));
    for (size_t i = 0; i < c.algebra->num_odds(); ++i)
        check_gen(c.algebra->odds[i], c.map.odd_images[i],
                  QPoly::variable(c.algebra, c.algebra->odds[i]));
    return rep;
}

// ---------------------------------------------------------------------------
// Coactions of cdga type <-> connective gradings with differential
// ---------------------------------------------------------------------------

struct CdgaStructure {
    TablePtr algebra;
    std::vector<uint32_t> even_degrees;
    std::vector<uint32_t> odd_degrees;
    OddDerivation<Rational> d;

    uint32_t monomial_weight(const Monomial& m) const {
        uint32_t w = 0;
        for (size_t i = 0; i < m.even.size(); ++i) w += m.even[i] * even_degrees[i];
        uint64_t rest = m.odd;
        while (rest) {
            int bit = std::countr_zero(rest);
            rest &= rest - 1;
            w += odd_degrees[size_t(bit)];
        }
        return w;
    }
    bool weight_homogeneous(const QPoly& p, uint32_t w) const {
        for (const auto& [m, c] : p.terms())
            if (monomial_weight(m) != w) return false;
        return true;
    }
};

// Extract grading and differential from a coaction whose generator images all
// have the shape  g x^k + (dg) x^k e.  Throws std::domain_error when an image
// is not of that shape.
inline CdgaStructure coaction_to_cdga(const Coaction& c) {
    Report axioms = verify_coaction(c);
    if (!axioms.ok)
        throw std::domain_error("coaction_to_cdga: not a coaction: " + axioms.failures[0]);

    CdgaStructure out;
    out.algebra = c.algebra;
    out.d.table = c.algebra;
    size_t xi = c.x_index(), ei = c.e_index();

    auto extract = [&](const std::string& nm, const QPoly& image, const QPoly& gen,
                       uint32_t& deg_out) -> QPoly {
        // split the image as sum_k A_k x^k + sum_k B_k x^k e with A_k, B_k
        // over the base table
        std::map<uint32_t, QPoly> A, B;
        for (const auto& [m, coef] : image.terms()) {
            uint32_t k = m.even[xi];
            bool has_e = (m.odd >> ei) & 1;
            Monomial base = m;
            base.even.resize(xi);  // adjoined x is the last even slot
            base.odd &= ~(uint64_t(1) << ei);
            auto& bucket = has_e ? B : A;
            auto it = bucket.find(k);
            if (it == bucket.end()) it = bucket.emplace(k, QPoly(c.algebra)).first;
            // moving e to the very end of the monomial crosses no odd factors
            // (e is the last odd generator), so no sign adjustment is needed
            it->second.add_term(base, coef);
        }
        if (A.size() != 1)
            throw std::domain_error("coaction_to_cdga: image of " + nm +
                                    " is not of the shape g x^k + (dg) x^k e");
        auto [k0, body] = *A.begin();
        if (body != gen)
            throw std::domain_error("coaction_to_cdga: image of " + nm +
                                    " does not restrict to the generator");
        QPoly dg(c.algebra);
        for (const auto& [k, val] : B) {
            if (k != k0)
                throw std::domain_error("coaction_to_cdga: e-part of " + nm +
                                        " carries the wrong x power");
            dg = val;
        }
        deg_out = k0;
        return dg;
    };

    out.even_degrees.resize(c.algebra->num_evens());
    out.odd_degrees.resize(c.algebra->num_odds());
    for (size_t i = 0; i < c.algebra->num_evens(); ++i)
        out.d.even_images.push_back(extract(c.algebra->evens[i], c.map.even_images[i],
                                            QPoly::variable(c.algebra, c.algebra->evens[i]),
                                            out.even_degrees[i]));
    for (size_t i = 0; i < c.algebra->num_odds(); ++i)
        out.d.odd_images.push_back(extract(c.algebra->odds[i], c.map.odd_images[i],
                                           QPoly::variable(c.algebra, c.algebra->odds[i]),
                                           out.odd_degrees[i]));
    out.d.validate();

    // d raises degree by exactly one, and d^2 = 0
    for (size_t i = 0; i < c.algebra->num_evens(); ++i)
        if (!out.weight_homogeneous(out.d.even_images[i], out.even_degrees[i] + 1))
            throw std::domain_error("coaction_to_cdga: d does not raise degree by one on " +
                                    c.algebra->evens[i]);
    for (size_t i = 0; i < c.algebra->num_odds(); ++i)
        if (!out.weight_homogeneous(out.d.odd_images[i], out.odd_degrees[i] + 1))
            throw std::domain_error("coaction_to_cdga: d does not raise degree by one on " +
                                    c.algebra->odds[i]);
    for (size_t i = 0; i < c.algebra->num_evens(); ++i)
        if (!odd_derivation(out.d, out.d.even_images[i]).is_zero())
            throw std::domain_error("coaction_to_cdga: d^2 != 0");
    for (size_t i = 0; i < c.algebra->num_odds(); ++i)
        if (!odd_derivation(out.d, out.d.odd_images[i]).is_zero())
            throw std::domain_error("coaction_to_cdga: d^2 != 0");
    return out;
}

// The converse: g |-> g x^{deg g} + (dg) x^{deg g} e.
inline Coaction cdga_to_coaction(const CdgaStructure& s) {
    s.d.validate();
    for (size_t i = 0; i < s.algebra->num_evens(); ++i)
        if (!s.weight_homogeneous(s.d.even_images[i], s.even_degrees[i] + 1))
            throw std::invalid_argument("cdga_to_coaction: d is not of degree one");
    for (size_t i = 0; i < s.algebra->num_odds(); ++i)
        if (!s.weight_homogeneous(s.d.odd_images[i], s.odd_degrees[i] + 1))
            throw std::invalid_argument("cdga_to_coaction: d is not of degree one");

    TablePtr ext = extend_table(s.algebra, {"x"}, {"e"});
    QMap incl = rename_map<Rational>(s.algebra, ext);
    QPoly x = QPoly::variable(ext, "x");
    QPoly e = QPoly::variable(ext, "e");
    std::vector<QPoly> ev, od;
    for (size_t i = 0; i < s.algebra->num_evens(); ++i) {
        QPoly g = QPoly::variable(ext, s.algebra->evens[i]);
        QPoly dg = substitute(incl, s.d.even_images[i]);
        ev.push_back(g * x.pow(s.even_degrees[i]) + dg * x.pow(s.even_degrees[i]) * e);
    }
    for (size_t i = 0; i < s.algebra->num_odds(); ++i) {
        QPoly g = QPoly::variable(ext, s.algebra->odds[i]);
        QPoly dg = substitute(incl, s.d.odd_images[i]);
        od.push_back(g * x.pow(s.odd_degrees[i]) + dg * x.pow(s.odd_degrees[i]) * e);
    }
    return make_coaction(s.algebra, std::move(ev), std::move(od));
}

// ---------------------------------------------------------------------------
// The induced coaction on Sullivan forms
// ---------------------------------------------------------------------------

// Simplexwise image of a form under the canonical coaction; values live in
// the t-extended rings Omega(Delta^n)[x, e].
struct CoactionForms {
    SpacePtr space;
    std::vector<std::vector<QPoly>> values;  // [dim][id], over extend_table(form_table(dim))

    const QPoly& value(SimplexRef r) const { return values[size_t(r.dim)][size_t(r.id)]; }
};

// Omega(Delta^n)[x,e] -> Omega(Delta^m)[x,e] extending realize_forms by the
// identity on the adjoined pair.
inline QMap realize_forms_extended(const MonotoneMap& phi, int n) {
    QMap base = realize_forms(phi, n);
    int m = int(phi.size()) - 1;
    TablePtr src = extend_table(form_table(n), {"x"}, {"e"});
    TablePtr dst = extend_table(form_table(m), {"x"}, {"e"});
    QMap push = rename_map<Rational>(form_table(m), dst);
    QMap f;
    f.source = src;
    f.target = dst;
    for (const auto& img : base.even_images) f.even_images.push_back(substitute(push, img));
    f.even_images.push_back(QPoly::variable(dst, "x"));
    for (const auto& img : base.odd_images) f.odd_images.push_back(substitute(push, img));
    f.odd_images.push_back(QPoly::variable(dst, "e"));
    return f;
}

inline CoactionForms coaction_on_forms(const SullivanForm& a) {
    CoactionForms out;
    out.space = a.space();
    const auto& X = *a.space();
    out.values.resize(size_t(X.top_dim()) + 1);
    for (int d = 0; d <= X.top_dim(); ++d) {
        Coaction c = canonical_coaction(mapping_space_ring(d, 0));
        for (int id = 0; id < X.count(d); ++id)
            out.values[size_t(d)].push_back(substitute(c.map, a.value({d, id})));
    }
    return out;
}

// The simplexwise coaction of a compatible family is again compatible, i.e.
// the coaction restricts to Omega*(X) tensor Q[x,e].
inline Report check_coaction_forms_compatible(const CoactionForms& cf) {
    Report rep;
    const auto& X = *cf.space;
    for (int n = 1; n <= X.top_dim(); ++n) {
        for (int id = 0; id < X.count(n); ++id) {
            SimplexRef s{n, id};
            for (int i = 0; i <= n; ++i) {
                QPoly lhs = substitute(realize_forms_extended(coface_map(i, n), n), cf.value(s));
                const Face& f = X.stored_face(s, i);
                MonotoneMap alpha = word_to_surjection(f.degen, f.ref.dim);
                QPoly rhs =
                    substitute(realize_forms_extended(alpha, f.ref.dim), cf.value(f.ref));
                if (lhs != rhs)
                    rep.fail("coaction image incompatible at " + X.name(s) + ", face " +
                             std::to_string(i));
            }
        }
    }
    return rep;
}

}  // namespace superpoint
