// The five geometries on the superpoint (submonoids of its endomorphism
// monoid), the field-theory membership predicates they induce on Sullivan
// forms, and the twist families.
//
// On global functions the submonoid chain corresponds to the bialgebra
// quotients  R[x,e] -> R[x,x^-1,e] -> (RxR)[e] -> R[e] -> R.  Computationally
// a quotient is the list of specializations of the pair (x, e) under which
// two coaction values must agree: none for the (pre)topological geometries
// (exact polynomial identity), x = +-1 for Euclidean, x = 1 for oriented
// Euclidean, and x = 1, e = 0 for the fully rigid geometry.

#pragma once

#include <optional>
#include <variant>

#include "superpoint/coaction.hpp"
#include "superpoint/forms.hpp"

namespace superpoint {

enum class Geometry { pretopological, topological, euclidean, oriented_euclidean, fully_rigid };

inline std::string geometry_name(Geometry g) {
    switch (g) {
        case Geometry::pretopological: return "pretopological";
        case Geometry::topological: return "topological";
        case Geometry::euclidean: return "euclidean";
        case Geometry::oriented_euclidean: return "oriented_euclidean";
        case Geometry::fully_rigid: return "fully_rigid";
    }
    return "?";
}

inline Geometry geometry_from_name(const std::string& s) {
    for (Geometry g : {Geometry::pretopological, Geometry::topological, Geometry::euclidean,
                       Geometry::oriented_euclidean, Geometry::fully_rigid})
        if (geometry_name(g) == s) return g;
    throw std::invalid_argument("unknown geometry: " + s);
}

// One specialization of the adjoined pair: x evaluated (or kept), e kept or
// killed.
struct BialgebraSpecialization {
    std::optional<Rational> x_value;
    bool kill_e = false;
};

// The computational content of the bialgebra quotient for a geometry: two
// coaction values agree in the quotient iff they agree under every listed
// specialization.
struct GeometryBialgebra {
    Geometry geometry;
    std::string quotient;  // display form of the chain stage
    std::vector<BialgebraSpecialization> specializations;
};

inline GeometryBialgebra geometry_bialgebra(Geometry g) {
    switch (g) {
        case Geometry::pretopological:
            return {g, "R[x,e]", {BialgebraSpecialization{std::nullopt, false}}};
        case Geometry::topological:
            return {g, "R[x,x^-1,e]", {BialgebraSpecialization{std::nullopt, false}}};
        case Geometry::euclidean:
            return {g,
                    "(RxR)[e]",
                    {BialgebraSpecialization{Rational(1), false},
                     BialgebraSpecialization{Rational(-1), false}}};
        case Geometry::oriented_euclidean:
            return {g, "R[e]", {BialgebraSpecialization{Rational(1), false}}};
        case Geometry::fully_rigid:
            return {g, "R", {BialgebraSpecialization{Rational(1), true}}};
    }
    throw std::logic_error("geometry_bialgebra");
}

// Residual structure retained by the quotient, as used by the membership
// predicates.
enum class ResidualStructure {
    connective_grading_and_d,  // pretopological
    integer_grading_and_d,     // topological
    mod2_grading_and_d,        // Euclidean
    differential_only,         // oriented Euclidean
    none                       // fully rigid
};

inline ResidualStructure geometry_coaction(Geometry g) {
    switch (g) {
        case Geometry::pretopological: return ResidualStructure::connective_grading_and_d;
        case Geometry::topological: return ResidualStructure::integer_grading_and_d;
        case Geometry::euclidean: return ResidualStructure::mod2_grading_and_d;
        case Geometry::oriented_euclidean: return ResidualStructure::differential_only;
        case Geometry::fully_rigid: return ResidualStructure::none;
    }
    throw std::logic_error("geometry_coaction");
}

namespace detail {

// Specialize the adjoined (x, e) of an extended table; the base stays fixed.
inline QPoly specialize_pair(const TablePtr& ext, const QPoly& p,
                             const BialgebraSpecialization& s) {
    QMap f;
    f.source = ext;
    f.target = ext;
    for (size_t i = 0; i + 1 < ext->num_evens(); ++i)
        f.even_images.push_back(QPoly::even_variable(ext, i));
    f.even_images.push_back(s.x_value ? QPoly::constant(ext, *s.x_value)
                                      : QPoly::even_variable(ext, ext->num_evens() - 1));
    for (size_t i = 0; i + 1 < ext->num_odds(); ++i)
        f.odd_images.push_back(QPoly::odd_variable(ext, i));
    f.odd_images.push_back(s.kill_e ? QPoly::zero(ext)
                                    : QPoly::odd_variable(ext, ext->num_odds() - 1));
    return substitute(f, p);
}

inline bool equal_mod_geometry(Geometry g, const TablePtr& ext, const QPoly& p, const QPoly& q) {
    for (const auto& s : geometry_bialgebra(g).specializations)
        if (specialize_pair(ext, p, s) != specialize_pair(ext, q, s)) return false;
    return true;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Untwisted and degree-twisted membership (the direct characterizations)
// ---------------------------------------------------------------------------

inline bool parity_graded(const SullivanForm& a, uint32_t parity) {
    SullivanForm kept = SullivanForm::zero(a.space());
    for (uint32_t k = parity & 1; k <= max_degree(a); k += 2)
        kept = kept + degree_component(a, k);
    return kept == a;
}

// Membership in the untwisted field-theory set for the geometry: closed and
// degree zero for the (pre)topological geometries; closed of even degree for
// Euclidean; closed for oriented Euclidean; everything for fully rigid.
inline bool untwisted_membership(Geometry g, const SullivanForm& a) {
    switch (geometry_coaction(g)) {
        case ResidualStructure::connective_grading_and_d:
        case ResidualStructure::integer_grading_and_d:
            return is_closed(a) && degree_component(a, 0) == a;
        case ResidualStructure::mod2_grading_and_d:
            return is_closed(a) && parity_graded(a, 0);
        case ResidualStructure::differential_only:
            return is_closed(a);
        case ResidualStructure::none:
            return true;
    }
    return false;
}

// Membership in the degree-n twisted set: closed and homogeneous of degree n
// (topological), closed with all components congruent to n mod 2 (Euclidean),
// closed (oriented Euclidean), everything (fully rigid).
inline bool degree_twist_membership(Geometry g, int n, const SullivanForm& a) {
    switch (geometry_coaction(g)) {
        case ResidualStructure::connective_grading_and_d:
        case ResidualStructure::integer_grading_and_d:
            if (n < 0) return a.is_zero();
            return is_closed(a) && degree_component(a, uint32_t(n)) == a;
        case ResidualStructure::mod2_grading_and_d:
            return is_closed(a) && parity_graded(a, uint32_t(((n % 2) + 2) % 2));
        case ResidualStructure::differential_only:
            return is_closed(a);
        case ResidualStructure::none:
            return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Basic twists: coinvariance against a one-dimensional representation
// ---------------------------------------------------------------------------

// rho is an element of the endomorphism bialgebra Q[x|e]; for degree twists
// rho = x^n.  A form (valued in the free rank-1 module labelled by the twist)
// is coinvariant iff its simplexwise coaction image equals rho * a in the
// geometry's quotient.
inline bool rho_is_multiplicative(Geometry g, const QPoly& rho) {
    EndBialgebra B = end_bialgebra();
    if (!same_table(rho.table(), B.ring))
        throw std::invalid_argument("rho must live in the bialgebra ring Q[x|e]");
    QPoly lhs = substitute(B.comultiplication, rho);
    QMap leg1, leg2;
    leg1.source = B.ring;
    leg1.target = B.doubled;
    leg1.even_images = {QPoly::variable(B.doubled, "x1")};
    leg1.odd_images = {QPoly::variable(B.doubled, "e1")};
    leg2.source = B.ring;
    leg2.target = B.doubled;
    leg2.even_images = {QPoly::variable(B.doubled, "x2")};
    leg2.odd_images = {QPoly::variable(B.doubled, "e2")};
    QPoly rhs = substitute(leg1, rho) * substitute(leg2, rho);
    // compare in the quotient, independently in each tensor factor
    auto specs = geometry_bialgebra(g).specializations;
    for (const auto& s1 : specs) {
        for (const auto& s2 : specs) {
            QMap f;
            f.source = B.doubled;
            f.target = B.doubled;
            auto xv = [&](const BialgebraSpecialization& s, const char* nm) {
                return s.x_value ? QPoly::constant(B.doubled, *s.x_value)
                                 : QPoly::variable(B.doubled, nm);
            };
            auto ev = [&](const BialgebraSpecialization& s, const char* nm) {
                return s.kill_e ? QPoly::zero(B.doubled) : QPoly::variable(B.doubled, nm);
            };
            f.even_images = {xv(s1, "x1"), xv(s2, "x2")};
            f.odd_images = {ev(s1, "e1"), ev(s2, "e2")};
            if (substitute(f, lhs) != substitute(f, rhs)) return false;
        }
    }
    return true;
}

inline bool basic_twist_coinvariance(Geometry g, const QPoly& rho, const SullivanForm& a) {
    if (!rho_is_multiplicative(g, rho))
        throw std::invalid_argument("rho is not multiplicative under m* in this geometry");
    CoactionForms image = coaction_on_forms(a);
    const auto& X = *a.space();
    for (int d = 0; d <= X.top_dim(); ++d) {
        TablePtr ext = extend_table(form_table(d), {"x"}, {"e"});
        QMap rho_in = rename_map<Rational>(rho.table(), ext);
        QMap a_in = rename_map<Rational>(form_table(d), ext);
        QPoly rho_ext = substitute(rho_in, rho);
        for (int id = 0; id < X.count(d); ++id) {
            QPoly expected = rho_ext * substitute(a_in, a.value({d, id}));
            if (!detail::equal_mod_geometry(g, ext, image.value({d, id}), expected))
                return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Twist specifications and the twist-family membership predicates
// ---------------------------------------------------------------------------

struct DegreeFamily {
    int n = 0;
};
struct DifferentialFamily {
    int n = 0;  // the pair (omega, alpha) with omega of degree n-1 and alpha = d omega
};
// One row of the table of twist families for the geometry; parameters beyond
// the row's use are ignored.  Rows per geometry:
//   pretopological / topological:
//     1: omega in Omega^k, alpha in Omega^n, both closed
//     2: d omega = a omega^m ^ alpha, d alpha = 0, constraint k+1 = n + m k
//     3: d alpha = a omega^m, d omega = 0, constraint n+1 = k m
//   euclidean:
//     1: omega, alpha parity-homogeneous (parities pk, pn), both closed
//     2: omega even, alpha odd, d omega = f(omega) ^ alpha, d alpha = a, a f = 0
//     3: omega odd, alpha even, d alpha = 0, d omega = f(omega) ^ alpha, f even powers
//     4: omega even, alpha odd, d omega = 0, d alpha = f(omega)
//     5: omega odd, alpha even, d omega = 0, d alpha = f(omega), f odd powers
//   oriented_euclidean:
//     1: d omega = 0, d alpha = g(omega)
//     2: d omega = f(omega), d alpha = a, a f = 0
struct Table1Family {
    int row = 1;
    int k = 0, n = 0, m = 0;
    Rational a = 0;
    std::vector<Rational> f;  // coefficients of f (or g), f[j] the y^j coefficient
};

struct TwistSpec {
    Geometry geometry = Geometry::topological;
    std::variant<DegreeFamily, DifferentialFamily, Table1Family> family;
    std::string module_rank1_label = "L";
};

inline bool poly_param_is_zero(const std::vector<Rational>& f) {
    for (const auto& c : f)
        if (c != 0) return false;
    return true;
}

// Row constraints of the table; throws on violation.
inline void validate_twist(const TwistSpec& spec) {
    if (std::holds_alternative<DegreeFamily>(spec.family)) {
        int n = std::get<DegreeFamily>(spec.family).n;
        if (spec.geometry == Geometry::pretopological && n < 0)
            throw std::invalid_argument("parameter constraint violation: degree twists of the "
                                        "pretopological geometry need n >= 0");
        return;
    }
    if (std::holds_alternative<DifferentialFamily>(spec.family)) return;
    const Table1Family& t = std::get<Table1Family>(spec.family);
    auto constraint = [&](bool ok, const std::string& what) {
        if (!ok) throw std::invalid_argument("parameter constraint violation: " + what);
    };
    switch (spec.geometry) {
        case Geometry::pretopological:
        case Geometry::topological: {
            constraint(t.row >= 1 && t.row <= 3, "row must be 1..3");
            if (spec.geometry == Geometry::pretopological)
                constraint(t.k >= 0 && t.n >= 0 && t.m >= 0, "k, n, m must be natural");
            else
                constraint(t.m >= 0, "m must be natural");
            if (t.row == 2) constraint(t.k + 1 == t.n + t.m * t.k, "k+1 = n+mk");
            if (t.row == 3) constraint(t.n + 1 == t.k * t.m, "n+1 = km");
            break;
        }
        case Geometry::euclidean: {
            constraint(t.row >= 1 && t.row <= 5, "row must be 1..5");
            if (t.row == 2)
                constraint(t.a == 0 || poly_param_is_zero(t.f), "af = 0");
            if (t.row == 3)
                for (size_t j = 1; j < t.f.size(); j += 2)
                    constraint(t.f[j] == 0, "f must lie in R[y^2]");
            if (t.row == 5)
                for (size_t j = 0; j < t.f.size(); j += 2)
                    constraint(t.f[j] == 0, "f must be an odd polynomial");
            break;
        }
        case Geometry::oriented_euclidean: {
            constraint(t.row >= 1 && t.row <= 2, "row must be 1..2");
            if (t.row == 2)
                constraint(t.a == 0 || poly_param_is_zero(t.f), "af = 0");
            break;
        }
        case Geometry::fully_rigid:
            throw std::invalid_argument(
                "parameter constraint violation: the fully rigid geometry has no twist table");
    }
}

// f(omega) = sum_j f_j omega^(wedge j).
inline SullivanForm wedge_polynomial(const std::vector<Rational>& f, const SullivanForm& omega) {
    SullivanForm r = SullivanForm::zero(omega.space());
    SullivanForm power = SullivanForm::constant(omega.space(), Rational(1));
    for (size_t j = 0; j < f.size(); ++j) {
        if (j > 0) power = wedge(power, omega);
        if (f[j] != 0) r = r + f[j] * power;
    }
    return r;
}

inline bool even_form(const SullivanForm& a) { return parity_graded(a, 0); }
inline bool odd_form(const SullivanForm& a) { return parity_graded(a, 1); }

// Exact check of the row's differential equations on the pair (omega, alpha).
inline bool table1_membership(const TwistSpec& spec, const SullivanForm& omega,
                              const SullivanForm& alpha) {
    validate_twist(spec);
    require_same_space(omega, alpha);
    if (std::holds_alternative<DegreeFamily>(spec.family)) {
        // the closed pair at (k, n) = (n, n): one of the two must vanish on
        // simplicial-set forms; accept exactly the degree-twist condition
        int n = std::get<DegreeFamily>(spec.family).n;
        return degree_twist_membership(spec.geometry, n, omega) &&
               degree_twist_membership(spec.geometry, n, alpha);
    }
    if (std::holds_alternative<DifferentialFamily>(spec.family)) {
        int n = std::get<DifferentialFamily>(spec.family).n;
        if (n < 1) return omega.is_zero() && alpha.is_zero();
        return degree_component(omega, uint32_t(n - 1)) == omega && differential(omega) == alpha;
    }
    const Table1Family& t = std::get<Table1Family>(spec.family);
    auto homog = [&](const SullivanForm& w, int deg) {
        if (deg < 0) return w.is_zero();
        return degree_component(w, uint32_t(deg)) == w;
    };
    switch (spec.geometry) {
        case Geometry::pretopological:
        case Geometry::topological: {
            if (!homog(omega, t.k) || !homog(alpha, t.n)) return false;
            if (t.row == 1) return is_closed(omega) && is_closed(alpha);
            if (t.row == 2) {
                SullivanForm pow = SullivanForm::constant(omega.space(), Rational(1));
                for (int j = 0; j < t.m; ++j) pow = wedge(pow, omega);
                return is_closed(alpha) &&
                       differential(omega) == t.a * wedge(pow, alpha);
            }
            SullivanForm pow = SullivanForm::constant(omega.space(), Rational(1));
            for (int j = 0; j < t.m; ++j) pow = wedge(pow, omega);
            return is_closed(omega) && differential(alpha) == t.a * pow;
        }
        case Geometry::euclidean: {
            switch (t.row) {
                case 1: {
                    bool homog_omega = even_form(omega) || odd_form(omega);
                    bool homog_alpha = even_form(alpha) || odd_form(alpha);
                    return homog_omega && homog_alpha && is_closed(omega) && is_closed(alpha);
                }
                case 2:
                    return even_form(omega) && odd_form(alpha) &&
                           differential(omega) == wedge(wedge_polynomial(t.f, omega), alpha) &&
                           differential(alpha) ==
                               t.a * SullivanForm::constant(omega.space(), Rational(1));
                case 3:
                    return odd_form(omega) && even_form(alpha) && is_closed(alpha) &&
                           differential(omega) == wedge(wedge_polynomial(t.f, omega), alpha);
                case 4:
                    return even_form(omega) && odd_form(alpha) && is_closed(omega) &&
                           differential(alpha) == wedge_polynomial(t.f, omega);
                case 5:
                    return odd_form(omega) && even_form(alpha) && is_closed(omega) &&
                           differential(alpha) == wedge_polynomial(t.f, omega);
            }
            return false;
        }
        case Geometry::oriented_euclidean: {
            if (t.row == 1)
                return is_closed(omega) && differential(alpha) == wedge_polynomial(t.f, omega);
            return differential(omega) == wedge_polynomial(t.f, omega) &&
                   differential(alpha) == t.a * SullivanForm::constant(omega.space(), Rational(1));
        }
        case Geometry::fully_rigid:
            return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Bordisms over X: structural bookkeeping only
// ---------------------------------------------------------------------------

// The bordism monoid over X is the free commutative monoid on the quotient
// Map(A^{0|1}, X)/M; its k-th piece is the k-fold symmetric power of the
// generator.
struct BordismPiece {
    int k = 0;
    BigInt symmetric_group_order = 1;
    std::string description;
};

inline BordismPiece bordism_generators(const SpacePtr& X, int k) {
    if (k < 0) throw std::invalid_argument("bordism_generators: k >= 0");
    BordismPiece p;
    p.k = k;
    for (int i = 2; i <= k; ++i) p.symmetric_group_order *= i;
    if (k == 0)
        p.description = "unit component";
    else if (k == 1)
        p.description = "the generator Map(A^{0|1}, X)/M with function ring Omega*(X)";
    else
        p.description = "symmetric power Sym^" + std::to_string(k) +
                        " of the generator (quotient by the symmetric group of order " +
                        p.symmetric_group_order.str() + ")";
    (void)X;
    return p;
}

}  // namespace superpoint
