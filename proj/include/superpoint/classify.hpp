// The classification of (co)actions of the three monoids (the full
// endomorphism monoid of the superpoint, its Z/2 subgroup extension, and the
// odd translations) on the superline A^{1|1}, in executable form: symbolic
// verification of candidates, the closed-form families, and an exhaustive
// bounded-degree search that confirms the families are complete over a prime
// field or a small integer grid.
//
// A candidate is the generator-image data
//     y |-> f0(x,y) + f1(x,y) e d,     e |-> g0(x,y) e + g1(x,y) d,
// with e the odd coordinate of A^{1|1} and (x, d) the coordinates of the
// acting monoid.  For the Z/2 monoid x^2 = 1 (exponents are kept reduced and
// identities are checked at x = +-1); for the odd monoid there is no x.
//
// The search is layered along the structure of the coassociativity system:
// the equations for f0 close on their own, then g0 given f0, and the rest is
// linear in (f1, g1) apart from products f1*g1 that force one of the two to
// vanish.  Rows of f0 and g0 are enumerated by descending y-degree with the
// leading-coefficient equations checked first, which kills every row of
// y-degree >= 2 outright.  For a fixed (f0, g0) the solutions on each side
// form a linear space, and so does each family, so completeness of the
// family tables is decided exactly on kernel bases even when the full
// pointwise enumeration over F_p is truncated.

#pragma once

#include <algorithm>
#include <functional>
#include <optional>

#include "superpoint/linalg.hpp"
#include "superpoint/superalg.hpp"

namespace superpoint {

enum class MonoidKind { full, z2, odd };

inline std::string monoid_name(MonoidKind m) {
    switch (m) {
        case MonoidKind::full: return "full";
        case MonoidKind::z2: return "z2";
        case MonoidKind::odd: return "odd";
    }
    return "?";
}

inline MonoidKind monoid_from_name(const std::string& s) {
    if (s == "full") return MonoidKind::full;
    if (s == "z2") return MonoidKind::z2;
    if (s == "odd") return MonoidKind::odd;
    throw std::invalid_argument("unknown monoid: " + s + " (expected full|z2|odd)");
}

template <class C>
struct ActionCandidate {
    TablePtr xy;  // evens {x, y}
    SuperPolynomial<C> f0, f1, g0, g1;

    friend bool operator==(const ActionCandidate& a, const ActionCandidate& b) {
        return a.f0 == b.f0 && a.f1 == b.f1 && a.g0 == b.g0 && a.g1 == b.g1;
    }
};

inline TablePtr candidate_table() { return make_table({"x", "y"}, {}); }

template <class C>
ActionCandidate<C> make_candidate(SuperPolynomial<C> f0, SuperPolynomial<C> f1,
                                  SuperPolynomial<C> g0, SuperPolynomial<C> g1) {
    ActionCandidate<C> c;
    c.xy = f0.table();
    c.f0 = std::move(f0);
    c.f1 = std::move(f1);
    c.g0 = std::move(g0);
    c.g1 = std::move(g1);
    return c;
}

namespace classify_detail {

// x-exponents reduced mod 2 (the Z/2 quotient x^2 = 1)
template <class C>
SuperPolynomial<C> reduce_x_mod2(const SuperPolynomial<C>& p) {
    SuperPolynomial<C> r(p.table());
    for (const auto& [m, c] : p.terms()) {
        Monomial mm = m;
        mm.even[0] &= 1;
        r.add_term(mm, c);
    }
    return r;
}

template <class C>
bool x_free(const SuperPolynomial<C>& p) {
    for (const auto& [m, c] : p.terms())
        if (m.even[0] != 0) return false;
    return true;
}

// the shared verification ring: evens {y, x1, x2}, odds {e, d1, d2}
inline TablePtr big_table() { return make_table({"y", "x1", "x2"}, {"e", "d1", "d2"}); }

// f(X, Y) for even big-ring polynomials X, Y
template <class C>
SuperPolynomial<C> at(const SuperPolynomial<C>& f, const TablePtr& big,
                      const SuperPolynomial<C>& X, const SuperPolynomial<C>& Y) {
    AlgebraMap<C> sub;
    sub.source = f.table();
    sub.target = big;
    sub.even_images = {X, Y};
    return substitute(sub, f);
}

template <class C>
bool equal_mod_monoid(MonoidKind monoid, const TablePtr& big, const SuperPolynomial<C>& P,
                      const SuperPolynomial<C>& Q) {
    if (monoid == MonoidKind::full) return P == Q;
    std::vector<std::pair<C, C>> combos;
    if (monoid == MonoidKind::z2)
        combos = {{C(1), C(1)}, {C(1), C(-1)}, {C(-1), C(1)}, {C(-1), C(-1)}};
    else
        combos = {{C(1), C(1)}};
    for (const auto& [s1, s2] : combos) {
        AlgebraMap<C> f;
        f.source = big;
        f.target = big;
        f.even_images = {SuperPolynomial<C>::variable(big, "y"),
                         SuperPolynomial<C>::constant(big, s1),
                         SuperPolynomial<C>::constant(big, s2)};
        f.odd_images = {SuperPolynomial<C>::variable(big, "e"),
                        SuperPolynomial<C>::variable(big, "d1"),
                        SuperPolynomial<C>::variable(big, "d2")};
        if (substitute(f, P) != substitute(f, Q)) return false;
    }
    return true;
}

}  // namespace classify_detail

// Both composites of the coassociativity square plus the counit condition,
// expanded symbolically; the report carries the first discrepancy.
template <class C>
Report verify_action(const ActionCandidate<C>& cand, MonoidKind monoid) {
    using namespace classify_detail;
    using Poly = SuperPolynomial<C>;
    Report rep;

    ActionCandidate<C> c = cand;
    if (monoid == MonoidKind::z2) {
        c.f0 = reduce_x_mod2(c.f0);
        c.f1 = reduce_x_mod2(c.f1);
        c.g0 = reduce_x_mod2(c.g0);
        c.g1 = reduce_x_mod2(c.g1);
    }
    if (monoid == MonoidKind::odd) {
        if (!x_free(c.f0) || !x_free(c.f1) || !x_free(c.g0) || !x_free(c.g1))
            rep.fail("odd-monoid candidates must not involve x");
        if (!rep.ok) return rep;
    }

    TablePtr big = big_table();
    auto v = [&](const char* nm) { return Poly::variable(big, nm); };
    Poly y = v("y"), x1 = v("x1"), x2 = v("x2"), e = v("e"), d1 = v("d1"), d2 = v("d2");

    // counit: x -> 1, d -> 0 must recover the identity
    {
        AlgebraMap<C> unit;
        unit.source = c.xy;
        unit.target = big;
        unit.even_images = {Poly::one(big), y};
        Poly f0_1 = substitute(unit, c.f0);
        Poly g0_1 = substitute(unit, c.g0);
        if (f0_1 != y) rep.fail("counit fails on y: f0(1,y) = " + f0_1.render());
        if (g0_1 != Poly::one(big)) rep.fail("counit fails on e: g0(1,y) = " + g0_1.render());
    }

    // path 1: apply mu*, then the comultiplication x -> x1 x2, d -> d1 + x1 d2
    Poly x12 = x1 * x2;
    Poly md = d1 + x1 * d2;
    Poly p1_y = at(c.f0, big, x12, y) + at(c.f1, big, x12, y) * e * md;
    Poly p1_e = at(c.g0, big, x12, y) * e + at(c.g1, big, x12, y) * md;

    // path 2: apply mu* producing the pair (x1, d1), then again with (x2, d2)
    Poly mu1_y = at(c.f0, big, x1, y) + at(c.f1, big, x1, y) * e * d1;
    Poly mu1_e = at(c.g0, big, x1, y) * e + at(c.g1, big, x1, y) * d1;
    Poly p2_y = at(c.f0, big, x2, mu1_y) + at(c.f1, big, x2, mu1_y) * mu1_e * d2;
    Poly p2_e = at(c.g0, big, x2, mu1_y) * mu1_e + at(c.g1, big, x2, mu1_y) * d2;

    if (!equal_mod_monoid(monoid, big, p1_y, p2_y))
        rep.fail("coassociativity fails on y: " + p1_y.render() + " != " + p2_y.render());
    if (!equal_mod_monoid(monoid, big, p1_e, p2_e))
        rep.fail("coassociativity fails on e: " + p1_e.render() + " != " + p2_e.render());
    return rep;
}

// ---------------------------------------------------------------------------
// The closed-form families
// ---------------------------------------------------------------------------

// One family instance.  `side` 0: f1 = g1 = 0 (the pure degree pair); 1: the
// f1 side is nonzero; 2: the g1 side.  For the full monoid the f1 side is the
// monomial a x^k y^m under k+1 = n+mk when k >= 1 and a free polynomial p(y)
// at (k,n) = (0,1); the g1 side is a x^n y^m under n+1 = km.  For the Z/2
// monoid the rows carry a polynomial parameter whose side conditions are
// parity conditions on its coefficients; for the odd monoid exactly one of
// f1, g1 is a free polynomial in y.
template <class C>
struct ActionFamily {
    MonoidKind monoid = MonoidKind::full;
    int side = 0;
    int k = 0, n = 0, m = 0;
    C a = C(0);
    std::vector<C> p;  // y-coefficients of the polynomial parameter

    ActionCandidate<C> to_candidate() const {
        TablePtr xy = candidate_table();
        using Poly = SuperPolynomial<C>;
        Poly x = Poly::variable(xy, "x");
        Poly y = Poly::variable(xy, "y");
        Poly poly = Poly::zero(xy);
        for (size_t j = 0; j < p.size(); ++j)
            if (!coeff_is_zero(p[j])) poly += p[j] * y.pow(uint32_t(j));
        Poly f0 = x.pow(uint32_t(k)) * y;
        Poly g0 = x.pow(uint32_t(n));
        Poly f1 = Poly::zero(xy), g1 = Poly::zero(xy);
        if (monoid == MonoidKind::full) {
            if (side == 1) {
                if (k >= 1)
                    f1 = a * x.pow(uint32_t(k)) * y.pow(uint32_t(m));
                else
                    f1 = poly;  // (k,n) = (0,1), free polynomial
            } else if (side == 2) {
                g1 = a * x.pow(uint32_t(n)) * y.pow(uint32_t(m));
            }
        } else if (monoid == MonoidKind::z2) {
            int xexp = (side == 1) ? ((k == 1) ? 1 : 0) : ((n == 1) ? 1 : 0);
            Poly tail = (xexp == 1) ? poly * x : poly;
            if (side == 1) f1 = tail;
            if (side == 2) g1 = tail;
        } else {  // odd monoid: f0 = y, g0 = 1
            if (side == 1) f1 = poly;
            if (side == 2) g1 = poly;
        }
        return make_candidate<C>(f0, f1, g0, g1);
    }
};

// All family instances with exponents and polynomial degrees within the
// bounds and scalars drawn from `scalars` (zero omitted on the twisted
// sides).  Every returned instance passes verify_action.
template <class C>
std::vector<ActionFamily<C>> enumerate_families(MonoidKind monoid, int max_exp, int max_deg,
                                                const std::vector<C>& scalars) {
    std::vector<ActionFamily<C>> out;
    auto nonzero = [&](const C& c) { return !coeff_is_zero(c); };
    auto monomial_p = [&](int m, const C& a) {
        std::vector<C> p(size_t(m) + 1, C(0));
        p[size_t(m)] = a;
        return p;
    };
    if (monoid == MonoidKind::full) {
        for (int k = 0; k <= max_exp; ++k)
            for (int n = 0; n <= max_exp; ++n)
                out.push_back({monoid, 0, k, n, 0, C(0), {}});
        for (int k = 1; k <= max_exp; ++k)
            for (int m = 0; m <= max_deg; ++m) {
                int n = k + 1 - m * k;
                if (n < 0 || n > max_exp) continue;
                for (const C& a : scalars)
                    if (nonzero(a)) out.push_back({monoid, 1, k, n, m, a, {}});
            }
        for (int m = 0; m <= max_deg; ++m)  // (k,n) = (0,1): free polynomial
            for (const C& a : scalars)
                if (nonzero(a)) out.push_back({monoid, 1, 0, 1, m, a, monomial_p(m, a)});
        for (int m = 1; m <= max_deg; ++m)
            for (int n = 0; n <= max_exp; ++n) {
                if ((n + 1) % m != 0) continue;
                int k = (n + 1) / m;
                if (k > max_exp) continue;
                for (const C& a : scalars)
                    if (nonzero(a)) out.push_back({monoid, 2, k, n, m, a, {}});
            }
    } else if (monoid == MonoidKind::z2) {
        for (int k = 0; k <= 1; ++k)
            for (int n = 0; n <= 1; ++n)
                out.push_back({monoid, 0, k, n, 0, C(0), {}});
        struct Row {
            int side, k, n, parity;  // parity of p: -1 free, 0 even, 1 odd
        };
        // f side: (0,1) free, (1,0) even, (1,1) odd
        // g side: (0,1) free, (1,0) odd, (1,1) even
        for (const Row& r : {Row{1, 0, 1, -1}, Row{1, 1, 0, 0}, Row{1, 1, 1, 1},
                             Row{2, 0, 1, -1}, Row{2, 1, 0, 1}, Row{2, 1, 1, 0}})
            for (int m = 0; m <= max_deg; ++m) {
                if (r.parity >= 0 && m % 2 != r.parity) continue;
                for (const C& a : scalars)
                    if (nonzero(a))
                        out.push_back({monoid, r.side, r.k, r.n, m, a, monomial_p(m, a)});
            }
    } else {
        out.push_back({monoid, 0, 0, 0, 0, C(0), {}});
        for (int side : {1, 2})
            for (int m = 0; m <= max_deg; ++m)
                for (const C& a : scalars)
                    if (nonzero(a))
                        out.push_back({monoid, side, 0, 0, m, a, monomial_p(m, a)});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Normalization and family matching
// ---------------------------------------------------------------------------

// Conjugation by y |-> y + c (an isomorphism of A^{1|1}): each component
// polynomial h(x,y) becomes h(x, y-c), with f0 shifted back by +c.
template <class C>
ActionCandidate<C> conjugate_by_shift(const ActionCandidate<C>& cand, const C& c) {
    using Poly = SuperPolynomial<C>;
    AlgebraMap<C> shift;  // y -> y - c
    shift.source = cand.xy;
    shift.target = cand.xy;
    shift.even_images = {Poly::variable(cand.xy, "x"),
                         Poly::variable(cand.xy, "y") - Poly::constant(cand.xy, c)};
    ActionCandidate<C> out = cand;
    out.f0 = substitute(shift, cand.f0) + Poly::constant(cand.xy, c);
    out.f1 = substitute(shift, cand.f1);
    out.g0 = substitute(shift, cand.g0);
    out.g1 = substitute(shift, cand.g1);
    return out;
}

namespace classify_detail {

template <class C>
bool is_monomial_times_scalar(const SuperPolynomial<C>& h, int* xexp, int* yexp, C* coef) {
    if (h.is_zero() || h.num_terms() != 1) return false;
    const auto& [m, c] = *h.terms().begin();
    *xexp = int(m.even[0]);
    *yexp = int(m.even[1]);
    *coef = c;
    return true;
}

// h = p(y) x^i for a nonzero polynomial p with the requested parity
// (-1 any, 0 even, 1 odd)
template <class C>
bool is_xpower_times_ypoly(const SuperPolynomial<C>& h, int xexp, int parity) {
    if (h.is_zero()) return false;
    for (const auto& [m, c] : h.terms()) {
        if (int(m.even[0]) != xexp) return false;
        if (parity >= 0 && int(m.even[1]) % 2 != parity) return false;
    }
    return true;
}

}  // namespace classify_detail

// The shift c for which f0 has the form x^k y + c x^k - c; nullopt when f0 is
// not of that shape.
template <class C>
std::optional<C> normalization_shift(const ActionCandidate<C>& cand) {
    using Poly = SuperPolynomial<C>;
    Poly ypart(cand.xy), yfree(cand.xy);
    for (const auto& [m, c] : cand.f0.terms()) {
        Monomial mm = m;
        if (m.even[1] == 1) {
            mm.even[1] = 0;
            ypart.add_term(mm, c);
        } else if (m.even[1] == 0) {
            yfree.add_term(mm, c);
        } else {
            return std::nullopt;
        }
    }
    int k, j;
    C lead;
    if (!classify_detail::is_monomial_times_scalar(ypart, &k, &j, &lead) || !(lead == C(1)))
        return std::nullopt;
    if (yfree.is_zero()) return C(0);
    if (k == 0) return std::nullopt;
    Poly x = Poly::variable(cand.xy, "x");
    for (const auto& [m, c] : yfree.terms()) {
        if (int(m.even[0]) == k) {
            if (yfree == c * (x.pow(uint32_t(k)) - Poly::one(cand.xy))) return c;
            return std::nullopt;
        }
    }
    return std::nullopt;
}

// Does the normalized candidate lie in one of the closed-form families?  For
// a fixed (f0, g0) and side, the family is a linear space, so this predicate
// is exact on spans as well as on single instances.
template <class C>
bool matches_family(const ActionCandidate<C>& normalized, MonoidKind monoid) {
    using namespace classify_detail;
    const ActionCandidate<C>& c = normalized;
    int k, n, j;
    C cf;
    {
        SuperPolynomial<C> ylin(c.xy);
        for (const auto& [m, co] : c.f0.terms()) {
            if (m.even[1] != 1) return false;
            Monomial mm = m;
            mm.even[1] = 0;
            ylin.add_term(mm, co);
        }
        if (!is_monomial_times_scalar(ylin, &k, &j, &cf) || !(cf == C(1))) return false;
    }
    if (!is_monomial_times_scalar(c.g0, &n, &j, &cf) || j != 0 || !(cf == C(1))) return false;
    if (!c.f1.is_zero() && !c.g1.is_zero()) return false;

    switch (monoid) {
        case MonoidKind::full: {
            if (c.f1.is_zero() && c.g1.is_zero()) return true;
            if (!c.f1.is_zero()) {
                if (k == 0) return n == 1 && is_xpower_times_ypoly(c.f1, 0, -1);
                int xe, ye;
                C a;
                return is_monomial_times_scalar(c.f1, &xe, &ye, &a) && xe == k &&
                       k + 1 == n + ye * k;
            }
            int xe, ye;
            C b;
            return is_monomial_times_scalar(c.g1, &xe, &ye, &b) && xe == n && n + 1 == k * ye;
        }
        case MonoidKind::z2: {
            if (k > 1 || n > 1) return false;
            if (c.f1.is_zero() && c.g1.is_zero()) return true;
            if (!c.f1.is_zero()) {
                if (k == 0 && n == 1) return is_xpower_times_ypoly(c.f1, 0, -1);
                if (k == 1 && n == 0) return is_xpower_times_ypoly(c.f1, 1, 0);
                if (k == 1 && n == 1) return is_xpower_times_ypoly(c.f1, 1, 1);
                return false;
            }
            if (k == 0 && n == 1) return is_xpower_times_ypoly(c.g1, 1, -1);
            if (k == 1 && n == 0) return is_xpower_times_ypoly(c.g1, 0, 1);
            if (k == 1 && n == 1) return is_xpower_times_ypoly(c.g1, 1, 0);
            return false;
        }
        case MonoidKind::odd: {
            if (k != 0 || n != 0) return false;
            if (c.f1.is_zero() && c.g1.is_zero()) return true;
            if (!c.f1.is_zero()) return is_xpower_times_ypoly(c.f1, 0, -1);
            return is_xpower_times_ypoly(c.g1, 0, -1);
        }
    }
    return false;
}

template <class C>
bool matches_family_up_to_shift(const ActionCandidate<C>& cand, MonoidKind monoid) {
    if (matches_family(cand, monoid)) return true;
    auto c = normalization_shift(cand);
    if (!c) return false;
    // conjugating by the extracted shift c turns x^k y + c x^k - c into x^k y
    return matches_family(conjugate_by_shift(cand, *c), monoid);
}

// ---------------------------------------------------------------------------
// Lemma check: multiplicative polynomials are monomials
// ---------------------------------------------------------------------------

// True iff p(x1 x2) = p(x1) p(x2) symbolically; over a field this forces
// p = x^n, which is asserted for nonzero p.
template <class C>
bool monomial_lemma_check(const SuperPolynomial<C>& p) {
    if (p.table()->num_evens() != 1 || p.table()->num_odds() != 0)
        throw std::invalid_argument("monomial_lemma_check: p must be univariate");
    TablePtr pair = make_table({"x1", "x2"}, {});
    using Poly = SuperPolynomial<C>;
    AlgebraMap<C> both, left, right;
    both.source = left.source = right.source = p.table();
    both.target = left.target = right.target = pair;
    both.even_images = {Poly::variable(pair, "x1") * Poly::variable(pair, "x2")};
    left.even_images = {Poly::variable(pair, "x1")};
    right.even_images = {Poly::variable(pair, "x2")};
    bool multiplicative = substitute(both, p) == substitute(left, p) * substitute(right, p);
    if (multiplicative && !p.is_zero()) {
        if (p.num_terms() != 1 || !(p.terms().begin()->second == C(1)))
            throw std::logic_error("monomial_lemma_check: multiplicative but not a monomial");
    }
    return multiplicative;
}

// ---------------------------------------------------------------------------
// Exhaustive bounded search
// ---------------------------------------------------------------------------

template <class C>
struct SearchOptions {
    int degree = 1;                    // max degree in each of x and y
    std::vector<C> values;             // the coefficient enumeration set
    bool values_form_a_field = false;  // kernels stay inside the set
    uint64_t stream_cap = 4096;        // max kernel elements enumerated pointwise
    uint64_t candidate_cap = 100000;   // max stored candidates
    uint64_t work_cap = 50000000;      // resource guard on row enumeration
};

template <class C>
struct SearchResult {
    std::vector<ActionCandidate<C>> candidates;  // sorted, possibly truncated
    uint64_t total_count = 0;                    // exact solution count
    bool truncated = false;
    uint64_t outside_families = 0;  // kernel basis elements failing the family match
};

namespace classify_detail {

template <class C>
C eval_univariate(const std::vector<C>& coeffs, const C& x) {
    C acc(0);
    for (size_t j = coeffs.size(); j-- > 0;) acc = acc * x + coeffs[j];
    return acc;
}

// distinct sample points for identity checking by evaluation; for the Z/2
// quotient the points are exactly +-1 (complete there), for the others the
// count covers the degrees in play so that checks are complete
template <class C>
std::vector<C> sample_points(MonoidKind monoid, int needed, const std::vector<C>& values) {
    if (monoid == MonoidKind::z2) return {C(1), C(-1)};
    if (monoid == MonoidKind::odd) return {C(1)};
    std::vector<C> pts;
    auto push_unique = [&](const C& v) {
        for (const C& w : pts)
            if (w == v) return;
        pts.push_back(v);
    };
    for (const C& v : values) {
        push_unique(v);
        if (int(pts.size()) >= needed) return pts;
    }
    for (long long k = 2; int(pts.size()) < needed; ++k) push_unique(C(k));
    return pts;
}

template <class C>
void enumerate_vectors(const std::vector<C>& values, size_t len,
                       const std::function<void(const std::vector<C>&)>& visit) {
    std::vector<C> cur(len, C(0));
    std::vector<size_t> idx(len, 0);
    for (;;) {
        for (size_t i = 0; i < len; ++i) cur[i] = values[idx[i]];
        visit(cur);
        size_t pos = 0;
        while (pos < len && ++idx[pos] == values.size()) idx[pos++] = 0;
        if (pos == len) break;
    }
}

template <class C>
SuperPolynomial<C> from_xy_coeffs(const TablePtr& xy, const std::vector<std::vector<C>>& rows) {
    SuperPolynomial<C> p(xy);
    for (size_t j = 0; j < rows.size(); ++j)
        for (size_t i = 0; i < rows[j].size(); ++i)
            if (!coeff_is_zero(rows[j][i])) {
                Monomial m;
                m.even = {uint32_t(i), uint32_t(j)};
                p.add_term(m, rows[j][i]);
            }
    return p;
}

inline uint64_t saturating_pow(uint64_t base, size_t exp, uint64_t cap) {
    uint64_t r = 1;
    for (size_t i = 0; i < exp; ++i) {
        if (r > cap / std::max<uint64_t>(base, 1)) return cap + 1;
        r *= base;
    }
    return r;
}

}  // namespace classify_detail

// Every candidate with all four polynomials of degree <= degree in each
// variable over the given coefficient set that satisfies the coassociativity
// and counit equations.  The exact solution count is always reported; the
// stored candidate list is truncated to basis representatives when a kernel
// is too large to stream.  `outside_families` counts solutions outside the
// normalized family tables (zero is the expected classification result).
template <class C>
SearchResult<C> exhaustive_search(MonoidKind monoid, const SearchOptions<C>& opt) {
    using namespace classify_detail;
    using Poly = SuperPolynomial<C>;
    if (opt.degree > 3)
        throw std::invalid_argument("exhaustive_search: degree bound too large (max 3)");
    if (opt.values.size() < 2)
        throw std::invalid_argument("exhaustive_search: need at least two coefficient values");
    int Dy = opt.degree;
    int Dx = (monoid == MonoidKind::full) ? opt.degree : (monoid == MonoidKind::z2 ? 1 : 0);
    size_t row_len = size_t(Dx) + 1;
    uint64_t row_space = saturating_pow(opt.values.size(), row_len, opt.work_cap);
    if (row_space > opt.work_cap)
        throw std::invalid_argument("exhaustive_search: bound too large for the value set");

    TablePtr xy = candidate_table();
    // The row identities below have degree at most Dx(Dy+1) in each variable,
    // so evaluation on that many distinct points is a complete check.  Small
    // fields may not have enough points; in that case the identities are
    // verified symbolically (such searches are tiny anyway).  For the Z/2
    // quotient the points +-1 are complete by definition.
    int needed = Dx * (Dy + 1) + 1;
    std::vector<C> pts = sample_points<C>(monoid, needed, opt.values);
    bool pts_complete = (monoid != MonoidKind::full) || int(pts.size()) >= needed;

    TablePtr pair_table = make_table({"x1", "x2"}, {});
    auto row_poly = [&](const std::vector<C>& row, const char* var) {
        using Poly = SuperPolynomial<C>;
        AlgebraMap<C> into;
        TablePtr single = make_table({"x"}, {});
        into.source = single;
        into.target = pair_table;
        into.even_images = {Poly::variable(pair_table, var)};
        Poly p(single);
        for (size_t i = 0; i < row.size(); ++i)
            if (!coeff_is_zero(row[i])) {
                Monomial m;
                m.even = {uint32_t(i)};
                p.add_term(m, row[i]);
            }
        return substitute(into, p);
    };
    auto row_poly_at_product = [&](const std::vector<C>& row) {
        using Poly = SuperPolynomial<C>;
        Poly prod = Poly::variable(pair_table, "x1") * Poly::variable(pair_table, "x2");
        Poly acc = Poly::zero(pair_table);
        for (size_t i = row.size(); i-- > 0;) acc = acc * prod + Poly::constant(pair_table, row[i]);
        return acc;
    };

    // --- stage 1: f0 -------------------------------------------------------
    // rows of y-degree t >= 2 die against the leading equation at y-degree
    // t^2:  0 = c_t(x2) c_t(x1)^t  has no nonzero solution over a field
    for (int t = Dy; t >= 2; --t) {
        enumerate_vectors<C>(opt.values, row_len, [&](const std::vector<C>& row) {
            bool all_zero = true;
            for (const C& c : row) all_zero = all_zero && coeff_is_zero(c);
            if (all_zero) return;
            if (pts_complete) {
                for (const C& s1 : pts)
                    for (const C& s2 : pts) {
                        C w = eval_univariate(row, s1);
                        C prod = eval_univariate(row, s2);
                        for (int i = 0; i < t; ++i) prod = prod * w;
                        if (!coeff_is_zero(prod)) return;  // row pruned
                    }
            } else {
                auto p1 = row_poly(row, "x1");
                auto p2 = row_poly(row, "x2");
                if (!(p2 * p1.pow(uint32_t(t))).is_zero()) return;
            }
            throw std::logic_error("exhaustive_search: leading row of y-degree >= 2 survived");
        });
    }

    // rows for c1: multiplicative with c1(1) = 1
    auto multiplicative_unit_rows = [&]() {
        std::vector<std::vector<C>> rows;
        enumerate_vectors<C>(opt.values, row_len, [&](const std::vector<C>& row) {
            if (!(eval_univariate(row, C(1)) == C(1))) return;
            if (pts_complete) {
                for (const C& s1 : pts)
                    for (const C& s2 : pts)
                        if (!(eval_univariate(row, C(s1 * s2)) ==
                              eval_univariate(row, s1) * eval_univariate(row, s2)))
                            return;
            } else {
                if (!(row_poly_at_product(row) == row_poly(row, "x1") * row_poly(row, "x2")))
                    return;
            }
            rows.push_back(row);
        });
        return rows;
    };
    std::vector<std::vector<C>> c1_rows = multiplicative_unit_rows();

    // rows for c0: c0(x1 x2) = c0(x2) + c1(x2) c0(x1) with c0(1) = 0
    struct F0Rows {
        std::vector<C> c0, c1;
    };
    std::vector<F0Rows> f0_list;
    for (const auto& c1 : c1_rows) {
        enumerate_vectors<C>(opt.values, row_len, [&](const std::vector<C>& row) {
            if (!coeff_is_zero(eval_univariate(row, C(1)))) return;
            if (pts_complete) {
                for (const C& s1 : pts)
                    for (const C& s2 : pts)
                        if (!(eval_univariate(row, C(s1 * s2)) ==
                              eval_univariate(row, s2) +
                                  eval_univariate(c1, s2) * eval_univariate(row, s1)))
                            return;
            } else {
                if (!(row_poly_at_product(row) ==
                      row_poly(row, "x2") + row_poly(c1, "x2") * row_poly(row, "x1")))
                    return;
            }
            f0_list.push_back({row, c1});
        });
    }

    // --- stage 2: g0 ---------------------------------------------------------
    // y-rows of g0 die against the leading equation at y-degree 2s:
    // 0 = d_s(x2) c1(x1)^s d_s(x1), for every surviving c1
    for (const auto& c1 : c1_rows) {
        for (int s = Dy; s >= 1; --s) {
            enumerate_vectors<C>(opt.values, row_len, [&](const std::vector<C>& row) {
                bool all_zero = true;
                for (const C& c : row) all_zero = all_zero && coeff_is_zero(c);
                if (all_zero) return;
                if (pts_complete) {
                    for (const C& s1 : pts)
                        for (const C& s2 : pts) {
                            C c1v = eval_univariate(c1, s1);
                            C prod = eval_univariate(row, s2) * eval_univariate(row, s1);
                            for (int i = 0; i < s; ++i) prod = prod * c1v;
                            if (!coeff_is_zero(prod)) return;
                        }
                } else {
                    auto p1 = row_poly(row, "x1");
                    auto p2 = row_poly(row, "x2");
                    auto c1p = row_poly(c1, "x1");
                    if (!(p2 * p1 * c1p.pow(uint32_t(s))).is_zero()) return;
                }
                throw std::logic_error("exhaustive_search: y-dependent g0 row survived");
            });
        }
    }
    // the y-free rows: q(x1 x2) = q(x1) q(x2), q(1) = 1 (independent of f0)
    std::vector<std::vector<C>> g0_rows = multiplicative_unit_rows();

    SearchResult<C> out;
    TablePtr big = big_table();

    auto emit = [&](ActionCandidate<C> cand, bool count_it) {
        if (count_it) ++out.total_count;
        if (out.candidates.size() < opt.candidate_cap)
            out.candidates.push_back(std::move(cand));
        else
            out.truncated = true;
    };

    for (const F0Rows& f0rows : f0_list) {
        Poly f0 = from_xy_coeffs<C>(xy, {f0rows.c0, f0rows.c1});
        {   // symbolic safety net on top of the evaluation checks
            ActionCandidate<C> probe =
                make_candidate<C>(f0, Poly::zero(xy), Poly::one(xy), Poly::zero(xy));
            if (!verify_action(probe, monoid).ok) continue;
        }

        for (const auto& g0row : g0_rows) {
            Poly g0 = from_xy_coeffs<C>(xy, {g0row});
            {
                ActionCandidate<C> probe =
                    make_candidate<C>(f0, Poly::zero(xy), g0, Poly::zero(xy));
                if (!verify_action(probe, monoid).ok) continue;
            }

            // --- stage 3: the linear systems for f1 and g1 ---------------------
            // an attached unit (GFp literals adopt a modulus on contact; the
            // basis polynomials must start out attached)
            C unit_one = C(1);
            for (const C& v : opt.values)
                if (!coeff_is_zero(v)) {
                    unit_one = v / v;
                    break;
                }
            std::vector<Monomial> basis;
            for (int i = 0; i <= Dx; ++i) {
                if (monoid == MonoidKind::odd && i > 0) break;
                for (int j = 0; j <= Dy; ++j) {
                    Monomial m;
                    m.even = {uint32_t(i), uint32_t(j)};
                    basis.push_back(m);
                }
            }
            auto basis_poly = [&](size_t idx) {
                Poly p(xy);
                p.add_term(basis[idx], unit_one);
                return p;
            };

            auto v = [&](const char* nm) { return Poly::variable(big, nm); };
            Poly y = v("y"), x1 = v("x1"), x2 = v("x2");
            Poly f0_1 = at(f0, big, x1, y);
            Poly c1_at_x2 = at(from_xy_coeffs<C>(xy, {f0rows.c1}), big, x2, y);
            Poly g0_at_x1 = at(g0, big, x1, y);
            Poly g0_at_f0 = at(g0, big, x2, f0_1);

            // residuals of the two linear equations on each side
            auto residuals = [&](const Poly& e, bool fside) {
                Poly e_x1 = at(e, big, x1, y);
                Poly e_x12 = at(e, big, x1 * x2, y);
                Poly e_sub = at(e, big, x2, f0_1);
                if (fside)
                    return std::pair<Poly, Poly>{c1_at_x2 * e_x1 - e_x12,
                                                 e_sub * g0_at_x1 - x1 * e_x12};
                return std::pair<Poly, Poly>{g0_at_f0 * e_x1 - e_x12, e_sub - x1 * e_x12};
            };

            auto build_matrix = [&](bool fside) {
                struct RowKey {
                    int block;
                    Monomial m;
                    bool operator<(const RowKey& o) const {
                        if (block != o.block) return block < o.block;
                        return MonomialLess{}(m, o.m);
                    }
                };
                std::map<RowKey, std::map<size_t, C>> rows;
                std::vector<std::pair<C, C>> combos;
                if (monoid == MonoidKind::z2)
                    combos = {{C(1), C(1)}, {C(1), C(-1)}, {C(-1), C(1)}, {C(-1), C(-1)}};
                else if (monoid == MonoidKind::odd)
                    combos = {{C(1), C(1)}};
                for (size_t idx = 0; idx < basis.size(); ++idx) {
                    auto [r1, r2] = residuals(basis_poly(idx), fside);
                    int block = 0;
                    for (const Poly* r : {&r1, &r2}) {
                        if (monoid == MonoidKind::full) {
                            for (const auto& [m, c] : r->terms())
                                rows[RowKey{block, m}][idx] = c;
                        } else {
                            int sub = 0;
                            for (const auto& [s1, s2] : combos) {
                                AlgebraMap<C> f;
                                f.source = big;
                                f.target = big;
                                f.even_images = {Poly::variable(big, "y"),
                                                 Poly::constant(big, s1),
                                                 Poly::constant(big, s2)};
                                f.odd_images = {Poly::variable(big, "e"),
                                                Poly::variable(big, "d1"),
                                                Poly::variable(big, "d2")};
                                Poly rs = substitute(f, *r);
                                for (const auto& [m, c] : rs.terms())
                                    rows[RowKey{block * 8 + sub, m}][idx] = c;
                                ++sub;
                            }
                        }
                        ++block;
                    }
                }
                Matrix<C> M(rows.size(), basis.size());
                size_t ri = 0;
                for (const auto& [key, entries] : rows) {
                    for (const auto& [cidx, val] : entries) M(ri, cidx) = val;
                    ++ri;
                }
                return M;
            };

            auto kerf = kernel_basis(build_matrix(true));
            auto kerg = kernel_basis(build_matrix(false));

            auto vec_to_poly = [&](const std::vector<C>& coords) {
                Poly p(xy);
                for (size_t idx = 0; idx < basis.size(); ++idx)
                    if (!coeff_is_zero(coords[idx])) p.add_term(basis[idx], coords[idx]);
                return p;
            };

            // family containment, decided exactly on the kernel basis: both
            // the solution set and the family set are linear in f1 (resp. g1)
            // for this fixed (f0, g0)
            auto basis_in_families = [&](const std::vector<std::vector<C>>& ker, bool fside) {
                for (const auto& vec : ker) {
                    Poly p = vec_to_poly(vec);
                    ActionCandidate<C> cand =
                        fside ? make_candidate<C>(f0, p, g0, Poly::zero(xy))
                              : make_candidate<C>(f0, Poly::zero(xy), g0, p);
                    if (!verify_action(cand, monoid).ok)
                        throw std::logic_error("exhaustive_search: kernel element fails verify");
                    if (!matches_family_up_to_shift(cand, monoid)) ++out.outside_families;
                }
            };
            basis_in_families(kerf, true);
            basis_in_families(kerg, false);

            // exact counting: over a field the kernel is the whole solution
            // space, |values|^dim points; over a grid the solutions are the
            // kernel points with all coordinates in the grid, counted while
            // streaming (grid kernels are small by the resource guard)
            if (opt.values_form_a_field) {
                uint64_t count_f =
                    saturating_pow(opt.values.size(), kerf.size(), UINT64_MAX - 1);
                uint64_t count_g =
                    saturating_pow(opt.values.size(), kerg.size(), UINT64_MAX - 1);
                out.total_count += count_f + (count_g - 1);
            }

            auto stream_kernel = [&](const std::vector<std::vector<C>>& ker, bool fside,
                                     bool skip_zero) {
                bool count_while_streaming = !opt.values_form_a_field;
                uint64_t total = saturating_pow(opt.values.size(), ker.size(), opt.stream_cap);
                if (total > opt.stream_cap) {
                    if (count_while_streaming)
                        throw std::invalid_argument(
                            "exhaustive_search: grid kernel too large to stream");
                    // store basis representatives only
                    out.truncated = true;
                    for (const auto& vec : ker) {
                        Poly p = vec_to_poly(vec);
                        emit(fside ? make_candidate<C>(f0, p, g0, Poly::zero(xy))
                                   : make_candidate<C>(f0, Poly::zero(xy), g0, p),
                             false);
                    }
                    return;
                }
                if (ker.empty()) {
                    if (!skip_zero)
                        emit(make_candidate<C>(f0, Poly::zero(xy), g0, Poly::zero(xy)),
                             count_while_streaming);
                    return;
                }
                enumerate_vectors<C>(opt.values, ker.size(), [&](const std::vector<C>& lam) {
                    std::vector<C> coords(basis.size(), C(0));
                    for (size_t b = 0; b < ker.size(); ++b)
                        for (size_t idx = 0; idx < basis.size(); ++idx)
                            coords[idx] += lam[b] * ker[b][idx];
                    if (!opt.values_form_a_field) {
                        for (const C& c : coords) {
                            bool in_set = coeff_is_zero(c);
                            for (const C& w : opt.values) in_set = in_set || (w == c);
                            if (!in_set) return;
                        }
                    }
                    Poly p = vec_to_poly(coords);
                    if (skip_zero && p.is_zero()) return;
                    emit(fside ? make_candidate<C>(f0, p, g0, Poly::zero(xy))
                               : make_candidate<C>(f0, Poly::zero(xy), g0, p),
                         count_while_streaming);
                });
            };
            stream_kernel(kerf, true, false);
            stream_kernel(kerg, false, true);

            // mixed pairs (both f1 and g1 nonzero) cannot occur: the product
            // equations f1(x2, f0(x1,y)) g1(x1,y) = 0 and dy g1(x2,f0) f1 = 0
            // have no solutions with both factors nonzero (f0(x,.) is injective
            // on polynomials, and the coefficient ring is a field; at x = +-1
            // this applies componentwise for the Z/2 quotient).  Verified on
            // basis pairs as a runtime check.
            for (const auto& fv : kerf)
                for (const auto& gv : kerg) {
                    Poly f1 = vec_to_poly(fv);
                    Poly g1 = vec_to_poly(gv);
                    if (f1.is_zero() || g1.is_zero()) continue;
                    ActionCandidate<C> cand = make_candidate<C>(f0, f1, g0, g1);
                    if (verify_action(cand, monoid).ok) {
                        ++out.outside_families;
                        emit(cand, true);
                    }
                }
        }
    }

    std::sort(out.candidates.begin(), out.candidates.end(),
              [](const ActionCandidate<C>& a, const ActionCandidate<C>& b) {
                  auto key = [](const ActionCandidate<C>& c) {
                      return c.f0.render() + "|" + c.f1.render() + "|" + c.g0.render() + "|" +
                             c.g1.render();
                  };
                  return key(a) < key(b);
              });
    return out;
}

// Residues 0..p-1 as the coefficient enumeration set of F_p.
inline std::vector<GFp> field_values(uint32_t p) {
    if (p < 3) throw std::invalid_argument("field_values: need an odd prime");
    std::vector<GFp> v;
    for (uint32_t i = 0; i < p; ++i) v.emplace_back((long long)(i), p);
    return v;
}

}  // namespace superpoint
