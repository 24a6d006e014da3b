// Exact supercommutative polynomial arithmetic over Q (or a prime field),
// with graded algebra homomorphisms and odd derivations.
//
// A SuperPolynomial lives over a fixed VariableTable of named even and odd
// generators.  Odd generators anticommute and square to zero, so a monomial
// is an exponent vector on the even generators together with a subset of the
// odd generators (kept sorted; the Koszul sign of any reordering is folded
// into the coefficient).  All values are immutable; every operation returns
// a fresh value.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace superpoint {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

enum class Parity : unsigned { even = 0, odd = 1 };

// Outcome of a verification pass: ok unless failures were recorded.
struct Report {
    bool ok = true;
    std::vector<std::string> failures;
    void fail(std::string msg) {
        ok = false;
        failures.push_back(std::move(msg));
    }
};

inline Parity operator+(Parity a, Parity b) {
    return Parity((unsigned(a) + unsigned(b)) & 1u);
}

// Prime field F_p with runtime modulus, p < 2^31.  A default-constructed
// value is an integer literal not yet attached to a modulus; it adopts the
// modulus of the first attached operand it meets.  This lets generic code
// write C(0), C(1) without threading the modulus through every call.
class GFp {
public:
    GFp() : v_(0), p_(0) {}
    GFp(long long n) : v_(n), p_(0) {}
    GFp(long long n, uint32_t p) : p_(p) { v_ = reduce(n, p); }

    uint32_t modulus() const { return p_; }
    int64_t value() const { return v_; }
    bool attached() const { return p_ != 0; }

    bool is_zero() const { return v_ == 0; }

    friend GFp operator+(GFp a, GFp b) {
        unify(a, b);
        if (!a.p_) return GFp(a.v_ + b.v_);
        return GFp(a.v_ + b.v_, a.p_);
    }
    friend GFp operator-(GFp a, GFp b) {
        unify(a, b);
        if (!a.p_) return GFp(a.v_ - b.v_);
        return GFp(a.v_ - b.v_, a.p_);
    }
    friend GFp operator*(GFp a, GFp b) {
        unify(a, b);
        if (!a.p_) return GFp(a.v_ * b.v_);
        return GFp(a.v_ * b.v_, a.p_);
    }
    GFp operator-() const { return p_ ? GFp(-v_, p_) : GFp(-v_); }
    GFp& operator+=(const GFp& o) { return *this = *this + o; }
    GFp& operator-=(const GFp& o) { return *this = *this - o; }
    GFp& operator*=(const GFp& o) { return *this = *this * o; }

    GFp inverse() const {
        if (!p_) {
            if (v_ == 1 || v_ == -1) return *this;
            throw std::domain_error("GFp: inverse of unattached literal");
        }
        if (v_ == 0) throw std::domain_error("GFp: division by zero");
        // extended Euclid
        int64_t a = v_, m = p_, x0 = 0, x1 = 1;
        while (a > 1) {
            int64_t q = a / m;
            int64_t t = m; m = a % m; a = t;
            t = x0; x0 = x1 - q * x0; x1 = t;
        }
        return GFp(x1, p_);
    }
    friend GFp operator/(const GFp& a, const GFp& b) { return a * b.inverse(); }

    friend bool operator==(GFp a, GFp b) {
        unify(a, b);
        return a.v_ == b.v_;
    }
    friend bool operator!=(const GFp& a, const GFp& b) { return !(a == b); }
    friend bool operator<(GFp a, GFp b) {
        unify(a, b);
        return a.v_ < b.v_;
    }

private:
    static int64_t reduce(int64_t n, uint32_t p) {
        int64_t r = n % int64_t(p);
        return r < 0 ? r + p : r;
    }
    static void unify(GFp& a, GFp& b) {
        if (a.p_ == b.p_) return;
        if (!a.p_) { a = GFp(a.v_, b.p_); return; }
        if (!b.p_) { b = GFp(b.v_, a.p_); return; }
        throw std::invalid_argument("GFp: mixed moduli");
    }
    int64_t v_;
    uint32_t p_;
};

inline bool coeff_is_zero(const Rational& c) { return c == 0; }
inline bool coeff_is_zero(const GFp& c) { return c.is_zero(); }

inline std::string coeff_to_string(const Rational& c) {
    std::ostringstream os;
    os << c;
    return os.str();
}
inline std::string coeff_to_string(const GFp& c) { return std::to_string(c.value()); }

// Ordered lists of generator names.  The order is fixed for the lifetime of
// the table: the canonical monomial order and the text rendering depend on it.
struct VariableTable {
    std::vector<std::string> evens;
    std::vector<std::string> odds;

    VariableTable(std::vector<std::string> ev, std::vector<std::string> od)
        : evens(std::move(ev)), odds(std::move(od)) {
        if (odds.size() > 64)
            throw std::invalid_argument("VariableTable: at most 64 odd generators");
        std::vector<std::string> all = evens;
        all.insert(all.end(), odds.begin(), odds.end());
        std::sort(all.begin(), all.end());
        if (std::adjacent_find(all.begin(), all.end()) != all.end())
            throw std::invalid_argument("VariableTable: duplicate generator name");
    }

    size_t num_evens() const { return evens.size(); }
    size_t num_odds() const { return odds.size(); }
    size_t num_generators() const { return evens.size() + odds.size(); }

    // generator index within its parity class, or -1
    int even_index(const std::string& name) const {
        for (size_t i = 0; i < evens.size(); ++i)
            if (evens[i] == name) return int(i);
        return -1;
    }
    int odd_index(const std::string& name) const {
        for (size_t i = 0; i < odds.size(); ++i)
            if (odds[i] == name) return int(i);
        return -1;
    }

    friend bool operator==(const VariableTable& a, const VariableTable& b) {
        return a.evens == b.evens && a.odds == b.odds;
    }
};

using TablePtr = std::shared_ptr<const VariableTable>;

inline TablePtr make_table(std::vector<std::string> evens, std::vector<std::string> odds) {
    return std::make_shared<const VariableTable>(std::move(evens), std::move(odds));
}

inline bool same_table(const TablePtr& a, const TablePtr& b) {
    return a == b || (a && b && *a == *b);
}

// Exponent vector on the even generators plus a bitmask of odd generators.
// The odd subset encodes e_{i1}*...*e_{ik} with i1 < ... < ik.
struct Monomial {
    std::vector<uint32_t> even;
    uint64_t odd = 0;

    uint32_t even_degree() const {
        uint32_t d = 0;
        for (uint32_t e : even) d += e;
        return d;
    }
    int odd_count() const { return std::popcount(odd); }
    Parity parity() const { return Parity(odd_count() & 1); }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.odd == b.odd && a.even == b.even;
    }
};

// Degree-lexicographic order: total even degree, then even exponents
// lexicographically, then number of odd factors, then the odd mask.
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        uint32_t da = a.even_degree(), db = b.even_degree();
        if (da != db) return da < db;
        if (a.even != b.even) return a.even < b.even;
        int oa = a.odd_count(), ob = b.odd_count();
        if (oa != ob) return oa < ob;
        return a.odd < b.odd;
    }
};

// Sign of merging two disjoint ascending odd lists: (-1)^{#inversions}.
inline int koszul_merge_sign(uint64_t a, uint64_t b) {
    int inversions = 0;
    uint64_t rest = a;
    while (rest) {
        int bit = std::countr_zero(rest);
        rest &= rest - 1;
        inversions += std::popcount(b & ((uint64_t(1) << bit) - 1));
    }
    return (inversions & 1) ? -1 : 1;
}

template <class C>
class SuperPolynomial {
public:
    using Coeff = C;
    using TermMap = std::map<Monomial, C, MonomialLess>;

    SuperPolynomial() = default;
    explicit SuperPolynomial(TablePtr table) : table_(std::move(table)) {}

    static SuperPolynomial zero(TablePtr table) { return SuperPolynomial(std::move(table)); }

    static SuperPolynomial constant(TablePtr table, C c) {
        SuperPolynomial p(std::move(table));
        if (!coeff_is_zero(c)) p.terms_[p.unit_monomial()] = std::move(c);
        return p;
    }

    static SuperPolynomial one(TablePtr table) { return constant(std::move(table), C(1)); }

    static SuperPolynomial variable(TablePtr table, const std::string& name) {
        SuperPolynomial p(table);
        Monomial m = p.unit_monomial();
        int ie = table->even_index(name);
        if (ie >= 0) {
            m.even[ie] = 1;
        } else {
            int io = table->odd_index(name);
            if (io < 0) throw std::invalid_argument("unknown generator: " + name);
            m.odd = uint64_t(1) << io;
        }
        p.terms_[m] = C(1);
        return p;
    }

    static SuperPolynomial even_variable(TablePtr table, size_t i) {
        return variable(table, table->evens.at(i));
    }
    static SuperPolynomial odd_variable(TablePtr table, size_t i) {
        return variable(table, table->odds.at(i));
    }

    static SuperPolynomial term(TablePtr table, C c, std::vector<uint32_t> even_exp,
                                std::vector<int> odd_list) {
        SuperPolynomial p(table);
        if (coeff_is_zero(c)) return p;
        Monomial m;
        m.even = std::move(even_exp);
        m.even.resize(table->num_evens(), 0);
        for (size_t k = 0; k < odd_list.size(); ++k) {
            if (k + 1 < odd_list.size() && odd_list[k] >= odd_list[k + 1])
                throw std::invalid_argument("odd list must be strictly increasing");
            m.odd |= uint64_t(1) << odd_list[k];
        }
        p.terms_[m] = std::move(c);
        return p;
    }

    const TablePtr& table() const { return table_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t num_terms() const { return terms_.size(); }

    bool is_constant() const {
        if (terms_.empty()) return true;
        return terms_.size() == 1 && terms_.begin()->first.even_degree() == 0 &&
               terms_.begin()->first.odd == 0;
    }
    C constant_value() const {
        if (terms_.empty()) return C(0);
        if (!is_constant()) throw std::domain_error("not a constant polynomial");
        return terms_.begin()->second;
    }

    // Parity of a homogeneous polynomial; throws on mixed parity.
    Parity parity() const {
        if (terms_.empty()) return Parity::even;
        Parity p = terms_.begin()->first.parity();
        for (const auto& [m, c] : terms_)
            if (m.parity() != p) throw std::domain_error("polynomial has mixed parity");
        return p;
    }
    bool parity_homogeneous(Parity p) const {
        for (const auto& [m, c] : terms_)
            if (m.parity() != p) return false;
        return true;
    }

    uint32_t even_degree() const {  // max total degree in the even generators
        uint32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.even_degree());
        return d;
    }

    friend SuperPolynomial operator+(const SuperPolynomial& a, const SuperPolynomial& b) {
        require_same_table(a, b);
        SuperPolynomial r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend SuperPolynomial operator-(const SuperPolynomial& a, const SuperPolynomial& b) {
        require_same_table(a, b);
        SuperPolynomial r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    SuperPolynomial operator-() const {
        SuperPolynomial r(table_);
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }

    // Bilinear product with the Koszul sign rule: merging odd subsets picks up
    // (-1)^{#transpositions}; intersecting odd subsets kill the term.
    friend SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b) {
        require_same_table(a, b);
        SuperPolynomial r(a.table_);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                if (ma.odd & mb.odd) continue;
                Monomial m;
                m.even.resize(ma.even.size());
                for (size_t i = 0; i < ma.even.size(); ++i) m.even[i] = ma.even[i] + mb.even[i];
                m.odd = ma.odd | mb.odd;
                C c = ca * cb;
                if (koszul_merge_sign(ma.odd, mb.odd) < 0) c = -c;
                r.add_term(m, c);
            }
        }
        return r;
    }

    SuperPolynomial& operator+=(const SuperPolynomial& o) { return *this = *this + o; }
    SuperPolynomial& operator-=(const SuperPolynomial& o) { return *this = *this - o; }
    SuperPolynomial& operator*=(const SuperPolynomial& o) { return *this = *this * o; }

    friend SuperPolynomial operator*(const C& c, const SuperPolynomial& p) {
        SuperPolynomial r(p.table_);
        if (coeff_is_zero(c)) return r;
        for (const auto& [m, x] : p.terms_) {
            C y = c * x;
            if (!coeff_is_zero(y)) r.terms_[m] = std::move(y);
        }
        return r;
    }

    SuperPolynomial pow(uint32_t n) const {
        SuperPolynomial r = one(table_);
        SuperPolynomial base = *this;
        while (n) {
            if (n & 1) r = r * base;
            base = base * base;
            n >>= 1;
        }
        return r;
    }

    friend bool operator==(const SuperPolynomial& a, const SuperPolynomial& b) {
        if (!same_table(a.table_, b.table_)) return false;
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const SuperPolynomial& a, const SuperPolynomial& b) {
        return !(a == b);
    }

    // Canonical text: terms in monomial order, "3/2*x1^2*e1*e2" style, odd
    // factors ascending.  Bit-exact; used by the CLI and golden files.
    std::string render() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            std::string cs = coeff_to_string(c);
            bool neg = !cs.empty() && cs[0] == '-';
            std::string mag = neg ? cs.substr(1) : cs;
            if (first) {
                if (neg) os << "-";
                first = false;
            } else {
                os << (neg ? " - " : " + ");
            }
            std::string vars = render_monomial(m);
            if (vars.empty()) {
                os << mag;
            } else if (mag == "1") {
                os << vars;
            } else {
                os << mag << "*" << vars;
            }
        }
        return os.str();
    }

    Monomial unit_monomial() const {
        Monomial m;
        m.even.resize(table_->num_evens(), 0);
        return m;
    }

    void add_term(const Monomial& m, const C& c) {
        if (coeff_is_zero(c)) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

private:
    static void require_same_table(const SuperPolynomial& a, const SuperPolynomial& b) {
        if (!same_table(a.table_, b.table_))
            throw std::invalid_argument("SuperPolynomial: variable table mismatch");
    }

    std::string render_monomial(const Monomial& m) const {
        std::ostringstream os;
        bool first = true;
        for (size_t i = 0; i < m.even.size(); ++i) {
            if (!m.even[i]) continue;
            if (!first) os << "*";
            os << table_->evens[i];
            if (m.even[i] > 1) os << "^" << m.even[i];
            first = false;
        }
        uint64_t rest = m.odd;
        while (rest) {
            int bit = std::countr_zero(rest);
            rest &= rest - 1;
            if (!first) os << "*";
            os << table_->odds[bit];
            first = false;
        }
        return os.str();
    }

    TablePtr table_;
    TermMap terms_;
};

// Grading-preserving algebra homomorphism, given by one image per generator
// of the source table.  Each image must be parity-homogeneous of the
// generator's parity (zero images are allowed).
template <class C>
struct AlgebraMap {
    TablePtr source;
    TablePtr target;
    std::vector<SuperPolynomial<C>> even_images;
    std::vector<SuperPolynomial<C>> odd_images;

    static AlgebraMap identity(const TablePtr& table) {
        AlgebraMap f;
        f.source = table;
        f.target = table;
        for (size_t i = 0; i < table->num_evens(); ++i)
            f.even_images.push_back(SuperPolynomial<C>::even_variable(table, i));
        for (size_t i = 0; i < table->num_odds(); ++i)
            f.odd_images.push_back(SuperPolynomial<C>::odd_variable(table, i));
        return f;
    }

    void validate() const {
        if (even_images.size() != source->num_evens() ||
            odd_images.size() != source->num_odds())
            throw std::invalid_argument("AlgebraMap: image count mismatch");
        for (const auto& p : even_images) {
            if (!same_table(p.table(), target))
                throw std::invalid_argument("AlgebraMap: image over wrong table");
            if (!p.parity_homogeneous(Parity::even))
                throw std::invalid_argument("AlgebraMap: even generator mapped to odd image");
        }
        for (const auto& p : odd_images) {
            if (!same_table(p.table(), target))
                throw std::invalid_argument("AlgebraMap: image over wrong table");
            if (!p.parity_homogeneous(Parity::odd))
                throw std::invalid_argument("AlgebraMap: odd generator mapped to even image");
        }
    }
};

// Image of p under the homomorphism f.  Odd images multiply in ascending
// generator order, so the Koszul bookkeeping of the product applies verbatim.
template <class C>
SuperPolynomial<C> substitute(const AlgebraMap<C>& f, const SuperPolynomial<C>& p) {
    if (!same_table(p.table(), f.source))
        throw std::invalid_argument("substitute: polynomial not over the map's source table");
    SuperPolynomial<C> result(f.target);
    for (const auto& [m, c] : p.terms()) {
        SuperPolynomial<C> acc = SuperPolynomial<C>::constant(f.target, c);
        for (size_t i = 0; i < m.even.size() && !acc.is_zero(); ++i)
            if (m.even[i]) acc = acc * f.even_images[i].pow(m.even[i]);
        uint64_t rest = m.odd;
        while (rest && !acc.is_zero()) {
            int bit = std::countr_zero(rest);
            rest &= rest - 1;
            acc = acc * f.odd_images[bit];
        }
        result += acc;
    }
    return result;
}

// f after g: substitute(compose(f,g), p) == substitute(f, substitute(g, p)).
template <class C>
AlgebraMap<C> compose(const AlgebraMap<C>& f, const AlgebraMap<C>& g) {
    if (!same_table(g.target, f.source))
        throw std::invalid_argument("compose: inner map target != outer map source");
    AlgebraMap<C> h;
    h.source = g.source;
    h.target = f.target;
    for (const auto& img : g.even_images) h.even_images.push_back(substitute(f, img));
    for (const auto& img : g.odd_images) h.odd_images.push_back(substitute(f, img));
    return h;
}

template <class C>
bool algebra_maps_equal(const AlgebraMap<C>& f, const AlgebraMap<C>& g) {
    if (!same_table(f.source, g.source) || !same_table(f.target, g.target)) return false;
    return f.even_images == g.even_images && f.odd_images == g.odd_images;
}

// The unique odd derivation extending the generator images, with the signed
// Leibniz rule d(ab) = (da)b + (-1)^{|a|} a (db).  Each image must have parity
// opposite to its generator.
template <class C>
struct OddDerivation {
    TablePtr table;
    std::vector<SuperPolynomial<C>> even_images;  // images of even generators (odd parity)
    std::vector<SuperPolynomial<C>> odd_images;   // images of odd generators (even parity)

    void validate() const {
        if (even_images.size() != table->num_evens() || odd_images.size() != table->num_odds())
            throw std::invalid_argument("OddDerivation: image count mismatch");
        for (const auto& p : even_images)
            if (!p.parity_homogeneous(Parity::odd))
                throw std::invalid_argument("OddDerivation: image of even generator must be odd");
        for (const auto& p : odd_images)
            if (!p.parity_homogeneous(Parity::even))
                throw std::invalid_argument("OddDerivation: image of odd generator must be even");
    }
};

template <class C>
SuperPolynomial<C> odd_derivation(const OddDerivation<C>& d, const SuperPolynomial<C>& p) {
    if (!same_table(p.table(), d.table))
        throw std::invalid_argument("odd_derivation: table mismatch");
    using Poly = SuperPolynomial<C>;
    Poly result(d.table);
    for (const auto& [m, c] : p.terms()) {
        // Even factors first (even prefix contributes no sign), then the odd
        // factors in ascending order; d moves past k odd factors with sign
        // (-1)^k.
        for (size_t i = 0; i < m.even.size(); ++i) {
            if (!m.even[i] || d.even_images[i].is_zero()) continue;
            Monomial rest = m;
            rest.even[i] -= 1;
            Poly restp(d.table);
            restp.add_term(rest, c * C(int(m.even[i])));
            result += d.even_images[i] * restp;
        }
        uint64_t rest_mask = m.odd;
        int passed = 0;
        while (rest_mask) {
            int bit = std::countr_zero(rest_mask);
            rest_mask &= rest_mask - 1;
            if (!d.odd_images[bit].is_zero()) {
                Monomial evenpart = m;
                evenpart.odd = 0;
                Poly head(d.table);
                head.add_term(evenpart, (passed & 1) ? -c : c);
                Monomial tail_before;
                tail_before.even.assign(m.even.size(), 0);
                tail_before.odd = m.odd & ((uint64_t(1) << bit) - 1);
                Monomial tail_after;
                tail_after.even.assign(m.even.size(), 0);
                tail_after.odd = m.odd & ~((uint64_t(1) << (bit + 1)) - 1);
                Poly before(d.table), after(d.table);
                before.add_term(tail_before, C(1));
                after.add_term(tail_after, C(1));
                result += head * before * d.odd_images[bit] * after;
            }
            ++passed;
        }
    }
    return result;
}

// Sum of the terms whose number of odd factors has the requested parity.
template <class C>
SuperPolynomial<C> parity_component(const SuperPolynomial<C>& p, Parity par) {
    SuperPolynomial<C> r(p.table());
    for (const auto& [m, c] : p.terms())
        if (m.parity() == par) r.add_term(m, c);
    return r;
}

// Table extension: append generators, and the inclusion map of the base.
inline TablePtr extend_table(const TablePtr& base, std::vector<std::string> more_evens,
                             std::vector<std::string> more_odds) {
    std::vector<std::string> evens = base->evens;
    std::vector<std::string> odds = base->odds;
    evens.insert(evens.end(), more_evens.begin(), more_evens.end());
    odds.insert(odds.end(), more_odds.begin(), more_odds.end());
    return make_table(std::move(evens), std::move(odds));
}

// Map from `source` into `target` sending each generator to the target
// generator of the same name (which must exist, with the same parity).
template <class C>
AlgebraMap<C> rename_map(const TablePtr& source, const TablePtr& target) {
    AlgebraMap<C> f;
    f.source = source;
    f.target = target;
    for (const auto& name : source->evens) {
        if (target->even_index(name) < 0)
            throw std::invalid_argument("rename_map: missing even generator " + name);
        f.even_images.push_back(SuperPolynomial<C>::variable(target, name));
    }
    for (const auto& name : source->odds) {
        if (target->odd_index(name) < 0)
            throw std::invalid_argument("rename_map: missing odd generator " + name);
        f.odd_images.push_back(SuperPolynomial<C>::variable(target, name));
    }
    return f;
}

}  // namespace superpoint
