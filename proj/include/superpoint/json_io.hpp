// JSON (de)serialization for spaces, forms, twists, and action candidates.
//
// Space format:
//   {"dims": {"0": [ids...], "1": [ids...]},
//    "faces": {"<dim>/<id>": [{"ref": "<dim>/<id>", "degen": [i1,i2,...]}, ...]}}
// Form format:
//   {"space": <inline space or hash string>,
//    "values": {"<dim>/<id>": [{"coeff": "p/q", "even": [...], "odd": [...]}]}}
// Rationals serialize as "p/q" strings in lowest terms (plain "p" for
// integers), never as floats.  Emission uses ordered keys so identical inputs
// produce byte-identical documents.

#pragma once

#include <nlohmann/json.hpp>

#include "superpoint/classify.hpp"
#include "superpoint/fieldtheory.hpp"
#include "superpoint/forms.hpp"
#include "superpoint/simplicial.hpp"

namespace superpoint {

using Json = nlohmann::ordered_json;

inline Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    for (char ch : s)
        if (!(isdigit(ch) || ch == '-' || ch == '+' || ch == '/'))
            throw std::invalid_argument("bad rational literal: " + s);
    return Rational(s);
}

inline std::string cell_key(const SimplicialSet& X, SimplexRef r) {
    return std::to_string(r.dim) + "/" + X.name(r);
}

// ---------------------------------------------------------------------------
// Spaces
// ---------------------------------------------------------------------------

inline Json space_to_json(const SimplicialSet& X) {
    Json dims = Json::object();
    for (int d = 0; d <= X.top_dim(); ++d) {
        Json ids = Json::array();
        for (int id = 0; id < X.count(d); ++id) ids.push_back(X.name({d, id}));
        dims[std::to_string(d)] = ids;
    }
    Json faces = Json::object();
    for (int d = 1; d <= X.top_dim(); ++d) {
        for (int id = 0; id < X.count(d); ++id) {
            Json lst = Json::array();
            for (int i = 0; i <= d; ++i) {
                const Face& f = X.stored_face({d, id}, i);
                Json entry = Json::object();
                entry["ref"] = cell_key(X, f.ref);
                entry["degen"] = f.degen.indices;
                lst.push_back(entry);
            }
            faces[cell_key(X, {d, id})] = lst;
        }
    }
    Json out = Json::object();
    out["dims"] = dims;
    out["faces"] = faces;
    return out;
}

inline SimplicialSet space_from_json(const Json& j, int max_cells = 10000) {
    if (!j.contains("dims")) throw std::invalid_argument("space JSON: missing dims");
    SimplicialSet X;
    std::map<std::string, SimplexRef> by_key;
    std::vector<std::pair<int, std::string>> order;
    for (const auto& [dim_str, ids] : j.at("dims").items()) {
        int d = std::stoi(dim_str);
        for (const auto& id : ids) order.push_back({d, id.get<std::string>()});
    }
    std::sort(order.begin(), order.end());
    if (int(order.size()) > max_cells)
        throw std::invalid_argument("space exceeds the cell limit (SUPERPOINT_MAX_CELLS)");

    auto parse_ref = [&](const std::string& key) {
        auto it = by_key.find(key);
        if (it == by_key.end())
            throw std::invalid_argument("space JSON: dangling face reference " + key);
        return it->second;
    };

    for (const auto& [d, name] : order) {
        std::vector<Face> faces;
        if (d > 0) {
            std::string key = std::to_string(d) + "/" + name;
            if (!j.contains("faces") || !j.at("faces").contains(key))
                throw std::invalid_argument("space JSON: missing faces for " + key);
            for (const auto& entry : j.at("faces").at(key)) {
                Face f;
                f.ref = parse_ref(entry.at("ref").get<std::string>());
                for (const auto& idx : entry.at("degen")) f.degen.indices.push_back(idx.get<int>());
                if (!f.degen.normal())
                    throw std::invalid_argument(
                        "space JSON: degeneracy word not in normal form for " + key);
                faces.push_back(std::move(f));
            }
        }
        by_key[std::to_string(d) + "/" + name] = X.add_simplex(d, name, std::move(faces));
    }
    return X;
}

// stable content hash used to tie form files to their space
inline std::string space_hash(const SimplicialSet& X) {
    std::string s = space_to_json(X).dump();
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
}

// ---------------------------------------------------------------------------
// Forms
// ---------------------------------------------------------------------------

inline Json polynomial_to_json(const QPoly& p) {
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json t = Json::object();
        t["coeff"] = coeff_to_string(c);
        t["even"] = m.even;
        Json odd = Json::array();
        uint64_t rest = m.odd;
        while (rest) {
            int bit = std::countr_zero(rest);
            rest &= rest - 1;
            odd.push_back(bit + 1);  // 1-based generator indices
        }
        t["odd"] = odd;
        terms.push_back(t);
    }
    return terms;
}

inline QPoly polynomial_from_json(const Json& terms, const TablePtr& table) {
    QPoly p(table);
    for (const auto& t : terms) {
        Monomial m;
        for (const auto& e : t.at("even")) m.even.push_back(e.get<uint32_t>());
        m.even.resize(table->num_evens(), 0);
        int prev = 0;
        for (const auto& o : t.at("odd")) {
            int idx = o.get<int>();
            if (idx <= prev || idx > int(table->num_odds()))
                throw std::invalid_argument("form JSON: odd indices must be ascending and in range");
            m.odd |= uint64_t(1) << (idx - 1);
            prev = idx;
        }
        Rational c = rational_from_string(t.at("coeff").get<std::string>());
        p.add_term(m, c);
    }
    return p;
}

inline Json form_to_json(const SullivanForm& a, bool inline_space = true) {
    Json out = Json::object();
    if (inline_space)
        out["space"] = space_to_json(*a.space());
    else
        out["space"] = space_hash(*a.space());
    Json values = Json::object();
    const auto& X = *a.space();
    for (int d = 0; d <= X.top_dim(); ++d)
        for (int id = 0; id < X.count(d); ++id) {
            const QPoly& p = a.value({d, id});
            if (p.is_zero()) continue;
            values[cell_key(X, {d, id})] = polynomial_to_json(p);
        }
    out["values"] = values;
    return out;
}

// The space is taken from the document when inline, otherwise the supplied
// fallback must match the recorded hash.
inline SullivanForm form_from_json(const Json& j, SpacePtr fallback_space = nullptr,
                                   int max_cells = 10000) {
    SpacePtr space;
    if (j.contains("space") && j.at("space").is_object()) {
        space = std::make_shared<SimplicialSet>(space_from_json(j.at("space"), max_cells));
        if (fallback_space && !(*fallback_space == *space))
            throw std::invalid_argument("form JSON: inline space disagrees with --space");
    } else if (j.contains("space") && j.at("space").is_string()) {
        if (!fallback_space)
            throw std::invalid_argument("form JSON: space given by hash; pass --space");
        if (space_hash(*fallback_space) != j.at("space").get<std::string>())
            throw std::invalid_argument("form JSON: space hash mismatch");
        space = fallback_space;
    } else if (fallback_space) {
        space = fallback_space;
    } else {
        throw std::invalid_argument("form JSON: missing space");
    }

    SullivanForm a = SullivanForm::zero(space);
    if (j.contains("values")) {
        for (const auto& [key, terms] : j.at("values").items()) {
            auto slash = key.find('/');
            if (slash == std::string::npos)
                throw std::invalid_argument("form JSON: bad cell key " + key);
            int d = std::stoi(key.substr(0, slash));
            auto ref = space->find(d, key.substr(slash + 1));
            if (!ref) throw std::invalid_argument("form JSON: unknown cell " + key);
            a.set_value(*ref, polynomial_from_json(terms, form_table(d)));
        }
    }
    return a;
}

// ---------------------------------------------------------------------------
// Twists
// ---------------------------------------------------------------------------

inline Json twist_to_json(const TwistSpec& spec) {
    Json fam = Json::object();
    if (std::holds_alternative<DegreeFamily>(spec.family)) {
        fam["kind"] = "degree";
        fam["n"] = std::get<DegreeFamily>(spec.family).n;
    } else if (std::holds_alternative<DifferentialFamily>(spec.family)) {
        fam["kind"] = "differential";
        fam["n"] = std::get<DifferentialFamily>(spec.family).n;
    } else {
        const Table1Family& t = std::get<Table1Family>(spec.family);
        fam["kind"] = "table1";
        fam["row"] = t.row;
        fam["k"] = t.k;
        fam["n"] = t.n;
        fam["m"] = t.m;
        fam["a"] = coeff_to_string(t.a);
        Json f = Json::array();
        for (const auto& c : t.f) f.push_back(coeff_to_string(c));
        fam["f"] = f;
    }
    Json out = Json::object();
    out["geometry"] = geometry_name(spec.geometry);
    out["family"] = fam;
    out["module"] = spec.module_rank1_label;
    return out;
}

inline TwistSpec twist_from_json(const Json& j) {
    TwistSpec spec;
    spec.geometry = geometry_from_name(j.at("geometry").get<std::string>());
    if (j.contains("module")) spec.module_rank1_label = j.at("module").get<std::string>();
    const Json& fam = j.at("family");
    std::string kind = fam.at("kind").get<std::string>();
    if (kind == "degree") {
        spec.family = DegreeFamily{fam.at("n").get<int>()};
    } else if (kind == "differential") {
        spec.family = DifferentialFamily{fam.at("n").get<int>()};
    } else if (kind == "table1") {
        Table1Family t;
        t.row = fam.at("row").get<int>();
        if (fam.contains("k")) t.k = fam.at("k").get<int>();
        if (fam.contains("n")) t.n = fam.at("n").get<int>();
        if (fam.contains("m")) t.m = fam.at("m").get<int>();
        if (fam.contains("a")) t.a = rational_from_string(fam.at("a").get<std::string>());
        if (fam.contains("f"))
            for (const auto& c : fam.at("f"))
                t.f.push_back(rational_from_string(c.get<std::string>()));
        spec.family = t;
    } else {
        throw std::invalid_argument("twist JSON: unknown family kind " + kind);
    }
    validate_twist(spec);
    return spec;
}

// ---------------------------------------------------------------------------
// Action candidates (rational coefficients; the CLI reduces mod p on demand)
// ---------------------------------------------------------------------------

inline Json xy_poly_to_json(const SuperPolynomial<Rational>& p) {
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json t = Json::object();
        t["coeff"] = coeff_to_string(c);
        t["x"] = m.even[0];
        t["y"] = m.even[1];
        terms.push_back(t);
    }
    return terms;
}

inline SuperPolynomial<Rational> xy_poly_from_json(const Json& terms) {
    TablePtr xy = candidate_table();
    SuperPolynomial<Rational> p(xy);
    for (const auto& t : terms) {
        Monomial m;
        m.even = {t.at("x").get<uint32_t>(), t.at("y").get<uint32_t>()};
        p.add_term(m, rational_from_string(t.at("coeff").get<std::string>()));
    }
    return p;
}

inline Json candidate_to_json(const ActionCandidate<Rational>& c) {
    Json out = Json::object();
    out["f0"] = xy_poly_to_json(c.f0);
    out["f1"] = xy_poly_to_json(c.f1);
    out["g0"] = xy_poly_to_json(c.g0);
    out["g1"] = xy_poly_to_json(c.g1);
    return out;
}

inline ActionCandidate<Rational> candidate_from_json(const Json& j) {
    return make_candidate<Rational>(
        xy_poly_from_json(j.at("f0")), xy_poly_from_json(j.at("f1")),
        xy_poly_from_json(j.at("g0")), xy_poly_from_json(j.at("g1")));
}

}  // namespace superpoint
