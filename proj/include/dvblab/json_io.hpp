#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "dvblab/dualization.hpp"
#include "dvblab/dvb.hpp"
#include "dvblab/seq.hpp"

namespace dvblab {

// Rationals travel as decimal strings "p/q" (or "p" when q = 1); matrices
// as row-major arrays of such strings, one inner array per row.

inline nlohmann::json matrix_to_json(const LinMap& f) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < f.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < f.cols(); ++c) row.push_back(rat_to_string(f.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline LinMap matrix_from_json(const nlohmann::json& j, const Space& dom, const Space& cod) {
    if (!j.is_array() || static_cast<int>(j.size()) != cod.dim) throw ParseError("matrix: wrong row count");
    LinMap f(dom, cod);
    for (int r = 0; r < cod.dim; ++r) {
        const auto& row = j[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<int>(row.size()) != dom.dim) throw ParseError("matrix: wrong column count");
        for (int c = 0; c < dom.dim; ++c) {
            const auto& cell = row[static_cast<std::size_t>(c)];
            if (!cell.is_string()) throw ParseError("matrix entries must be rational strings");
            f.at(r, c) = rat_from_string(cell.get<std::string>());
        }
    }
    return f;
}

inline nlohmann::json to_json(const TrivialDVB& d) {
    return nlohmann::json{{"kind", "dvb"}, {"A", d.A.dim}, {"B", d.B.dim}, {"C", d.C.dim}};
}

inline nlohmann::json to_json(const DVBSeq& s) {
    return nlohmann::json{{"kind", "seq"}, {"A", s.A.dim}, {"B", s.B.dim}, {"C", s.C.dim},
                          {"e", matrix_to_json(s.e())}, {"p", matrix_to_json(s.p())}};
}

inline nlohmann::json to_json(const ValuedPairing& vp) {
    nlohmann::json form = nlohmann::json::array();
    for (int l = 0; l < vp.left.dim; ++l) {
        nlohmann::json row = nlohmann::json::array();
        for (int r = 0; r < vp.right.dim; ++r) {
            nlohmann::json cell = nlohmann::json::array();
            for (int w = 0; w < vp.value.dim; ++w) cell.push_back(rat_to_string(vp.at(l, r, w)));
            row.push_back(std::move(cell));
        }
        form.push_back(std::move(row));
    }
    return nlohmann::json{{"value", vp.value.label}, {"form", std::move(form)}};
}

inline int json_dim(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer()) throw ParseError(std::string("missing dimension ") + key);
    const int d = j[key].get<int>();
    if (d < 0) throw ParseError(std::string("negative dimension ") + key);
    return d;
}

inline TrivialDVB dvb_from_json(const nlohmann::json& j) {
    return TrivialDVB(Space(json_dim(j, "A"), "A"), Space(json_dim(j, "B"), "B"), Space(json_dim(j, "C"), "C"));
}

inline Vec vec_from_json(const nlohmann::json& j, int dim) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim) throw ParseError("vector: wrong length");
    Vec v = zero_vec(dim);
    for (int i = 0; i < dim; ++i) {
        if (!j[static_cast<std::size_t>(i)].is_string()) throw ParseError("vector entries must be rational strings");
        v[static_cast<std::size_t>(i)] = rat_from_string(j[static_cast<std::size_t>(i)].get<std::string>());
    }
    return v;
}

inline nlohmann::json vec_to_json(const Vec& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& x : v) arr.push_back(rat_to_string(x));
    return arr;
}

/// Optional named elements of a stored trivial double:
/// "elements": {"name": {"a": [...], "b": [...], "c": [...]}, ...}
inline std::map<std::string, DVBElement> named_elements_from_json(const nlohmann::json& j, const TrivialDVB& d) {
    std::map<std::string, DVBElement> out;
    if (!j.contains("elements")) return out;
    const auto& elems = j["elements"];
    if (!elems.is_object()) throw ParseError("elements must be an object");
    for (const auto& [name, e] : elems.items()) {
        if (!e.contains("a") || !e.contains("b") || !e.contains("c")) throw ParseError("element needs a, b, c");
        out.emplace(name, DVBElement{vec_from_json(e["a"], d.A.dim), vec_from_json(e["b"], d.B.dim),
                                     vec_from_json(e["c"], d.C.dim)});
    }
    return out;
}

/// Parse the raw maps of a candidate sequence without certifying exactness;
/// callers decide whether a non-exact candidate is an error or a finding.
struct RawSeq {
    Space A, B, C, omega;
    LinMap e, p;
};

inline RawSeq raw_seq_from_json(const nlohmann::json& j) {
    RawSeq r;
    r.A = Space(json_dim(j, "A"), "A");
    r.B = Space(json_dim(j, "B"), "B");
    r.C = Space(json_dim(j, "C"), "C");
    if (!j.contains("e") || !j.contains("p")) throw ParseError("sequence needs maps e and p");
    if (!j["e"].is_array()) throw ParseError("e must be a matrix");
    const int mid_dim = static_cast<int>(j["e"].size());
    r.omega = Space(mid_dim, "Omega");
    r.e = matrix_from_json(j["e"], r.C, r.omega);
    r.p = matrix_from_json(j["p"], r.omega, tensor(r.A, r.B));
    return r;
}

inline DVBSeq seq_from_json(const nlohmann::json& j) {
    RawSeq r = raw_seq_from_json(j);
    return DVBSeq(r.A, r.B, r.C, ShortExactSeq(r.C, r.omega, tensor(r.A, r.B), std::move(r.e), std::move(r.p)));
}

} // namespace dvblab
