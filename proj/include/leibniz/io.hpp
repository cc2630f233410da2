#pragma once

// JSON input documents. Layout:
//   { "schema_version": "1",
//     "objects": { NAME: { "type": "algebra" | "pair" | "poisson" | "module" |
//                                  "poisson_module" | "jet" | "equivalence", ... } } }
// Rationals are strings "p/q" (plain JSON integers are accepted too, floats
// never). Tensors are dense nested arrays or {"shape": [..], "entries": [[i, j, k, "v"], ..]}.

#include "leibniz/algebra.hpp"
#include "leibniz/deformation.hpp"
#include "leibniz/linalg.hpp"
#include "leibniz/rational.hpp"
#include "leibniz/tensor.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace leibniz::io {

using json = nlohmann::ordered_json;

inline const char* schema_version = "1";

/// Malformed input: bad JSON, bad rational, unknown reference, wrong shape.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& where, const std::string& what)
        : std::runtime_error(where.empty() ? what : where + ": " + what), where_(where)
    {
    }
    const std::string& where() const { return where_; }

private:
    std::string where_;
};

struct PairEntry {
    std::string A, L;
    LeibnizPair pair;
    std::optional<Tensor3> a_action;  // A x L -> L, for the Rinehart check
    bool semisimple = false;          // caller's assertion about L
};

struct PoissonEntry {
    std::string A;
    PoissonAlgebra poisson;
};

struct ModuleEntry {
    std::string pair;
    bool self = false;
    PairModule module;
};

struct PoissonModuleEntry {
    std::string poisson;
    bool self = false;
    PoissonModule module;
};

struct JetEntry {
    std::string base;
    DeformationJet jet;
};

struct EquivalenceEntry {
    std::string base;
    EquivalenceJet eq;
};

struct Document {
    std::string schema_version = io::schema_version;
    std::vector<std::pair<std::string, std::string>> names;  // (name, type) in file order
    std::map<std::string, StructureAlgebra> algebras;
    std::map<std::string, PairEntry> pairs;
    std::map<std::string, PoissonEntry> poissons;
    std::map<std::string, ModuleEntry> modules;
    std::map<std::string, PoissonModuleEntry> poisson_modules;
    std::map<std::string, JetEntry> jets;
    std::map<std::string, EquivalenceEntry> equivalences;

    std::optional<std::string> type_of(const std::string& name) const
    {
        for (const auto& [n, t] : names)
            if (n == name)
                return t;
        return std::nullopt;
    }
};

// ---------------------------------------------------------------------------
// reading

namespace detail {

inline Rational rational_at(const json& j, const std::string& where)
{
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const RationalParseError& e) {
            throw ParseError(where, e.what());
        }
    }
    if (j.is_number_integer())
        return parse_rational(j.dump());
    throw ParseError(where, "expected a rational written as a \"p/q\" string");
}

inline std::size_t index_at(const json& j, const std::string& where)
{
    if (!j.is_number_unsigned())
        throw ParseError(where, "expected a non-negative integer");
    return j.get<std::size_t>();
}

inline const json& field(const json& obj, const char* key, const std::string& where)
{
    if (!obj.is_object() || !obj.contains(key))
        throw ParseError(where, std::string("missing field \"") + key + "\"");
    return obj.at(key);
}

inline std::string string_at(const json& j, const std::string& where)
{
    if (!j.is_string())
        throw ParseError(where, "expected a string");
    return j.get<std::string>();
}

inline Tensor3 tensor_at(const json& j, std::size_t d0, std::size_t d1, std::size_t d2, const std::string& where)
{
    Tensor3 t(d0, d1, d2);
    if (j.is_object()) {
        const auto& shape = field(j, "shape", where);
        if (!shape.is_array() || shape.size() != 3)
            throw ParseError(where + "/shape", "expected three dimensions");
        const std::size_t s[3] = {index_at(shape[0], where + "/shape/0"), index_at(shape[1], where + "/shape/1"),
                                  index_at(shape[2], where + "/shape/2")};
        if (s[0] != d0 || s[1] != d1 || s[2] != d2)
            throw ParseError(where + "/shape", "expected shape " + std::to_string(d0) + "x" + std::to_string(d1) +
                                                   "x" + std::to_string(d2));
        const auto& entries = field(j, "entries", where);
        if (!entries.is_array())
            throw ParseError(where + "/entries", "expected an array");
        for (std::size_t n = 0; n < entries.size(); ++n) {
            const auto w = where + "/entries/" + std::to_string(n);
            const auto& e = entries[n];
            if (!e.is_array() || e.size() != 4)
                throw ParseError(w, "expected [i, j, k, value]");
            const auto i = index_at(e[0], w + "/0"), k1 = index_at(e[1], w + "/1"), k2 = index_at(e[2], w + "/2");
            if (i >= d0 || k1 >= d1 || k2 >= d2)
                throw ParseError(w, "index out of range");
            t(i, k1, k2) += rational_at(e[3], w + "/3");
        }
        return t;
    }
    if (!j.is_array() || j.size() != d0)
        throw ParseError(where, "expected a " + std::to_string(d0) + "x" + std::to_string(d1) + "x" +
                                    std::to_string(d2) + " nested array or a sparse tensor object");
    for (std::size_t i = 0; i < d0; ++i) {
        const auto wi = where + "/" + std::to_string(i);
        if (!j[i].is_array() || j[i].size() != d1)
            throw ParseError(wi, "expected an array of length " + std::to_string(d1));
        for (std::size_t k1 = 0; k1 < d1; ++k1) {
            const auto wk = wi + "/" + std::to_string(k1);
            const auto& row = j[i][k1];
            if (!row.is_array() || row.size() != d2)
                throw ParseError(wk, "expected an array of length " + std::to_string(d2));
            for (std::size_t k2 = 0; k2 < d2; ++k2)
                t(i, k1, k2) = rational_at(row[k2], wk + "/" + std::to_string(k2));
        }
    }
    return t;
}

inline RationalMatrix matrix_at(const json& j, std::size_t rows, std::size_t cols, const std::string& where)
{
    RationalMatrix m(rows, cols);
    if (j.is_object()) {
        const auto& shape = field(j, "shape", where);
        if (!shape.is_array() || shape.size() != 2 || index_at(shape[0], where + "/shape/0") != rows ||
            index_at(shape[1], where + "/shape/1") != cols)
            throw ParseError(where + "/shape", "expected shape " + std::to_string(rows) + "x" + std::to_string(cols));
        const auto& entries = field(j, "entries", where);
        if (!entries.is_array())
            throw ParseError(where + "/entries", "expected an array");
        for (std::size_t n = 0; n < entries.size(); ++n) {
            const auto w = where + "/entries/" + std::to_string(n);
            const auto& e = entries[n];
            if (!e.is_array() || e.size() != 3)
                throw ParseError(w, "expected [row, col, value]");
            const auto r = index_at(e[0], w + "/0"), c = index_at(e[1], w + "/1");
            if (r >= rows || c >= cols)
                throw ParseError(w, "index out of range");
            m(r, c) += rational_at(e[2], w + "/2");
        }
        return m;
    }
    if (!j.is_array() || j.size() != rows)
        throw ParseError(where, "expected a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
    for (std::size_t r = 0; r < rows; ++r) {
        const auto wr = where + "/" + std::to_string(r);
        if (!j[r].is_array() || j[r].size() != cols)
            throw ParseError(wr, "expected an array of length " + std::to_string(cols));
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rational_at(j[r][c], wr + "/" + std::to_string(c));
    }
    return m;
}

inline std::vector<Tensor3> tensor_list_at(const json& obj, const char* key, int order, std::size_t d0,
                                           std::size_t d1, std::size_t d2, const std::string& where)
{
    std::vector<Tensor3> out(static_cast<std::size_t>(order), Tensor3(d0, d1, d2));
    if (!obj.contains(key))
        return out;
    const auto& list = obj.at(key);
    const auto w = where + "/" + key;
    if (!list.is_array() || list.size() > static_cast<std::size_t>(order))
        throw ParseError(w, "expected at most " + std::to_string(order) + " terms");
    for (std::size_t i = 0; i < list.size(); ++i)
        out[i] = tensor_at(list[i], d0, d1, d2, w + "/" + std::to_string(i));
    return out;
}

inline std::vector<RationalMatrix> matrix_list_at(const json& obj, const char* key, int order, std::size_t n,
                                                  const std::string& where)
{
    std::vector<RationalMatrix> out(static_cast<std::size_t>(order), RationalMatrix(n, n));
    if (!obj.contains(key))
        return out;
    const auto& list = obj.at(key);
    const auto w = where + "/" + key;
    if (!list.is_array() || list.size() > static_cast<std::size_t>(order))
        throw ParseError(w, "expected at most " + std::to_string(order) + " terms");
    for (std::size_t i = 0; i < list.size(); ++i)
        out[i] = matrix_at(list[i], n, n, w + "/" + std::to_string(i));
    return out;
}

template <class Map>
const auto& lookup(const Map& m, const std::string& name, const char* what, const std::string& where)
{
    auto it = m.find(name);
    if (it == m.end())
        throw ParseError(where, std::string("no ") + what + " named \"" + name + "\"");
    return it->second;
}

inline StructureAlgebra parse_algebra(const json& o, const std::string& w)
{
    const auto kind_s = string_at(field(o, "kind", w), w + "/kind");
    AlgebraKind kind;
    if (kind_s == "associative")
        kind = AlgebraKind::associative;
    else if (kind_s == "lie")
        kind = AlgebraKind::lie;
    else
        throw ParseError(w + "/kind", "expected \"associative\" or \"lie\"");
    const auto& basis = field(o, "basis", w);
    if (!basis.is_array())
        throw ParseError(w + "/basis", "expected a list of labels");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < basis.size(); ++i)
        labels.push_back(string_at(basis[i], w + "/basis/" + std::to_string(i)));
    const auto n = labels.size();
    Tensor3 c = o.contains("structure") ? tensor_at(o.at("structure"), n, n, n, w + "/structure") : Tensor3(n, n, n);
    std::optional<std::size_t> unit;
    if (o.contains("unit")) {
        const auto u = string_at(o.at("unit"), w + "/unit");
        auto it = std::find(labels.begin(), labels.end(), u);
        if (it == labels.end())
            throw ParseError(w + "/unit", "unit \"" + u + "\" is not a basis label");
        unit = static_cast<std::size_t>(it - labels.begin());
    }
    try {
        return StructureAlgebra(kind, std::move(labels), std::move(c), unit);
    } catch (const std::invalid_argument& e) {
        throw ParseError(w, e.what());
    }
}

} // namespace detail

inline Document parse_document(const json& root)
{
    using namespace detail;
    if (!root.is_object())
        throw ParseError("", "top level must be an object");
    Document doc;
    doc.schema_version = string_at(field(root, "schema_version", ""), "/schema_version");
    if (doc.schema_version != schema_version)
        throw ParseError("/schema_version", "unsupported schema version \"" + doc.schema_version + "\"");
    const auto& objects = field(root, "objects", "");
    if (!objects.is_object())
        throw ParseError("/objects", "expected an object");

    static const char* known[] = {"algebra", "pair", "poisson", "module", "poisson_module", "jet", "equivalence"};
    for (const auto& [name, o] : objects.items()) {
        const auto w = "/objects/" + name;
        const auto type = string_at(field(o, "type", w), w + "/type");
        if (std::find(std::begin(known), std::end(known), type) == std::end(known))
            throw ParseError(w + "/type", "unknown object type \"" + type + "\"");
        doc.names.emplace_back(name, type);
    }

    auto each = [&](const char* type, auto&& fn) {
        for (const auto& [name, t] : doc.names)
            if (t == type)
                fn(name, objects.at(name), "/objects/" + name);
    };

    each("algebra", [&](const std::string& name, const json& o, const std::string& w) {
        doc.algebras.emplace(name, parse_algebra(o, w));
    });

    each("pair", [&](const std::string& name, const json& o, const std::string& w) {
        PairEntry e;
        e.A = string_at(field(o, "A", w), w + "/A");
        e.L = string_at(field(o, "L", w), w + "/L");
        const auto& A = lookup(doc.algebras, e.A, "algebra", w + "/A");
        const auto& L = lookup(doc.algebras, e.L, "algebra", w + "/L");
        Tensor3 mu = o.contains("mu") ? tensor_at(o.at("mu"), L.dim, A.dim, A.dim, w + "/mu")
                                      : Tensor3(L.dim, A.dim, A.dim);
        try {
            e.pair = LeibnizPair(A, L, std::move(mu));
        } catch (const std::invalid_argument& ex) {
            throw ParseError(w, ex.what());
        }
        if (o.contains("a_action"))
            e.a_action = tensor_at(o.at("a_action"), A.dim, L.dim, L.dim, w + "/a_action");
        if (o.contains("semisimple")) {
            if (!o.at("semisimple").is_boolean())
                throw ParseError(w + "/semisimple", "expected a boolean");
            e.semisimple = o.at("semisimple").get<bool>();
        }
        doc.pairs.emplace(name, std::move(e));
    });

    each("poisson", [&](const std::string& name, const json& o, const std::string& w) {
        PoissonEntry e;
        e.A = string_at(field(o, "A", w), w + "/A");
        const auto& A = lookup(doc.algebras, e.A, "algebra", w + "/A");
        Tensor3 br = o.contains("bracket") ? tensor_at(o.at("bracket"), A.dim, A.dim, A.dim, w + "/bracket")
                                           : Tensor3(A.dim, A.dim, A.dim);
        try {
            e.poisson = PoissonAlgebra(A, std::move(br));
        } catch (const std::invalid_argument& ex) {
            throw ParseError(w, ex.what());
        }
        doc.poissons.emplace(name, std::move(e));
    });

    auto is_self = [](const json& o, const std::string& w) {
        if (!o.contains("self"))
            return false;
        if (!o.at("self").is_boolean())
            throw ParseError(w + "/self", "expected a boolean");
        return o.at("self").get<bool>();
    };

    each("module", [&](const std::string& name, const json& o, const std::string& w) {
        ModuleEntry e;
        e.pair = string_at(field(o, "pair", w), w + "/pair");
        const auto& pe = lookup(doc.pairs, e.pair, "pair", w + "/pair");
        const auto& pair = pe.pair;
        e.self = is_self(o, w);
        if (e.self) {
            e.module = self_module(pair);
        } else {
            auto& m = e.module;
            m.M_dim = index_at(field(o, "M_dim", w), w + "/M_dim");
            m.P_dim = index_at(field(o, "P_dim", w), w + "/P_dim");
            const auto a = pair.A.dim, l = pair.L.dim;
            auto opt = [&](const char* key, std::size_t d0, std::size_t d1, std::size_t d2) {
                return o.contains(key) ? tensor_at(o.at(key), d0, d1, d2, w + "/" + key) : Tensor3(d0, d1, d2);
            };
            m.left_act = opt("left_act", a, m.M_dim, m.M_dim);
            m.right_act = opt("right_act", m.M_dim, a, m.M_dim);
            m.L_on_M = opt("L_on_M", l, m.M_dim, m.M_dim);
            m.L_on_P = opt("L_on_P", l, m.P_dim, m.P_dim);
            m.P_on_A = opt("P_on_A", m.P_dim, a, m.M_dim);
        }
        doc.modules.emplace(name, std::move(e));
    });

    each("poisson_module", [&](const std::string& name, const json& o, const std::string& w) {
        PoissonModuleEntry e;
        e.poisson = string_at(field(o, "poisson", w), w + "/poisson");
        const auto& P = lookup(doc.poissons, e.poisson, "poisson algebra", w + "/poisson").poisson;
        e.self = is_self(o, w);
        if (e.self) {
            e.module = self_module(P);
        } else {
            auto& m = e.module;
            m.M_dim = index_at(field(o, "M_dim", w), w + "/M_dim");
            const auto a = P.A.dim;
            auto opt = [&](const char* key, std::size_t d0, std::size_t d1, std::size_t d2) {
                return o.contains(key) ? tensor_at(o.at(key), d0, d1, d2, w + "/" + key) : Tensor3(d0, d1, d2);
            };
            m.left_act = opt("left_act", a, m.M_dim, m.M_dim);
            m.right_act = opt("right_act", m.M_dim, a, m.M_dim);
            m.bracket_act = opt("bracket_act", a, m.M_dim, m.M_dim);
        }
        doc.poisson_modules.emplace(name, std::move(e));
    });

    auto order_of = [](const json& o, const std::string& w) {
        const auto n = index_at(field(o, "order", w), w + "/order");
        if (n > 64)
            throw ParseError(w + "/order", "order too large");
        return static_cast<int>(n);
    };

    each("jet", [&](const std::string& name, const json& o, const std::string& w) {
        JetEntry e;
        e.base = string_at(field(o, "base", w), w + "/base");
        const int N = order_of(o, w);
        if (doc.pairs.count(e.base)) {
            const auto& pair = doc.pairs.at(e.base).pair;
            const auto a = pair.A.dim, l = pair.L.dim;
            e.jet = DeformationJet::zero(pair, N);
            e.jet.alpha = tensor_list_at(o, "alpha", N, a, a, a, w);
            e.jet.mu = tensor_list_at(o, "mu", N, l, a, a, w);
            e.jet.lambda = tensor_list_at(o, "lambda", N, l, l, l, w);
        } else if (doc.poissons.count(e.base)) {
            const auto& P = doc.poissons.at(e.base).poisson;
            const auto a = P.A.dim;
            if (o.contains("mu"))
                throw ParseError(w + "/mu", "Poisson jets carry no separate mu terms");
            e.jet = DeformationJet::zero(P, N);
            e.jet.alpha = tensor_list_at(o, "alpha", N, a, a, a, w);
            e.jet.lambda = tensor_list_at(o, "lambda", N, a, a, a, w);
        } else {
            throw ParseError(w + "/base", "no pair or poisson algebra named \"" + e.base + "\"");
        }
        try {
            leibniz::detail::require_jet_shapes(e.jet);
        } catch (const std::invalid_argument& ex) {
            throw ParseError(w, ex.what());
        }
        doc.jets.emplace(name, std::move(e));
    });

    each("equivalence", [&](const std::string& name, const json& o, const std::string& w) {
        EquivalenceEntry e;
        e.base = string_at(field(o, "base", w), w + "/base");
        const int N = order_of(o, w);
        if (doc.pairs.count(e.base)) {
            const auto& pair = doc.pairs.at(e.base).pair;
            e.eq = EquivalenceJet::identity(Branch::leibniz, pair.A.dim, pair.L.dim, N);
            e.eq.phi = matrix_list_at(o, "phi", N, pair.A.dim, w);
            e.eq.psi = matrix_list_at(o, "psi", N, pair.L.dim, w);
        } else if (doc.poissons.count(e.base)) {
            const auto& P = doc.poissons.at(e.base).poisson;
            if (o.contains("psi"))
                throw ParseError(w + "/psi", "Poisson equivalences use psi = phi");
            e.eq = EquivalenceJet::identity(Branch::poisson, P.A.dim, P.A.dim, N);
            e.eq.phi = matrix_list_at(o, "phi", N, P.A.dim, w);
        } else {
            throw ParseError(w + "/base", "no pair or poisson algebra named \"" + e.base + "\"");
        }
        doc.equivalences.emplace(name, std::move(e));
    });

    return doc;
}

inline Document parse_document_string(const std::string& text)
{
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("", std::string("invalid JSON (byte ") + std::to_string(e.byte) + "): " + e.what());
    }
    return parse_document(root);
}

inline Document load_document(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError(path, "cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_document_string(ss.str());
    } catch (const ParseError& e) {
        throw ParseError(path + (e.where().empty() ? "" : ":" + e.where()),
                         std::string(e.what()).substr(e.where().empty() ? 0 : e.where().size() + 2));
    }
}

// ---------------------------------------------------------------------------
// writing (sparse tensors, rationals as strings)

inline json to_json(const Rational& r) { return to_string(r); }

inline json to_json(const Tensor3& t)
{
    json entries = json::array();
    for (std::size_t i = 0; i < t.dim(0); ++i)
        for (std::size_t j = 0; j < t.dim(1); ++j)
            for (std::size_t k = 0; k < t.dim(2); ++k)
                if (sgn(t(i, j, k)) != 0)
                    entries.push_back(json::array({i, j, k, to_string(t(i, j, k))}));
    return json{{"shape", json::array({t.dim(0), t.dim(1), t.dim(2)})}, {"entries", entries}};
}

inline json to_json(const RationalMatrix& m)
{
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (sgn(m(i, j)) != 0)
                entries.push_back(json::array({i, j, to_string(m(i, j))}));
    return json{{"shape", json::array({m.rows(), m.cols()})}, {"entries", entries}};
}

inline json to_json(const Vector& v)
{
    json a = json::array();
    for (const auto& x : v)
        a.push_back(to_string(x));
    return a;
}

inline json to_json(const StructureAlgebra& A)
{
    json o{{"type", "algebra"}, {"kind", to_string(A.kind)}, {"basis", A.basis_labels}};
    if (A.unit_index)
        o["unit"] = A.basis_labels[*A.unit_index];
    o["structure"] = to_json(A.c);
    return o;
}

inline json to_json(const Document& doc)
{
    json objects = json::object();
    for (const auto& [name, type] : doc.names) {
        json o;
        if (type == "algebra") {
            o = to_json(doc.algebras.at(name));
        } else if (type == "pair") {
            const auto& e = doc.pairs.at(name);
            o = {{"type", "pair"}, {"A", e.A}, {"L", e.L}, {"mu", to_json(e.pair.mu)}};
            if (e.a_action)
                o["a_action"] = to_json(*e.a_action);
            if (e.semisimple)
                o["semisimple"] = true;
        } else if (type == "poisson") {
            const auto& e = doc.poissons.at(name);
            o = {{"type", "poisson"}, {"A", e.A}, {"bracket", to_json(e.poisson.bracket)}};
        } else if (type == "module") {
            const auto& e = doc.modules.at(name);
            o = {{"type", "module"}, {"pair", e.pair}};
            if (e.self) {
                o["self"] = true;
            } else {
                const auto& m = e.module;
                o["M_dim"] = m.M_dim;
                o["P_dim"] = m.P_dim;
                o["left_act"] = to_json(m.left_act);
                o["right_act"] = to_json(m.right_act);
                o["L_on_M"] = to_json(m.L_on_M);
                o["L_on_P"] = to_json(m.L_on_P);
                o["P_on_A"] = to_json(m.P_on_A);
            }
        } else if (type == "poisson_module") {
            const auto& e = doc.poisson_modules.at(name);
            o = {{"type", "poisson_module"}, {"poisson", e.poisson}};
            if (e.self) {
                o["self"] = true;
            } else {
                const auto& m = e.module;
                o["M_dim"] = m.M_dim;
                o["left_act"] = to_json(m.left_act);
                o["right_act"] = to_json(m.right_act);
                o["bracket_act"] = to_json(m.bracket_act);
            }
        } else if (type == "jet") {
            const auto& e = doc.jets.at(name);
            o = {{"type", "jet"}, {"base", e.base}, {"order", e.jet.order}};
            auto list = [](const std::vector<Tensor3>& ts) {
                json a = json::array();
                for (const auto& t : ts)
                    a.push_back(to_json(t));
                return a;
            };
            o["alpha"] = list(e.jet.alpha);
            if (e.jet.branch == Branch::leibniz)
                o["mu"] = list(e.jet.mu);
            o["lambda"] = list(e.jet.lambda);
        } else if (type == "equivalence") {
            const auto& e = doc.equivalences.at(name);
            o = {{"type", "equivalence"}, {"base", e.base}, {"order", e.eq.order}};
            auto list = [](const std::vector<RationalMatrix>& ms) {
                json a = json::array();
                for (const auto& m : ms)
                    a.push_back(to_json(m));
                return a;
            };
            o["phi"] = list(e.eq.phi);
            if (e.eq.branch == Branch::leibniz)
                o["psi"] = list(e.eq.psi);
        }
        objects[name] = std::move(o);
    }
    return json{{"schema_version", doc.schema_version}, {"objects", objects}};
}

} // namespace leibniz::io
