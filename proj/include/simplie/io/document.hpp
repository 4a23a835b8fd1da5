#pragma once

#include <json.hpp>

#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "simplie/dgla/build.hpp"
#include "simplie/hypercrossed/crossed_module.hpp"
#include "simplie/hypercrossed/two_crossed_module.hpp"
#include "simplie/simplicial/moore.hpp"
#include "simplie/simplicial/simplicial_lie_algebra.hpp"

namespace simplie {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "simplie";
inline constexpr const char* kToolVersion = "1.0.0";

// 64-bit FNV-1a of the raw input bytes, as 16 hex digits.
inline std::string fnv1a64(const std::string& bytes) {
    unsigned long long h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

// ---------------------------------------------------------------------------
// Field access and scalar parsing. Every malformed-document path is an
// InputError; mathematical failures raised by validating constructors pass
// through as ValidationError.
// ---------------------------------------------------------------------------

inline const Json& json_field(const Json& j, const std::string& name) {
    if (!j.is_object() || !j.contains(name)) throw InputError("missing field '" + name + "'");
    return j.at(name);
}

inline size_t json_count(const Json& j, const std::string& name) {
    const Json& v = json_field(j, name);
    if (!v.is_number_integer() || v.get<long long>() < 0)
        throw InputError("field '" + name + "' must be a nonnegative integer");
    return (size_t)v.get<long long>();
}

inline Rat rat_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return parse_rational(std::to_string(j.get<long long>()));
    throw InputError("rational entries must be strings \"p/q\" or integers");
}

inline Vec vec_from_json(const Json& j, size_t expected, const std::string& what) {
    if (!j.is_array() || j.size() != expected)
        throw InputError(what + " must be an array of " + std::to_string(expected) + " rationals");
    Vec v(expected);
    for (size_t i = 0; i < expected; ++i) v[i] = rat_from_json(j.at(i));
    return v;
}

inline Json vec_to_json(const Vec& v) {
    Json a = Json::array();
    for (const Rat& x : v) a.push_back(rational_to_string(x));
    return a;
}

// Matrices carry their domain and codomain as named tags; the parser
// insists on the tags it expects so that a transposed or misplaced block
// cannot slip through silently.
inline Mat mat_from_json(const Json& j, const std::string& domain, const std::string& codomain,
                         size_t rows, size_t cols) {
    size_t r = json_count(j, "rows"), c = json_count(j, "cols");
    const Json& dj = json_field(j, "domain");
    const Json& cj = json_field(j, "codomain");
    if (!dj.is_string() || !cj.is_string() || dj.get<std::string>() != domain ||
        cj.get<std::string>() != codomain)
        throw InputError("matrix must be tagged domain '" + domain + "', codomain '" + codomain + "'");
    if (r != rows || c != cols)
        throw InputError("matrix " + domain + " -> " + codomain + " must be " +
                         std::to_string(rows) + "x" + std::to_string(cols));
    return Mat(rows, cols, vec_from_json(json_field(j, "entries"), rows * cols, "matrix entries"));
}

inline Json mat_to_json(const Mat& m, const std::string& domain, const std::string& codomain) {
    Json j = Json::object();
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["domain"] = domain;
    j["codomain"] = codomain;
    j["entries"] = vec_to_json(m.flat());
    return j;
}

// {"dim": n, "structure": [n^3 rationals, (i*n + j)*n + k]}
inline LieAlgebra algebra_from_json(const Json& j) {
    size_t n = json_count(j, "dim");
    return LieAlgebra(n, vec_from_json(json_field(j, "structure"), n * n * n, "structure constants"));
}

inline Json algebra_to_json(const LieAlgebra& g) {
    Json j = Json::object();
    j["dim"] = g.dim();
    j["structure"] = vec_to_json(g.structure_constants());
    return j;
}

// ---------------------------------------------------------------------------
// Input documents
// ---------------------------------------------------------------------------

struct InputDocument {
    std::string kind;     // "simplicial" | "crossed_module" | "two_crossed_module"
    int truncation = -1;  // generation depth for presentations; -1 = default
    std::optional<SimplicialLieAlgebra> simplicial;
    std::optional<CrossedModule> crossed;
    std::optional<TwoCrossedModule> two_crossed;
};

namespace detail {

inline std::string level_tag(size_t n) { return "level_" + std::to_string(n); }
inline std::string degree_tag(int n) { return "degree_" + std::to_string(n); }

inline SimplicialLieAlgebra simplicial_from_json(const Json& j) {
    const Json& levels = json_field(j, "levels");
    if (!levels.is_array() || levels.empty()) throw InputError("'levels' must be a nonempty array");
    SimplicialLieAlgebra S;
    for (const Json& lj : levels) S.level.push_back(algebra_from_json(lj));
    size_t K = S.truncation();
    const Json& faces = json_field(j, "faces");
    const Json& degens = json_field(j, "degeneracies");
    if (!faces.is_array() || faces.size() != K + 1)
        throw InputError("'faces' must list one group per level");
    if (!degens.is_array() || degens.size() != K + 1)
        throw InputError("'degeneracies' must list one group per level");
    S.face.resize(K + 1);
    S.degen.resize(K + 1);
    if (!faces.at(0).is_array() || !faces.at(0).empty())
        throw InputError("level 0 has no face maps; 'faces[0]' must be []");
    for (size_t n = 1; n <= K; ++n) {
        const Json& grp = faces.at(n);
        if (!grp.is_array() || grp.size() != n + 1)
            throw InputError("level " + std::to_string(n) + " needs " + std::to_string(n + 1) +
                             " face maps");
        for (size_t i = 0; i <= n; ++i)
            S.face[n].push_back(
                mat_from_json(grp.at(i), level_tag(n), level_tag(n - 1), S.dim(n - 1), S.dim(n)));
    }
    if (!degens.at(K).is_array() || !degens.at(K).empty())
        throw InputError("the top level stores no degeneracies; last group must be []");
    for (size_t n = 0; n < K; ++n) {
        const Json& grp = degens.at(n);
        if (!grp.is_array() || grp.size() != n + 1)
            throw InputError("level " + std::to_string(n) + " needs " + std::to_string(n + 1) +
                             " degeneracy maps");
        for (size_t i = 0; i <= n; ++i)
            S.degen[n].push_back(
                mat_from_json(grp.at(i), level_tag(n), level_tag(n + 1), S.dim(n + 1), S.dim(n)));
    }
    return S;
}

inline CrossedModule crossed_from_json(const Json& j) {
    CrossedModule cm;
    cm.d = algebra_from_json(json_field(j, "base"));
    cm.h = algebra_from_json(json_field(j, "top"));
    cm.delta = mat_from_json(json_field(j, "boundary"), "top", "base", cm.d.dim(), cm.h.dim());
    const Json& act = json_field(j, "action");
    if (!act.is_array() || act.size() != cm.d.dim())
        throw InputError("'action' needs one matrix per base generator");
    for (const Json& aj : act)
        cm.action.push_back(mat_from_json(aj, "top", "top", cm.h.dim(), cm.h.dim()));
    return cm;
}

inline TwoCrossedModule two_crossed_from_json(const Json& j) {
    TwoCrossedModule t;
    t.h = algebra_from_json(json_field(j, "top"));
    t.d = algebra_from_json(json_field(j, "middle"));
    t.k = algebra_from_json(json_field(j, "bottom"));
    t.delta2 = mat_from_json(json_field(j, "boundary_top"), "top", "middle", t.d.dim(), t.h.dim());
    t.delta1 =
        mat_from_json(json_field(j, "boundary_bottom"), "middle", "bottom", t.k.dim(), t.d.dim());
    const Json& am = json_field(j, "action_middle");
    const Json& at = json_field(j, "action_top");
    if (!am.is_array() || am.size() != t.k.dim() || !at.is_array() || at.size() != t.k.dim())
        throw InputError("action tables need one matrix per bottom generator");
    for (const Json& aj : am)
        t.action_d.push_back(mat_from_json(aj, "middle", "middle", t.d.dim(), t.d.dim()));
    for (const Json& aj : at)
        t.action_h.push_back(mat_from_json(aj, "top", "top", t.h.dim(), t.h.dim()));
    const Json& lift = json_field(j, "lift");
    size_t dd = t.d.dim();
    if (!lift.is_array() || lift.size() != dd * dd)
        throw InputError("'lift' needs one value per ordered pair of middle generators");
    for (size_t i = 0; i < dd * dd; ++i)
        t.lift.push_back(vec_from_json(lift.at(i), t.h.dim(), "lift entry"));
    return t;
}

}  // namespace detail

inline InputDocument parse_input(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const std::exception& e) {
        throw InputError(std::string("not a structured document: ") + e.what());
    }
    try {
        InputDocument doc;
        const Json& kj = json_field(j, "kind");
        if (!kj.is_string()) throw InputError("'kind' must be a string");
        doc.kind = kj.get<std::string>();
        if (j.contains("truncation")) doc.truncation = (int)json_count(j, "truncation");
        if (doc.kind == "simplicial") {
            doc.simplicial = detail::simplicial_from_json(json_field(j, "simplicial"));
            if (doc.truncation >= 0 && (size_t)doc.truncation != doc.simplicial->truncation())
                throw InputError("'truncation' of a direct tower must match its level count");
        } else if (doc.kind == "crossed_module") {
            doc.crossed = detail::crossed_from_json(json_field(j, "crossed_module"));
        } else if (doc.kind == "two_crossed_module") {
            doc.two_crossed = detail::two_crossed_from_json(json_field(j, "two_crossed_module"));
        } else {
            throw InputError("unknown kind '" + doc.kind +
                             "' (expected simplicial, crossed_module or two_crossed_module)");
        }
        return doc;
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed document: ") + e.what());
    }
}

inline Json input_to_json(const SimplicialLieAlgebra& S) {
    Json j = Json::object();
    j["kind"] = "simplicial";
    Json p = Json::object();
    size_t K = S.truncation();
    Json levels = Json::array();
    for (size_t n = 0; n <= K; ++n) levels.push_back(algebra_to_json(S.level[n]));
    p["levels"] = levels;
    Json faces = Json::array();
    faces.push_back(Json::array());
    for (size_t n = 1; n <= K; ++n) {
        Json grp = Json::array();
        for (size_t i = 0; i <= n; ++i)
            grp.push_back(mat_to_json(S.face[n][i], detail::level_tag(n), detail::level_tag(n - 1)));
        faces.push_back(grp);
    }
    p["faces"] = faces;
    Json degens = Json::array();
    for (size_t n = 0; n < K; ++n) {
        Json grp = Json::array();
        for (size_t i = 0; i <= n; ++i)
            grp.push_back(mat_to_json(S.degen[n][i], detail::level_tag(n), detail::level_tag(n + 1)));
        degens.push_back(grp);
    }
    degens.push_back(Json::array());
    p["degeneracies"] = degens;
    j["simplicial"] = p;
    return j;
}

inline Json input_to_json(const CrossedModule& cm, int truncation = -1) {
    Json j = Json::object();
    j["kind"] = "crossed_module";
    if (truncation >= 0) j["truncation"] = truncation;
    Json p = Json::object();
    p["base"] = algebra_to_json(cm.d);
    p["top"] = algebra_to_json(cm.h);
    p["boundary"] = mat_to_json(cm.delta, "top", "base");
    Json act = Json::array();
    for (const Mat& m : cm.action) act.push_back(mat_to_json(m, "top", "top"));
    p["action"] = act;
    j["crossed_module"] = p;
    return j;
}

inline Json input_to_json(const TwoCrossedModule& t, int truncation = -1) {
    Json j = Json::object();
    j["kind"] = "two_crossed_module";
    if (truncation >= 0) j["truncation"] = truncation;
    Json p = Json::object();
    p["top"] = algebra_to_json(t.h);
    p["middle"] = algebra_to_json(t.d);
    p["bottom"] = algebra_to_json(t.k);
    p["boundary_top"] = mat_to_json(t.delta2, "top", "middle");
    p["boundary_bottom"] = mat_to_json(t.delta1, "middle", "bottom");
    Json am = Json::array(), at = Json::array(), lift = Json::array();
    for (const Mat& m : t.action_d) am.push_back(mat_to_json(m, "middle", "middle"));
    for (const Mat& m : t.action_h) at.push_back(mat_to_json(m, "top", "top"));
    for (const Vec& v : t.lift) lift.push_back(vec_to_json(v));
    p["action_middle"] = am;
    p["action_top"] = at;
    p["lift"] = lift;
    j["two_crossed_module"] = p;
    return j;
}

// ---------------------------------------------------------------------------
// Output documents
// ---------------------------------------------------------------------------

inline Json issues_to_json(const Report& rep) {
    Json arr = Json::array();
    for (const Issue& is : rep.issues) {
        Json o = Json::object();
        o["law"] = is.law;
        o["where"] = is.where;
        if (!is.detail.empty()) o["detail"] = is.detail;
        arr.push_back(o);
    }
    return arr;
}

inline Json moore_to_json(const MooreComplex& M) {
    Json o = Json::object();
    size_t k = M.length();
    o["length"] = k;
    Json dims = Json::array();
    for (const Subspace& N : M.N) dims.push_back(N.dim());
    o["dims"] = dims;
    Json bs = Json::array();
    for (size_t n = 1; n <= k; ++n)
        bs.push_back(mat_to_json(M.delta[n], detail::degree_tag((int)n), detail::degree_tag((int)n - 1)));
    o["boundaries"] = bs;
    return o;
}

inline Json dgla_to_json(const Dgla& G, const MooreComplex& M) {
    Json o = Json::object();
    o["max_degree"] = G.k;
    o["dims"] = G.dims;
    Json bases = Json::array();
    for (int n = 0; n <= G.k; ++n) {
        Json b = Json::array();
        for (const Vec& v : M.N[(size_t)n].basis()) b.push_back(vec_to_json(v));
        bases.push_back(b);
    }
    o["bases"] = bases;
    Json ds = Json::array();
    for (int n = 1; n <= G.k; ++n)
        ds.push_back(mat_to_json(G.d[(size_t)n], detail::degree_tag(n), detail::degree_tag(n - 1)));
    o["differential"] = ds;
    Json brs = Json::array();
    for (int n1 = 0; n1 <= G.k; ++n1)
        for (int n2 = 0; n1 + n2 <= G.k; ++n2) {
            Json e = Json::object();
            e["degrees"] = Json::array({n1, n2});
            e["shape"] = Json::array({G.dim(n1), G.dim(n2)});
            Json vals = Json::array();
            for (const Vec& v : G.bracket[(size_t)n1][(size_t)n2]) vals.push_back(vec_to_json(v));
            e["values"] = vals;
            brs.push_back(e);
        }
    o["brackets"] = brs;
    return o;
}

// Re-ingests the dgla section of an output document as a checkable object.
inline Dgla dgla_from_json(const Json& o) {
    Dgla G;
    long kk = (long)json_count(o, "max_degree");
    G.k = (int)kk;
    const Json& dims = json_field(o, "dims");
    if (!dims.is_array() || dims.size() != (size_t)G.k + 1)
        throw InputError("'dims' must list one dimension per degree 0..max_degree");
    for (const Json& dj : dims) {
        if (!dj.is_number_integer() || dj.get<long long>() < 0)
            throw InputError("'dims' entries must be nonnegative integers");
        G.dims.push_back((size_t)dj.get<long long>());
    }
    const Json& ds = json_field(o, "differential");
    if (!ds.is_array() || ds.size() != (size_t)G.k)
        throw InputError("'differential' must list one matrix per degree 1..max_degree");
    G.d.resize((size_t)G.k + 1);
    for (int n = 1; n <= G.k; ++n)
        G.d[(size_t)n] = mat_from_json(ds.at((size_t)n - 1), detail::degree_tag(n),
                                       detail::degree_tag(n - 1), G.dim(n - 1), G.dim(n));
    const Json& brs = json_field(o, "brackets");
    size_t expected = 0;
    for (int n1 = 0; n1 <= G.k; ++n1)
        for (int n2 = 0; n1 + n2 <= G.k; ++n2) ++expected;
    if (!brs.is_array() || brs.size() != expected)
        throw InputError("'brackets' must list every degree pair with total degree <= max_degree");
    G.bracket.assign((size_t)G.k + 1, std::vector<std::vector<Vec>>((size_t)G.k + 1));
    std::vector<std::vector<bool>> seen((size_t)G.k + 1, std::vector<bool>((size_t)G.k + 1, false));
    for (const Json& e : brs) {
        const Json& deg = json_field(e, "degrees");
        if (!deg.is_array() || deg.size() != 2 || !deg.at(0).is_number_integer() ||
            !deg.at(1).is_number_integer())
            throw InputError("bracket 'degrees' must be a pair of integers");
        int n1 = deg.at(0).get<int>(), n2 = deg.at(1).get<int>();
        if (n1 < 0 || n2 < 0 || n1 + n2 > G.k) throw InputError("bracket degrees out of range");
        if (seen[(size_t)n1][(size_t)n2]) throw InputError("duplicate bracket table");
        seen[(size_t)n1][(size_t)n2] = true;
        const Json& shape = json_field(e, "shape");
        if (!shape.is_array() || shape.size() != 2 || shape.at(0).get<size_t>() != G.dim(n1) ||
            shape.at(1).get<size_t>() != G.dim(n2))
            throw InputError("bracket 'shape' must match the degree dimensions");
        const Json& vals = json_field(e, "values");
        size_t cnt = G.dim(n1) * G.dim(n2);
        if (!vals.is_array() || vals.size() != cnt)
            throw InputError("bracket table needs one value per basis pair");
        std::vector<Vec> tab(cnt);
        for (size_t t = 0; t < cnt; ++t)
            tab[t] = vec_from_json(vals.at(t), G.dim(n1 + n2), "bracket value");
        G.bracket[(size_t)n1][(size_t)n2] = std::move(tab);
    }
    return G;
}

inline Json sign_table_to_json(const DglaBuild& B) {
    Json o = Json::object();
    Json ds = Json::array();
    for (int n = 1; n <= B.dgla.k; ++n) ds.push_back(B.d_route_sign[(size_t)n]);
    o["differential"] = ds;
    Json brs = Json::array();
    for (int n1 = 0; n1 <= B.dgla.k; ++n1)
        for (int n2 = 0; n1 + n2 <= B.dgla.k; ++n2) {
            Json e = Json::object();
            e["degrees"] = Json::array({n1, n2});
            e["sign"] = B.bracket_route_sign[(size_t)n1][(size_t)n2];
            brs.push_back(e);
        }
    o["brackets"] = brs;
    return o;
}

// Issues for every recorded route sign that is not +1. Empty means the
// pairing formula and the superfield extraction produced identical tables.
inline Report route_sign_report(const DglaBuild& B) {
    Report rep;
    for (int n = 1; n <= B.dgla.k; ++n)
        if (B.d_route_sign[(size_t)n] != 1)
            rep.add("route_sign_differential", {n}, "routes differ by a recorded global sign");
    for (int n1 = 0; n1 <= B.dgla.k; ++n1)
        for (int n2 = 0; n1 + n2 <= B.dgla.k; ++n2)
            if (B.bracket_route_sign[(size_t)n1][(size_t)n2] != 1)
                rep.add("route_sign_bracket", {n1, n2}, "routes differ by a recorded global sign");
    return rep;
}

}  // namespace simplie
