#pragma once

/// File formats and report rendering.  Presentations, actions, morphisms and
/// skew chains are JSON documents with scalars in the `-?digits(/digits)?`
/// text format; missing entries mean zero.  All writers emit deterministic,
/// insertion-ordered output.

#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cacti/algebra.hpp"
#include "cacti/hochschild.hpp"
#include "cacti/homology.hpp"
#include "cacti/module_algebra.hpp"

namespace cacti {

using ordered_json = nlohmann::ordered_json;

namespace io {

inline void check_label(const std::string& label) {
    if (label.empty()) throw MalformedPresentation("empty basis label");
    for (char c : label)
        if (c == '*' || c == '|' || c == '.' || c == ',' || std::isspace(static_cast<unsigned char>(c)))
            throw MalformedPresentation("label '" + label + "' contains a reserved character");
}

inline Scalar scalar_from_json(const nlohmann::json& j, const Field& field) {
    if (j.is_string()) return parse_scalar(j.get<std::string>(), field);
    if (j.is_number_integer()) return Scalar::of_int(field, j.get<long>());
    throw ParseError("scalar must be a string or an integer");
}

inline Field field_from_json(const nlohmann::json& j) {
    if (!j.contains("kind")) throw ParseError("field needs a 'kind'");
    std::string kind = j["kind"].get<std::string>();
    if (kind == "Rational") return Field::rationals();
    if (kind == "Prime") {
        if (!j.contains("p")) throw ParseError("prime field needs 'p'");
        return Field::prime(j["p"].get<long>());
    }
    throw ParseError("unknown field kind '" + kind + "'");
}

inline ordered_json field_to_json(const Field& f) {
    ordered_json j;
    j["kind"] = f.kind == FieldKind::Rational ? "Rational" : "Prime";
    if (f.kind == FieldKind::Prime) j["p"] = f.p;
    return j;
}

inline nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return j;
}

/// shared part of algebra and bialgebra presentations
inline void load_algebra_core(const nlohmann::json& j, AlgebraPresentation& P) {
    if (!j.contains("name") || !j.contains("field") || !j.contains("basis") || !j.contains("unit"))
        throw ParseError("presentation needs name, field, basis, unit");
    P.name = j["name"].get<std::string>();
    P.field = field_from_json(j["field"]);
    for (const auto& b : j["basis"]) {
        std::string label = b.get<std::string>();
        check_label(label);
        P.basis.push_back(label);
    }
    const int n = P.dim();
    if (j.contains("degrees")) {
        for (const auto& d : j["degrees"]) P.degree.push_back(d.get<int>());
    } else {
        P.degree.assign(n, 0);
    }
    P.unit = P.index_of(j["unit"].get<std::string>());
    if (P.unit < 0) throw MalformedPresentation("unit label not in basis");

    P.mult.assign(n, std::vector<Vec>(n, Vec(n, Scalar::zero(P.field))));
    if (j.contains("mult"))
        for (const auto& [key, val] : j["mult"].items()) {
            auto star = key.find('*');
            if (star == std::string::npos) throw ParseError("mult key '" + key + "' needs 'a*b'");
            int a = P.index_of(key.substr(0, star));
            int b = P.index_of(key.substr(star + 1));
            if (a < 0 || b < 0) throw MalformedPresentation("mult key '" + key + "' names unknown labels");
            for (const auto& [lab, sc] : val.items()) {
                int k = P.index_of(lab);
                if (k < 0) throw MalformedPresentation("mult value label '" + lab + "' unknown");
                P.mult[a][b][k] = scalar_from_json(sc, P.field);
            }
        }
    if (j.contains("differential")) {
        P.differential.assign(n, Vec(n, Scalar::zero(P.field)));
        for (const auto& [key, val] : j["differential"].items()) {
            int a = P.index_of(key);
            if (a < 0) throw MalformedPresentation("differential key '" + key + "' unknown");
            for (const auto& [lab, sc] : val.items()) {
                int k = P.index_of(lab);
                if (k < 0) throw MalformedPresentation("differential label '" + lab + "' unknown");
                P.differential[a][k] = scalar_from_json(sc, P.field);
            }
        }
    }
}

inline AlgebraPresentation load_algebra(const std::string& path) {
    AlgebraPresentation P;
    load_algebra_core(read_json_file(path), P);
    P.validate_shape();
    return P;
}

inline BialgebraPresentation load_bialgebra(const std::string& path) {
    nlohmann::json j = read_json_file(path);
    BialgebraPresentation P;
    load_algebra_core(j, static_cast<AlgebraPresentation&>(P));
    const int n = P.dim();
    if (!j.contains("comult") || !j.contains("counit"))
        throw ParseError(path + ": bialgebra presentation needs comult and counit");
    P.comult.assign(n, TensorSquare(n, Vec(n, Scalar::zero(P.field))));
    for (const auto& [key, val] : j["comult"].items()) {
        int a = P.index_of(key);
        if (a < 0) throw MalformedPresentation("comult key '" + key + "' unknown");
        for (const auto& [pair, sc] : val.items()) {
            auto bar = pair.find('|');
            if (bar == std::string::npos) throw ParseError("comult entry '" + pair + "' needs 'b|c'");
            int b = P.index_of(pair.substr(0, bar));
            int c = P.index_of(pair.substr(bar + 1));
            if (b < 0 || c < 0) throw MalformedPresentation("comult entry '" + pair + "' names unknown labels");
            P.comult[a][b][c] = scalar_from_json(sc, P.field);
        }
    }
    P.counit.assign(n, Scalar::zero(P.field));
    for (const auto& [key, sc] : j["counit"].items()) {
        int a = P.index_of(key);
        if (a < 0) throw MalformedPresentation("counit key '" + key + "' unknown");
        P.counit[a] = scalar_from_json(sc, P.field);
    }
    P.validate_shape();
    return P;
}

inline ordered_json algebra_core_to_json(const AlgebraPresentation& P) {
    ordered_json j;
    j["name"] = P.name;
    j["field"] = field_to_json(P.field);
    j["basis"] = P.basis;
    j["degrees"] = P.degree;
    j["unit"] = P.basis[P.unit];
    ordered_json mult = ordered_json::object();
    for (int a = 0; a < P.dim(); ++a)
        for (int b = 0; b < P.dim(); ++b) {
            ordered_json entry = ordered_json::object();
            for (int k = 0; k < P.dim(); ++k)
                if (!P.mult[a][b][k].is_zero()) entry[P.basis[k]] = P.mult[a][b][k].str();
            if (!entry.empty()) mult[P.basis[a] + "*" + P.basis[b]] = entry;
        }
    j["mult"] = mult;
    if (P.has_differential()) {
        ordered_json diff = ordered_json::object();
        for (int a = 0; a < P.dim(); ++a) {
            ordered_json entry = ordered_json::object();
            for (int k = 0; k < P.dim(); ++k)
                if (!P.differential[a][k].is_zero()) entry[P.basis[k]] = P.differential[a][k].str();
            if (!entry.empty()) diff[P.basis[a]] = entry;
        }
        j["differential"] = diff;
    }
    return j;
}

inline ordered_json bialgebra_to_json(const BialgebraPresentation& P) {
    ordered_json j = algebra_core_to_json(P);
    ordered_json comult = ordered_json::object();
    for (int a = 0; a < P.dim(); ++a) {
        ordered_json entry = ordered_json::object();
        for (int b = 0; b < P.dim(); ++b)
            for (int c = 0; c < P.dim(); ++c)
                if (!P.comult[a][b][c].is_zero())
                    entry[P.basis[b] + "|" + P.basis[c]] = P.comult[a][b][c].str();
        if (!entry.empty()) comult[P.basis[a]] = entry;
    }
    j["comult"] = comult;
    ordered_json counit = ordered_json::object();
    for (int a = 0; a < P.dim(); ++a)
        if (!P.counit[a].is_zero()) counit[P.basis[a]] = P.counit[a].str();
    j["counit"] = counit;
    return j;
}

inline std::string directory_of(const std::string& path) {
    auto slash = path.find_last_of('/');
    return slash == std::string::npos ? std::string(".") : path.substr(0, slash);
}

inline std::string resolve(const std::string& base_dir, const std::string& path) {
    if (!path.empty() && path.front() == '/') return path;
    return base_dir + "/" + path;
}

/// action file: {bialgebra, algebra, action: {"h.a": {label: scalar}}};
/// the 1_H rows may be omitted (implied identity)
inline ActionMap load_action(const std::string& path) {
    nlohmann::json j = read_json_file(path);
    if (!j.contains("bialgebra") || !j.contains("algebra") || !j.contains("action"))
        throw ParseError(path + ": action file needs bialgebra, algebra, action");
    std::string dir = directory_of(path);
    ActionMap act;
    act.H = std::make_shared<const BialgebraPresentation>(
        load_bialgebra(resolve(dir, j["bialgebra"].get<std::string>())));
    act.A = std::make_shared<const AlgebraPresentation>(
        load_algebra(resolve(dir, j["algebra"].get<std::string>())));
    act.rho.assign(act.H->dim(), std::vector<Vec>(act.A->dim(), act.A->zero_vec()));
    for (int a = 0; a < act.A->dim(); ++a) act.rho[act.H->unit][a][a] = Scalar::one(act.A->field);
    for (const auto& [key, val] : j["action"].items()) {
        auto dot = key.find('.');
        if (dot == std::string::npos) throw ParseError("action key '" + key + "' needs 'h.a'");
        int h = act.H->index_of(key.substr(0, dot));
        int a = act.A->index_of(key.substr(dot + 1));
        if (h < 0 || a < 0) throw MalformedPresentation("action key '" + key + "' names unknown labels");
        if (h == act.H->unit) act.rho[h][a] = act.A->zero_vec(); // explicit row overrides the default
        for (const auto& [lab, sc] : val.items()) {
            int o = act.A->index_of(lab);
            if (o < 0) throw MalformedPresentation("action label '" + lab + "' unknown");
            act.rho[h][a][o] = scalar_from_json(sc, act.A->field);
        }
    }
    return act;
}

/// morphism file: {source, target, degree?, map: {"src": {tgt: scalar}}}
inline MorphismMatrix load_morphism(const std::string& path) {
    nlohmann::json j = read_json_file(path);
    if (!j.contains("source") || !j.contains("target") || !j.contains("map"))
        throw ParseError(path + ": morphism file needs source, target, map");
    std::string dir = directory_of(path);
    MorphismMatrix f;
    f.source = std::make_shared<const BialgebraPresentation>(
        load_bialgebra(resolve(dir, j["source"].get<std::string>())));
    f.target = std::make_shared<const BialgebraPresentation>(
        load_bialgebra(resolve(dir, j["target"].get<std::string>())));
    f.degree = j.value("degree", 0);
    f.matrix.assign(f.target->dim(), Vec(f.source->dim(), Scalar::zero(f.source->field)));
    for (const auto& [src, val] : j["map"].items()) {
        int s = f.source->index_of(src);
        if (s < 0) throw MalformedPresentation("morphism key '" + src + "' unknown in source");
        for (const auto& [tgt, sc] : val.items()) {
            int t = f.target->index_of(tgt);
            if (t < 0) throw MalformedPresentation("morphism label '" + tgt + "' unknown in target");
            f.matrix[t][s] = scalar_from_json(sc, f.source->field);
        }
    }
    return f;
}

/// skew chain file: {algebra, chain: [{d: {...}, g: {...}, h: {...}}]}
inline std::pair<std::shared_ptr<const AlgebraPresentation>, SkewDerivationChain>
load_skew_chain(const std::string& path) {
    nlohmann::json j = read_json_file(path);
    if (!j.contains("algebra") || !j.contains("chain"))
        throw ParseError(path + ": skew chain file needs algebra and chain");
    auto A = std::make_shared<const AlgebraPresentation>(
        load_algebra(resolve(directory_of(path), j["algebra"].get<std::string>())));
    auto load_map = [&](const nlohmann::json& m, bool default_identity) {
        LinearMap lm;
        lm.col.assign(A->dim(), A->zero_vec());
        if (default_identity)
            for (int i = 0; i < A->dim(); ++i) lm.col[i][i] = Scalar::one(A->field);
        for (const auto& [key, val] : m.items()) {
            int a = A->index_of(key);
            if (a < 0) throw MalformedPresentation("chain map key '" + key + "' unknown");
            lm.col[a] = A->zero_vec();
            for (const auto& [lab, sc] : val.items()) {
                int o = A->index_of(lab);
                if (o < 0) throw MalformedPresentation("chain map label '" + lab + "' unknown");
                lm.col[a][o] = scalar_from_json(sc, A->field);
            }
        }
        return lm;
    };
    SkewDerivationChain ch;
    for (const auto& level : j["chain"]) {
        if (!level.contains("d")) throw ParseError("chain level needs 'd'");
        ch.ds.push_back(load_map(level["d"], false));
        ch.gs.push_back(load_map(level.contains("g") ? level["g"] : nlohmann::json::object(), true));
        ch.hs.push_back(load_map(level.contains("h") ? level["h"] : nlohmann::json::object(), true));
    }
    if (ch.ds.empty()) throw ParseError(path + ": empty chain");
    return {A, ch};
}

/// cochain file: {parent, p, q, coeffs: {"out<-a1,..,aq": scalar}}
inline ordered_json cochain_to_json(const Cochain& c) {
    ordered_json j;
    j["parent"] = c.parent->name;
    j["p"] = c.internal;
    j["q"] = c.arity;
    ordered_json coeffs = ordered_json::object();
    const auto& A = *c.parent;
    const int dim = A.dim();
    const long qpow = hdetail::pow_dim(dim, c.arity);
    std::vector<int> args;
    for (int o = 0; o < dim; ++o)
        for (long code = 0; code < qpow; ++code) {
            const Scalar& v = c.coeffs[o * qpow + code];
            if (v.is_zero()) continue;
            hdetail::decode(code, dim, c.arity, args);
            std::string key = A.basis[o] + "<-";
            for (std::size_t i = 0; i < args.size(); ++i) {
                if (i) key += ",";
                key += A.basis[args[i]];
            }
            coeffs[key] = v.str();
        }
    j["coeffs"] = coeffs;
    return j;
}

inline Cochain cochain_from_json(const nlohmann::json& j, std::shared_ptr<const AlgebraPresentation> A) {
    Cochain c = cochain_zero(A, j["p"].get<long>(), j["q"].get<int>());
    for (const auto& [key, sc] : j["coeffs"].items()) {
        auto arrow = key.find("<-");
        if (arrow == std::string::npos) throw ParseError("cochain key '" + key + "' needs 'out<-args'");
        int out = A->index_of(key.substr(0, arrow));
        if (out < 0) throw MalformedPresentation("cochain output '" + key + "' unknown");
        std::vector<int> args;
        std::string rest = key.substr(arrow + 2);
        std::string cur;
        for (char ch : rest) {
            if (ch == ',') {
                args.push_back(A->index_of(cur));
                cur.clear();
            } else {
                cur += ch;
            }
        }
        if (!cur.empty()) args.push_back(A->index_of(cur));
        if (static_cast<int>(args.size()) != c.arity) throw ParseError("cochain key arity mismatch: " + key);
        for (int a : args)
            if (a < 0) throw MalformedPresentation("cochain argument unknown in '" + key + "'");
        cochain_at(c, out, args) = scalar_from_json(sc, A->field);
    }
    return c;
}

/// `row col scalar` per line, rows ascending then columns
inline std::string matrix_triplets(const SparseMatrix& M) {
    std::string out;
    for (int r = 0; r < M.rows; ++r)
        for (const auto& [c, s] : M.row_data[r])
            out += std::to_string(r) + " " + std::to_string(c) + " " + s.str() + "\n";
    return out;
}

inline std::string betti_text(const BettiTable& t) {
    std::ostringstream os;
    os << "  p   q   dim   rank_in  rank_out  betti\n";
    for (const auto& row : t.rows) {
        os << std::setw(3) << row.p << " " << std::setw(3) << row.q << " " << std::setw(5) << row.dim
           << " " << std::setw(9) << row.rank_in << " " << std::setw(9) << row.rank_out << "  "
           << std::setw(5) << row.betti;
        if (row.lower_bound_only) os << " (lower bound: outgoing matrix above cap)";
        os << "\n";
    }
    return os.str();
}

inline ordered_json betti_json(const BettiTable& t) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : t.rows) {
        ordered_json r;
        r["p"] = row.p;
        r["q"] = row.q;
        r["dim"] = row.dim;
        r["rank_in"] = row.rank_in;
        r["rank_out"] = row.rank_out;
        r["betti"] = row.betti;
        if (row.lower_bound_only) r["lower_bound_only"] = true;
        rows.push_back(r);
    }
    return rows;
}

inline ordered_json report_json(const AxiomReport& rep) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : rep.checks) {
        ordered_json e;
        e["axiom"] = c.axiom;
        e["pass"] = c.pass;
        if (!c.pass) e["witness"] = c.witness;
        arr.push_back(e);
    }
    return arr;
}

/// --field override: reinterpret a presentation over another field
inline Scalar cast_scalar(const Scalar& s, const Field& to) {
    if (s.field() == to) return s;
    if (s.field().kind != FieldKind::Rational)
        throw UnsupportedParams("can only cast rational presentations to prime fields");
    return Scalar::of_mpq(to, s.rational());
}

template <class P>
void cast_presentation_core(P& pres, const Field& to) {
    for (auto& row : pres.mult)
        for (auto& v : row)
            for (auto& s : v) s = cast_scalar(s, to);
    for (auto& v : pres.differential)
        for (auto& s : v) s = cast_scalar(s, to);
    pres.field = to;
}

inline AlgebraPresentation field_cast(AlgebraPresentation P, const Field& to) {
    cast_presentation_core(P, to);
    return P;
}

inline BialgebraPresentation field_cast(BialgebraPresentation P, const Field& to) {
    cast_presentation_core(P, to);
    for (auto& t : P.comult)
        for (auto& v : t)
            for (auto& s : v) s = cast_scalar(s, to);
    for (auto& s : P.counit) s = cast_scalar(s, to);
    return P;
}

} // namespace io
} // namespace cacti
