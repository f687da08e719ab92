#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "katzcyc/diffmod.hpp"
#include "katzcyc/katz.hpp"
#include "katzcyc/parser.hpp"
#include "katzcyc/rings.hpp"
#include "katzcyc/ultranorm.hpp"

namespace katzcyc {

using Json = nlohmann::ordered_json;

/// Malformed input document (bad shape, missing fields, unknown kind).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using AnyRing = std::variant<RationalFunctionField, GaussPolynomialRing, FiniteFieldPolyRing>;
using AnyModule = std::variant<DifferentialModule<RationalFunctionField>, DifferentialModule<GaussPolynomialRing>,
                               DifferentialModule<FiniteFieldPolyRing>>;

namespace detail {
template <class T>
T field_or(const Json& j, const char* key, T fallback) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw InputError(std::string("ring descriptor: field '") + key + "' has the wrong type");
    }
}
}  // namespace detail

/// {"kind": "rational_function" | "gauss_padic" | "finite_field_poly",
///  "variable": "x", "p": 3, "radius_exp": 0, "q_exp": 1}
inline AnyRing make_ring(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
        throw InputError("ring descriptor must be an object with a string 'kind'");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "rational_function") return RationalFunctionField(detail::field_or<std::string>(j, "variable", "x"));
    if (kind == "gauss_padic") {
        if (!j.contains("p")) throw InputError("gauss_padic ring needs 'p'");
        return GaussPolynomialRing(detail::field_or<unsigned long>(j, "p", 0), detail::field_or<long>(j, "radius_exp", 0),
                                   detail::field_or<std::string>(j, "variable", "t"));
    }
    if (kind == "finite_field_poly") {
        if (!j.contains("p")) throw InputError("finite_field_poly ring needs 'p'");
        const long e = detail::field_or<long>(j, "q_exp", 1);
        if (e < 1) throw InputError("finite_field_poly: q_exp must be >= 1");
        return FiniteFieldPolyRing(detail::field_or<unsigned long>(j, "p", 0), static_cast<unsigned>(e),
                                   detail::field_or<std::string>(j, "variable", "x"));
    }
    throw InputError("unknown ring kind '" + kind + "'");
}

inline Json ring_to_json(const RationalFunctionField& r) {
    return Json{{"kind", r.kind_name()}, {"variable", r.variable_name()}};
}
inline Json ring_to_json(const GaussPolynomialRing& r) {
    return Json{{"kind", r.kind_name()}, {"variable", r.variable_name()}, {"p", r.prime()}, {"radius_exp", r.radius_exponent()}};
}
inline Json ring_to_json(const FiniteFieldPolyRing& r) {
    return Json{{"kind", r.kind_name()}, {"variable", r.variable_name()}, {"p", r.characteristic()}, {"q_exp", r.degree()}};
}

template <DifferentialRing R>
Json row_to_json(const R& ring, const Row<typename R::element_type>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(ring.to_string(x));
    return out;
}

template <DifferentialRing R>
Json matrix_to_json(const R& ring, const Matrix<typename R::element_type>& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(row_to_json(ring, m.row(i)));
    return out;
}

/// G1 entries parsed in the ring's element grammar.
template <DifferentialRing R>
DifferentialModule<R> parse_module(const Json& j, const R& ring) {
    if (!j.contains("n") || !j.at("n").is_number_integer()) throw InputError("module: missing integer 'n'");
    const long n = j.at("n").get<long>();
    if (n < 1) throw InputError("module: n must be >= 1");
    if (!j.contains("G1") || !j.at("G1").is_array()) throw InputError("module: missing 'G1' matrix");
    const Json& g = j.at("G1");
    if (g.size() != static_cast<std::size_t>(n)) throw InputError("module: G1 must have n rows");
    Matrix<typename R::element_type> g1(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (!g[i].is_array() || g[i].size() != static_cast<std::size_t>(n)) throw InputError("module: G1 must be n x n");
        for (std::size_t k = 0; k < g[i].size(); ++k) {
            const Json& cell = g[i][k];
            std::string text;
            if (cell.is_string())
                text = cell.get<std::string>();
            else if (cell.is_number_integer())
                text = std::to_string(cell.get<long long>());
            else
                throw InputError("module: G1 entries must be strings or integers");
            try {
                g1(i, k) = parse_element(text, ring);
            } catch (const ParseError& e) {
                throw InputError("G1[" + std::to_string(i) + "][" + std::to_string(k) + "]: " + e.what());
            }
        }
    }
    return DifferentialModule<R>(ring, std::move(g1));
}

/// {"ring": <descriptor>, "n": 3, "G1": [[...], ...]}
inline AnyModule load_module(const Json& j) {
    if (!j.is_object() || !j.contains("ring")) throw InputError("module description needs a 'ring' descriptor");
    return std::visit([&j](const auto& ring) -> AnyModule { return parse_module(j, ring); }, make_ring(j.at("ring")));
}

template <DifferentialRing R>
Json module_to_json(const DifferentialModule<R>& m) {
    return Json{{"ring", ring_to_json(m.ring())}, {"n", m.rank()}, {"G1", matrix_to_json(m.ring(), m.connection())}};
}

// ---------------------------------------------------------------------------

template <DifferentialRing R>
Json certificate_to_json(const CyclicityCertificate<typename R::element_type>& c, const R& ring) {
    Json out;
    out["criterion"] = to_string(c.criterion);
    if (c.criterion != Criterion::FieldDeterminant) {
        out["norm"] = to_string(c.norm);
        out["norms"] = Json{{"G1", c.g1.to_string(c.p)},
                            {"t", c.t.to_string(c.p)},
                            {"d", c.d.to_string(c.p)},
                            {"factorial", c.factorial.to_string(c.p)},
                            {"bound", c.bound.to_string(c.p)}};
    }
    if (c.criterion == Criterion::Lemma21) {
        Json per = Json::array();
        for (const auto& v : c.per_s) per.push_back(v.to_string(c.p));
        out["per_s"] = per;
    }
    out["verdict"] = c.certified ? "certified" : "not certified";
    if (c.witness)
        out["witness"] = row_to_json(ring, *c.witness);
    else
        out["witness"] = nullptr;
    out["diagnostics"] = c.diagnostics;
    return out;
}

// ---------------------------------------------------------------------------

/// Canonical string of a table entry, e.g. "-X^2".
inline std::string table_entry_string(const RationalPolynomial& p) { return format_polynomial(p, "X"); }

/// {"n": n, "H": [H_0, ..., H_{2n-2}]} with rows of entry strings.
inline Json tables_json(long n) {
    Json hs = Json::array();
    for (const auto& h : h_matrices(n)) {
        Json mat = Json::array();
        for (std::size_t i = 0; i < h.rows(); ++i) {
            Json row = Json::array();
            for (std::size_t j = 0; j < h.cols(); ++j) row.push_back(table_entry_string(h(i, j)));
            mat.push_back(row);
        }
        hs.push_back(mat);
    }
    return Json{{"n", n}, {"H", hs}};
}

/// α X^m / m! written as the integer multiple of \frac{X^m}{m!}.
inline std::string latex_entry(long s, long i, long j, long n) {
    const Integer a = alpha(s, i, j, n);
    if (sgn(a) == 0) return "0";
    const long m = s + j - i;
    std::string mono;
    if (m == 0)
        mono = "1";
    else if (m == 1)
        mono = "X";
    else
        mono = "\\frac{X^" + std::to_string(m) + "}{" + std::to_string(m) + "!}";
    if (m == 0) return a.get_str();
    if (a == 1) return mono;
    if (a == -1) return "-" + mono;
    return a.get_str() + mono;
}

inline std::string tables_latex(long n) {
    std::ostringstream os;
    os << "H(X) = ";
    for (long s = 0; s <= 2 * n - 2; ++s) {
        if (s > 0) os << " + ";
        os << "\\begin{pmatrix} ";
        for (long i = 0; i < n; ++i) {
            if (i > 0) os << " \\\\ ";
            for (long j = 0; j < n; ++j) {
                if (j > 0) os << " & ";
                os << latex_entry(s, i, j, n);
            }
        }
        os << " \\end{pmatrix}";
        if (s > 0) os << " G_{" << s << "}";
    }
    os << "\n";
    return os.str();
}

/// Inverse of tables_json: the matrices H_0.. parsed back over Q[X].
inline std::vector<Matrix<RationalPolynomial>> parse_tables_json(const Json& j) {
    const RationalPolynomialRing qx("X");
    std::vector<Matrix<RationalPolynomial>> out;
    for (const auto& mat : j.at("H")) {
        std::vector<Row<RationalPolynomial>> rows;
        for (const auto& row : mat) {
            Row<RationalPolynomial> r;
            for (const auto& cell : row) r.push_back(parse_element(cell.get<std::string>(), qx));
            rows.push_back(std::move(r));
        }
        out.push_back(Matrix<RationalPolynomial>::from_rows(rows));
    }
    return out;
}

}  // namespace katzcyc
