#include "kktco/io.hpp"

#include <json.hpp>

namespace kktco {

namespace {

using Json = nlohmann::ordered_json;

std::string emit(const Json& obj)
{
    std::string out = "{\n";
    std::size_t i = 0;
    for (const auto& [key, value] : obj.items()) {
        out += "  " + Json(key).dump() + ": " + value.dump();
        out += ++i < obj.size() ? ",\n" : "\n";
    }
    return out + "}\n";
}

Json scalars(const Vector& v)
{
    Json a = Json::array();
    for (const auto& s : v) a.push_back(s.to_string());
    return a;
}

Json matrix_json(const Matrix& m)
{
    Json a = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(scalars(m.row(r)));
    return a;
}

Json header(const std::string& kind, Field f, const std::vector<std::string>& names)
{
    Json j;
    j["kind"] = kind;
    j["field"] = f.to_string();
    j["dim"] = names.size();
    j["basis_names"] = names;
    return j;
}

Json product_json(const FiniteAlgebra& alg)
{
    const std::size_t n = alg.dim();
    Json p = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < n; ++j) {
            Json cell = Json::array();
            for (std::size_t k = 0; k < n; ++k) cell.push_back(alg.product()(i, j, k).to_string());
            row.push_back(std::move(cell));
        }
        p.push_back(std::move(row));
    }
    return p;
}

Json delta_json(const FiniteCoalgebra& c)
{
    const std::size_t n = c.dim();
    Json d = Json::array();
    for (std::size_t a = 0; a < n; ++a) {
        Json terms = Json::array();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!c.delta()(a, i, j).is_zero()) terms.push_back(Json::array({i, j, c.delta()(a, i, j).to_string()}));
        d.push_back(std::move(terms));
    }
    return d;
}

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

const Json& member(const Json& obj, const char* key)
{
    auto it = obj.find(key);
    if (it == obj.end()) fail(std::string("missing field: ") + key);
    return *it;
}

std::size_t count(const Json& v, const char* what)
{
    if (!v.is_number_unsigned()) fail(std::string(what) + " must be a non-negative integer");
    return v.get<std::size_t>();
}

const Json& array_of(const Json& v, std::size_t len, const std::string& what)
{
    if (!v.is_array() || v.size() != len) fail(what + " must be an array of length " + std::to_string(len));
    return v;
}

Scalar scalar(const Json& v, Field f)
{
    if (!v.is_string()) fail("scalars must be strings");
    return Scalar::parse(f, v.get<std::string>());
}

void check_keys(const Json& obj, std::initializer_list<const char*> required, bool metadata_allowed)
{
    for (const auto& [key, value] : obj.items()) {
        bool known = metadata_allowed && key == "metadata";
        for (const char* r : required) known = known || key == r;
        if (!known) fail("unexpected field: " + key);
    }
    for (const char* r : required) member(obj, r);
    if (metadata_allowed && obj.contains("metadata") && !obj["metadata"].is_object()) fail("metadata must be an object");
}

struct Header {
    Field field;
    std::size_t dim;
    std::vector<std::string> names;
};

Header read_header(const Json& obj)
{
    Header h;
    const Json& f = member(obj, "field");
    if (!f.is_string()) fail("field must be a string");
    h.field = Field::parse(f.get<std::string>());
    h.dim = count(member(obj, "dim"), "dim");
    for (const auto& name : array_of(member(obj, "basis_names"), h.dim, "basis_names")) {
        if (!name.is_string()) fail("basis names must be strings");
        h.names.push_back(name.get<std::string>());
    }
    return h;
}

FiniteAlgebra algebra_from(const Json& obj)
{
    check_keys(obj, {"kind", "field", "dim", "basis_names", "product"}, true);
    Header h = read_header(obj);
    Tensor3 t(h.field, h.dim);
    const Json& p = array_of(member(obj, "product"), h.dim, "product");
    for (std::size_t i = 0; i < h.dim; ++i) {
        const Json& row = array_of(p[i], h.dim, "product row");
        for (std::size_t j = 0; j < h.dim; ++j) {
            const Json& cell = array_of(row[j], h.dim, "product entry");
            for (std::size_t k = 0; k < h.dim; ++k) t(i, j, k) = scalar(cell[k], h.field);
        }
    }
    return FiniteAlgebra(h.field, std::move(h.names), std::move(t));
}

FiniteCoalgebra coalgebra_from(const Json& obj)
{
    check_keys(obj, {"kind", "field", "dim", "basis_names", "delta"}, true);
    Header h = read_header(obj);
    Tensor3 t(h.field, h.dim);
    const Json& d = array_of(member(obj, "delta"), h.dim, "delta");
    for (std::size_t a = 0; a < h.dim; ++a) {
        if (!d[a].is_array()) fail("delta entries must be arrays of terms");
        std::size_t last = 0;
        bool first = true;
        for (const auto& term : d[a]) {
            if (!term.is_array() || term.size() != 3) fail("delta terms must be [i, j, scalar]");
            const std::size_t i = count(term[0], "delta index");
            const std::size_t j = count(term[1], "delta index");
            if (i >= h.dim || j >= h.dim) fail("delta index out of range");
            const std::size_t key = i * h.dim + j;
            if (!first && key <= last) fail("delta terms must be sorted by (i, j) without repeats");
            first = false;
            last = key;
            Scalar s = scalar(term[2], h.field);
            if (s.is_zero()) fail("delta terms must be nonzero");
            t(a, i, j) = std::move(s);
        }
    }
    return FiniteCoalgebra(h.field, std::move(h.names), std::move(t));
}

Json parse_json(const std::string& text)
{
    Json obj;
    try {
        obj = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(std::string("malformed JSON: ") + e.what());
    }
    if (!obj.is_object()) fail("top level must be an object");
    return obj;
}

std::string kind_of(const Json& obj)
{
    const Json& k = member(obj, "kind");
    if (!k.is_string()) fail("kind must be a string");
    return k.get<std::string>();
}

template <class F>
auto guarded(F&& body)
{
    try {
        return body();
    } catch (const ParseError&) {
        throw;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed structure: ") + e.what());
    } catch (const DimensionMismatch& e) {
        throw ParseError(e.what());
    }
}

}  // namespace

std::string write_algebra(const FiniteAlgebra& alg)
{
    Json j = header("algebra", alg.field(), alg.basis_names());
    j["product"] = product_json(alg);
    return emit(j);
}

std::string write_coalgebra(const FiniteCoalgebra& c)
{
    Json j = header("coalgebra", c.field(), c.basis_names());
    j["delta"] = delta_json(c);
    return emit(j);
}

std::string write_kkt(const KKTAlgebra& k)
{
    Json j = header("algebra", k.lie().field(), k.lie().basis_names());
    j["product"] = product_json(k.lie());
    Json meta;
    meta["source"] = k.source().basis_names();
    const std::pair<const char*, KKTPart> parts[] = {
        {"A", KKTPart::A}, {"A_prime", KKTPart::JPrime}, {"IntDer", KKTPart::IntDer}, {"A_bar", KKTPart::ABar}};
    Json dims;
    Json emb;
    for (const auto& [name, part] : parts) {
        dims[name] = k.part_dim(part);
        emb[name] = matrix_json(k.part_embedding(part));
    }
    meta["part_dims"] = dims;
    meta["embeddings"] = emb;
    meta["epsilon"] = matrix_json(epsilon_matrix(k));
    Json gens = Json::array();
    for (const auto& d : k.intder().basis_operators()) {
        Json terms = Json::array();
        for (const auto& t : k.intder().decompose(d))
            terms.push_back(Json::array({t.coefficient.to_string(), k.intder().generators()[t.generator].description}));
        gens.push_back(std::move(terms));
    }
    meta["intder_generators"] = gens;
    j["metadata"] = meta;
    return emit(j);
}

std::string write_lspace(const LSpace& ls)
{
    const auto& c = ls.coalgebra();
    Json j = header("lie-coalgebra", c.field(), c.basis_names());
    j["delta"] = delta_json(c);
    Json meta;
    Json dims;
    dims["A"] = ls.part_dim(LPart::A);
    dims["A_prime"] = ls.part_dim(LPart::APrime);
    dims["mixed"] = ls.part_dim(LPart::Mixed);
    dims["A_bar"] = ls.part_dim(LPart::ABar);
    meta["part_dims"] = dims;
    meta["gram"] = matrix_json(ls.gram());
    Json gens = Json::array();
    for (std::size_t k = 0; k < ls.mixed().dim(); ++k) {
        auto [i, jj] = ls.mixed().basis_pair(k);
        gens.push_back(Json::array({i, jj}));
    }
    meta["mixed_generators"] = gens;
    j["metadata"] = meta;
    return emit(j);
}

std::string write_subspace(const Subspace& s)
{
    Json j;
    j["kind"] = "subspace";
    j["field"] = s.field().to_string();
    j["ambient_dim"] = s.ambient_dim();
    j["basis"] = matrix_json(s.basis());
    return emit(j);
}

Structure read_structure(const std::string& text)
{
    return guarded([&]() -> Structure {
        const Json obj = parse_json(text);
        const std::string kind = kind_of(obj);
        if (kind == "algebra") return algebra_from(obj);
        if (kind == "coalgebra" || kind == "lie-coalgebra") return coalgebra_from(obj);
        fail("unknown kind: " + kind);
    });
}

FiniteAlgebra read_algebra(const std::string& text)
{
    auto s = read_structure(text);
    if (!std::holds_alternative<FiniteAlgebra>(s)) throw ParseError("expected an algebra file");
    return std::get<FiniteAlgebra>(std::move(s));
}

FiniteCoalgebra read_coalgebra(const std::string& text)
{
    auto s = read_structure(text);
    if (!std::holds_alternative<FiniteCoalgebra>(s)) throw ParseError("expected a coalgebra file");
    return std::get<FiniteCoalgebra>(std::move(s));
}

Subspace read_subspace(const std::string& text)
{
    return guarded([&] {
        const Json obj = parse_json(text);
        if (kind_of(obj) != "subspace") fail("expected a subspace file");
        check_keys(obj, {"kind", "field", "ambient_dim", "basis"}, false);
        const Json& f = member(obj, "field");
        if (!f.is_string()) fail("field must be a string");
        const Field field = Field::parse(f.get<std::string>());
        const std::size_t m = count(member(obj, "ambient_dim"), "ambient_dim");
        const Subspace s = parse_subspace_rows(member(obj, "basis").dump(), field, m);
        if (s.dim() != member(obj, "basis").size()) fail("subspace basis is not canonical");
        for (std::size_t r = 0; r < s.dim(); ++r)
            for (std::size_t c = 0; c < m; ++c)
                if (s.basis()(r, c).to_string() != obj["basis"][r][c].get<std::string>())
                    fail("subspace basis is not canonical");
        return s;
    });
}

Subspace parse_subspace_rows(const std::string& text, Field f, std::size_t ambient_dim)
{
    return guarded([&] {
        Json rows;
        try {
            rows = Json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            fail(std::string("malformed subspace rows: ") + e.what());
        }
        if (!rows.is_array()) fail("subspace rows must be a list of lists");
        std::vector<Vector> vs;
        for (const auto& row : rows) {
            const Json& r = array_of(row, ambient_dim, "subspace row");
            Vector v;
            for (const auto& x : r) v.push_back(scalar(x, f));
            vs.push_back(std::move(v));
        }
        return Subspace::span(f, ambient_dim, vs);
    });
}

Subspace parse_subspace_rows(const std::string& text, Field f)
{
    const std::size_t m = guarded([&] {
        Json rows;
        try {
            rows = Json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            fail(std::string("malformed subspace rows: ") + e.what());
        }
        if (!rows.is_array() || rows.empty() || !rows[0].is_array()) fail("subspace rows must be a non-empty list of lists");
        return rows[0].size();
    });
    return parse_subspace_rows(text, f, m);
}

}  // namespace kktco
