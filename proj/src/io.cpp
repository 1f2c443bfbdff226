#include "heisrep/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace heisrep {

namespace {

using json = nlohmann::ordered_json;

json field_to_json(const FieldSpec& f) {
    json j;
    if (f.is_prime()) {
        j["kind"] = "prime";
        j["p"] = f.p();
    } else {
        j["kind"] = "rational";
    }
    return j;
}

FieldSpec field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind")) throw IoError("field: missing kind");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "rational") return FieldSpec::rational();
    if (kind == "prime") {
        if (!j.contains("p") || !j.at("p").is_number_integer())
            throw IoError("field: prime kind requires integer p");
        try {
            return FieldSpec::prime(j.at("p").get<std::int64_t>());
        } catch (const FieldError& e) {
            throw IoError(e.what());
        }
    }
    throw IoError("field: unknown kind '" + kind + "'");
}

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw IoError("not valid JSON");
    return j;
}

void require_version(const json& j) {
    if (!j.is_object() || !j.contains("format_version") || j.at("format_version") != 1)
        throw IoError("missing or unsupported format_version");
}

}  // namespace

std::string write_rep(const CoefficientFamily& f) {
    json j;
    j["format_version"] = 1;
    j["group"] = f.group() == GroupKind::Ga ? "Ga" : "H1";
    j["field"] = field_to_json(f.field());
    j["dimension"] = f.dim();
    json coeffs = json::array();
    for (const auto& [e, m] : f.coeffs()) {
        json entry;
        entry["exponent"] = e;
        json triples = json::array();
        for (const auto& [i, jcol, v] : m.nonzero_entries())
            triples.push_back(json::array({i, jcol, v.str()}));
        entry["entries"] = std::move(triples);
        coeffs.push_back(std::move(entry));
    }
    j["coefficients"] = std::move(coeffs);
    return j.dump(2) + "\n";
}

CoefficientFamily read_rep(const std::string& text) {
    json j = parse(text);
    require_version(j);
    for (const char* key : {"group", "field", "dimension", "coefficients"})
        if (!j.contains(key)) throw IoError(std::string("rep file: missing field '") + key + "'");
    std::string group_name = j.at("group").get<std::string>();
    GroupKind group;
    if (group_name == "Ga")
        group = GroupKind::Ga;
    else if (group_name == "H1")
        group = GroupKind::H1;
    else
        throw IoError("rep file: unknown group '" + group_name + "'");
    FieldSpec field = field_from_json(j.at("field"));
    if (!j.at("dimension").is_number_integer() || j.at("dimension").get<int>() <= 0)
        throw IoError("rep file: dimension must be a positive integer");
    int dim = j.at("dimension").get<int>();
    CoefficientFamily f(group, field, dim);
    if (!j.at("coefficients").is_array()) throw IoError("rep file: coefficients must be an array");
    for (const auto& entry : j.at("coefficients")) {
        if (!entry.is_object() || !entry.contains("exponent") || !entry.contains("entries"))
            throw IoError("rep file: malformed coefficient entry");
        ExpVec e;
        for (const auto& v : entry.at("exponent")) {
            if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
                throw IoError("rep file: exponents must be non-negative integers");
            e.push_back(v.get<std::int64_t>());
        }
        if (static_cast<int>(e.size()) != arity_of(group))
            throw IoError("rep file: exponent arity does not match group");
        if (f.coeffs().count(e)) throw IoError("rep file: duplicate exponent " + exp_to_string(e));
        ExactMatrix m(dim, field);
        for (const auto& t : entry.at("entries")) {
            if (!t.is_array() || t.size() != 3)
                throw IoError("rep file: entries must be [row, col, value] triples");
            int row = t.at(0).get<int>();
            int col = t.at(1).get<int>();
            if (row < 1 || row > dim || col < 1 || col > dim)
                throw IoError("rep file: entry index out of range");
            Scalar v = Scalar::parse(field, t.at(2).get<std::string>());
            if (v.is_zero()) throw IoError("rep file: explicit zero entry");
            m.set(row, col, std::move(v));
        }
        if (m.is_zero()) throw IoError("rep file: coefficient with no entries");
        f.set_coeff(e, std::move(m));
    }
    return f;
}

namespace {

json matrix_to_dense_json(const ExactMatrix& m) {
    json values = json::array();
    for (int i = 1; i <= m.dim(); ++i)
        for (int j = 1; j <= m.dim(); ++j) values.push_back(m.at(i, j).str());
    return values;
}

ExactMatrix matrix_from_dense_json(const json& values, int dim, FieldSpec field) {
    if (!values.is_array() || static_cast<int>(values.size()) != dim * dim)
        throw IoError("lie file: matrix must have dimension^2 values");
    ExactMatrix m(dim, field);
    int k = 0;
    for (int i = 1; i <= dim; ++i)
        for (int j = 1; j <= dim; ++j)
            m.set(i, j, Scalar::parse(field, values.at(k++).get<std::string>()));
    return m;
}

}  // namespace

std::string write_lie(const LieLayerData& data) {
    json j;
    j["format_version"] = 1;
    j["p"] = data.p;
    j["dimension"] = data.dim;
    json layers = json::array();
    for (const auto& t : data.triples) {
        json layer;
        layer["X"] = matrix_to_dense_json(t.X);
        layer["Y"] = matrix_to_dense_json(t.Y);
        layer["Z"] = matrix_to_dense_json(t.Z);
        layers.push_back(std::move(layer));
    }
    j["layers"] = std::move(layers);
    return j.dump(2) + "\n";
}

LieLayerData read_lie(const std::string& text) {
    json j = parse(text);
    require_version(j);
    for (const char* key : {"p", "dimension", "layers"})
        if (!j.contains(key)) throw IoError(std::string("lie file: missing field '") + key + "'");
    LieLayerData data;
    if (!j.at("p").is_number_integer()) throw IoError("lie file: p must be an integer");
    data.p = j.at("p").get<std::int64_t>();
    if (!is_prime(data.p)) throw IoError("lie file: p is not prime");
    if (!j.at("dimension").is_number_integer() || j.at("dimension").get<int>() <= 0)
        throw IoError("lie file: dimension must be a positive integer");
    data.dim = j.at("dimension").get<int>();
    FieldSpec field = FieldSpec::prime(data.p);
    if (!j.at("layers").is_array()) throw IoError("lie file: layers must be an array");
    for (const auto& layer : j.at("layers")) {
        for (const char* key : {"X", "Y", "Z"})
            if (!layer.contains(key))
                throw IoError(std::string("lie file: layer missing matrix '") + key + "'");
        data.triples.push_back({matrix_from_dense_json(layer.at("X"), data.dim, field),
                                matrix_from_dense_json(layer.at("Y"), data.dim, field),
                                matrix_from_dense_json(layer.at("Z"), data.dim, field)});
    }
    return data;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write file: " + path);
    out << content;
}

}  // namespace heisrep
