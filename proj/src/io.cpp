#include "netgeom/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace netgeom::io {

double round12(double v) {
    if (!std::isfinite(v)) return v;
    if (v == 0.0) return 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

namespace {

json vector_json(const Eigen::VectorXd& v) {
    json a = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(round12(v(i)));
    return a;
}

json selection_list(const Selection& s) {
    json a = json::array();
    for (auto l : s.sorted()) a.push_back(label_to_json(l));
    return a;
}

json parse_document(std::string_view document, const char* what) {
    try {
        return json::parse(document);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::MalformedJson, std::string("malformed ") + what + " JSON: " + e.what());
    } catch (const json::out_of_range& e) {
        throw Error(ErrorKind::NonFinite, std::string("number out of range in ") + what + ": " + e.what());
    }
}

double number(const json& v, const std::string& where) {
    if (!v.is_number()) throw Error(ErrorKind::SchemaViolation, where + " must be a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw Error(ErrorKind::NonFinite, where + " is not finite");
    return d;
}

}  // namespace

json label_to_json(RegionLabel label) {
    json a = json::array();
    for (auto i : label.indices()) a.push_back(i + 1);
    return a;
}

json to_json(const Arrangement& A) {
    json planes = json::array();
    for (const auto& h : A.hyperplanes())
        planes.push_back({{"normal", vector_json(h.normal())}, {"offset", round12(h.offset())}});
    return {{"dimension", A.dimension()}, {"hyperplanes", planes}};
}

json to_json(const Region& r) { return {{"label", label_to_json(r.label)}, {"witness", vector_json(r.witness)}}; }

json to_json(const std::vector<Region>& regions) {
    json a = json::array();
    for (const auto& r : regions) a.push_back(to_json(r));
    return a;
}

json to_json(const Selection& s) { return {{"universe", s.universe_size}, {"selected", selection_list(s)}}; }

json to_json(const CompiledNetwork& C) {
    json sels = json::array();
    for (const auto& s : C.selections) sels.push_back(to_json(s));
    json layers = json::array();
    for (const auto& layer : C.layer_selections) {
        json nodes = json::array();
        for (const auto& s : layer) nodes.push_back(to_json(s));
        layers.push_back(nodes);
    }
    return {{"arrangement", to_json(C.arrangement)},
            {"regions", to_json(C.regions)},
            {"selections", sels},
            {"layer_selections", layers}};
}

json to_json(const VerifyReport& report) {
    json mism = json::array();
    for (const auto& m : report.mismatches) {
        mism.push_back({{"point", vector_json(m.point)},
                        {"expected", json(std::vector<int>(m.expected.begin(), m.expected.end()))},
                        {"got", json(std::vector<int>(m.got.begin(), m.got.end()))}});
    }
    return {{"samples", report.samples}, {"discarded", report.discarded}, {"mismatches", mism}};
}

json to_json(const StepNetwork& N) {
    json layers = json::array();
    for (const auto& L : N.layers()) {
        json rows = json::array();
        for (Eigen::Index r = 0; r < L.weights.rows(); ++r) rows.push_back(vector_json(L.weights.row(r).transpose()));
        layers.push_back({{"weights", rows}, {"offsets", vector_json(L.offsets)}});
    }
    return {{"inputs", N.input_dim()}, {"layers", layers}};
}

json to_json(const IntersectionPoset& P, const std::vector<CoverPair>& covers) {
    json elems = json::array();
    for (auto e : P.elements) elems.push_back(label_to_json(e));
    json edges = json::array();
    for (const auto& c : covers) edges.push_back({{"lower", label_to_json(c.lower)}, {"upper", label_to_json(c.upper)}});
    return {{"universe", P.universe}, {"elements", elems}, {"covers", edges}};
}

Arrangement parse_arrangement(std::string_view document) {
    const json doc = parse_document(document, "arrangement");
    if (!doc.is_object()) throw Error(ErrorKind::SchemaViolation, "arrangement document must be an object");
    if (!doc.contains("dimension") || !doc["dimension"].is_number_integer() || doc["dimension"].get<long long>() < 1)
        throw Error(ErrorKind::SchemaViolation, "\"dimension\" must be a positive integer");
    const auto n = static_cast<Eigen::Index>(doc["dimension"].get<long long>());
    if (!doc.contains("hyperplanes") || !doc["hyperplanes"].is_array())
        throw Error(ErrorKind::SchemaViolation, "\"hyperplanes\" must be an array");

    std::vector<Hyperplane> planes;
    const json& hs = doc["hyperplanes"];
    for (std::size_t i = 0; i < hs.size(); ++i) {
        const std::string where = "hyperplane " + std::to_string(i + 1);
        const json& h = hs[i];
        if (!h.is_object() || !h.contains("normal") || !h["normal"].is_array() || !h.contains("offset"))
            throw Error(ErrorKind::SchemaViolation, where + " needs \"normal\" and \"offset\"", i);
        if (static_cast<Eigen::Index>(h["normal"].size()) != n)
            throw Error(ErrorKind::DimensionMismatch, where + " normal has the wrong length", i);
        Eigen::VectorXd v(n);
        for (Eigen::Index c = 0; c < n; ++c) v(c) = number(h["normal"][static_cast<std::size_t>(c)], where + " normal");
        try {
            planes.emplace_back(std::move(v), number(h["offset"], where + " offset"));
        } catch (const Error& e) {
            throw Error(e.kind(), where + ": " + e.what(), i);
        }
    }
    return Arrangement(n, std::move(planes));
}

Selection parse_selection(std::string_view document) {
    const json doc = parse_document(document, "selection");
    if (!doc.is_object() || !doc.contains("universe") || !doc["universe"].is_number_integer() ||
        !doc.contains("selected") || !doc["selected"].is_array())
        throw Error(ErrorKind::SchemaViolation, "selection needs integer \"universe\" and array \"selected\"");
    const long long k = doc["universe"].get<long long>();
    if (k < 0 || k > static_cast<long long>(kMaxHyperplanes))
        throw Error(ErrorKind::SchemaViolation, "selection universe out of range");
    Selection s{static_cast<std::size_t>(k), {}};
    for (const json& label : doc["selected"]) {
        if (!label.is_array()) throw Error(ErrorKind::SchemaViolation, "selected labels must be index arrays");
        RegionLabel l;
        for (const json& idx : label) {
            if (!idx.is_number_integer() || idx.get<long long>() < 1 || idx.get<long long>() > k)
                throw Error(ErrorKind::SchemaViolation, "label index out of range 1.." + std::to_string(k));
            l = l.with(static_cast<std::size_t>(idx.get<long long>() - 1));
        }
        s.selected.insert(l);
    }
    return s;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace netgeom::io
