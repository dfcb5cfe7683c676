#include "disknorm/json_io.hpp"

#include "json.hpp"

namespace disknorm {

namespace {

using nlohmann::json;

json complex_to_json(Complex v) {
    return json::array({v.real(), v.imag()});
}

Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) {
        throw BadParameter("complex value must be a [re, im] pair");
    }
    return Complex(j[0].get<double>(), j[1].get<double>());
}

json series_node(const PowerSeries& s) {
    json coeffs = json::array();
    for (const Complex& c : s.coeffs()) {
        coeffs.push_back(complex_to_json(c));
    }
    return json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

PowerSeries series_from_node(const json& j) {
    if (!j.contains("coeffs") || !j["coeffs"].is_array()) {
        throw BadParameter("series JSON needs a coeffs array");
    }
    std::vector<Complex> coeffs;
    coeffs.reserve(j["coeffs"].size());
    for (const json& c : j["coeffs"]) {
        coeffs.push_back(complex_from_json(c));
    }
    PowerSeries s{std::move(coeffs)};
    if (j.contains("order") && j["order"].get<int>() != s.order()) {
        throw BadParameter("series JSON order does not match its coefficient count");
    }
    return s;
}

json blaschke_node(const BlaschkeDescriptor& d) {
    if (d.is_zero()) {
        return json{{"zero", true}, {"zeros", json::array()}, {"rotation", 0.0}, {"m", 0}};
    }
    json zeros = json::array();
    for (const Complex& a : d.zeros()) {
        zeros.push_back(complex_to_json(a));
    }
    return json{{"zeros", std::move(zeros)},
                {"rotation", d.rotation()},
                {"m", d.origin_multiplicity()}};
}

BlaschkeDescriptor blaschke_from_node(const json& j) {
    if (j.value("zero", false)) {
        return BlaschkeDescriptor::zero_function();
    }
    std::vector<Complex> zeros;
    if (j.contains("zeros")) {
        for (const json& a : j["zeros"]) {
            zeros.push_back(complex_from_json(a));
        }
    }
    return BlaschkeDescriptor(std::move(zeros), j.value("rotation", 0.0), j.value("m", 0));
}

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        throw BadParameter("malformed JSON input");
    }
    return j;
}

}  // namespace

std::string series_to_json(const PowerSeries& s, int indent) {
    return series_node(s).dump(indent) + "\n";
}

PowerSeries series_from_json(const std::string& text) {
    return series_from_node(parse(text));
}

std::string blaschke_to_json(const BlaschkeDescriptor& d, int indent) {
    return blaschke_node(d).dump(indent) + "\n";
}

BlaschkeDescriptor blaschke_from_json(const std::string& text) {
    return blaschke_from_node(parse(text));
}

std::string function_to_json(const FunctionHandle& f, int indent) {
    json j;
    switch (f.kind()) {
        case FunctionKind::OzakiMember:
            j["kind"] = "f0";
            j["lambda"] = f.lambda();
            j["phi"] = blaschke_node(f.schwarz_function());
            j["series"] = series_node(f.f_series());
            break;
        case FunctionKind::GBetaMember:
            j["kind"] = "g";
            j["beta"] = f.beta();
            j["phi"] = blaschke_node(f.schwarz_function());
            j["series"] = series_node(f.f_series());
            break;
        case FunctionKind::SeriesBacked:
            j["kind"] = "series";
            j["series"] = series_node(f.f_series());
            break;
        default:
            throw BadParameter("only member and series handles serialize to JSON");
    }
    return j.dump(indent) + "\n";
}

FunctionHandle function_from_json(const std::string& text, int order) {
    const json j = parse(text);
    const std::string kind = j.value("kind", "");
    auto need = [&](const char* key) -> const json& {
        if (!j.contains(key)) {
            throw BadParameter(std::string("function JSON misses field: ") + key);
        }
        return j[key];
    };
    if (kind == "series") {
        return series_function(series_from_node(need("series")));
    }
    int used_order = order;
    if (used_order <= 0) {
        used_order = j.contains("series") ? j["series"].value("order", kDefaultSeriesOrder)
                                          : kDefaultSeriesOrder;
    }
    if (kind == "f0") {
        return ozaki_member(blaschke_from_node(need("phi")), need("lambda").get<double>(),
                            used_order);
    }
    if (kind == "g") {
        return gbeta_member(blaschke_from_node(need("phi")), need("beta").get<double>(),
                            used_order);
    }
    throw BadParameter("unknown function kind in JSON: " + kind);
}

}  // namespace disknorm
