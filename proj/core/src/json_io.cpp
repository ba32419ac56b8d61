#include "hkq/json_io.hpp"

#include <fstream>

namespace hkq {

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error("JSON parse error in '" + path + "': " + e.what());
    }
}

Arrangement arrangement_from_json(const Json& j) {
    Arrangement arr;
    try {
        arr.d = j.at("d").get<int>();
        for (const auto& row : j.at("normals")) {
            std::vector<long long> a;
            for (const auto& x : row) a.push_back(x.get<long long>());
            arr.normals.push_back(std::move(a));
        }
        for (const auto& r : j.at("offsets")) arr.offsets.push_back(parse_rational(r.get<std::string>()));
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("bad arrangement JSON: ") + e.what());
    }
    return arr;
}

Json arrangement_to_json(const Arrangement& arr) {
    Json j;
    j["d"] = arr.d;
    j["normals"] = Json::array();
    for (const auto& a : arr.normals) j["normals"].push_back(a);
    j["offsets"] = Json::array();
    for (const auto& r : arr.offsets) j["offsets"].push_back(rational_to_string(r));
    return j;
}

Polyhedron polyhedron_from_json(const Json& j) {
    Polyhedron P;
    try {
        P.d = j.at("d").get<int>();
        for (const auto& c : j.at("constraints")) {
            Constraint con;
            for (const auto& x : c.at("normal")) con.normal.push_back(x.get<long long>());
            con.offset = parse_rational(c.at("offset").get<std::string>());
            std::string s = c.at("sense").get<std::string>();
            if (s == ">=") con.sense = Sense::Ge;
            else if (s == "<=") con.sense = Sense::Le;
            else if (s == "=") con.sense = Sense::Eq;
            else throw input_error("bad sense '" + s + "'");
            P.constraints.push_back(std::move(con));
        }
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("bad polyhedron JSON: ") + e.what());
    }
    return P;
}

Json polyhedron_to_json(const Polyhedron& P) {
    Json j;
    j["d"] = P.d;
    j["constraints"] = Json::array();
    for (const auto& c : P.constraints) {
        Json cj;
        cj["normal"] = c.normal;
        cj["offset"] = rational_to_string(c.offset);
        cj["sense"] = c.sense == Sense::Ge ? ">=" : (c.sense == Sense::Le ? "<=" : "=");
        j["constraints"].push_back(cj);
    }
    return j;
}

PolygonSpec polygon_from_json(const Json& j) {
    PolygonSpec spec;
    try {
        for (const auto& a : j.at("alphas")) spec.alpha.push_back(parse_rational(a.get<std::string>()));
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("bad polygon JSON: ") + e.what());
    }
    return spec;
}

Json polygon_to_json(const PolygonSpec& spec) {
    Json j;
    j["alphas"] = Json::array();
    for (const auto& a : spec.alpha) j["alphas"].push_back(rational_to_string(a));
    return j;
}

namespace {

template <class K>
Json ideal_to_json_impl(const Ideal<K>& I) {
    Json j;
    j["field"] = field_traits<K>::name();
    j["variables"] = I.ring->vars;
    j["generators"] = Json::array();
    for (const auto& g : I.gens) j["generators"].push_back(poly_to_string(g));
    return j;
}

template <class K>
Ideal<K> ideal_from_json_impl(const Json& j) {
    try {
        std::vector<std::string> vars;
        for (const auto& v : j.at("variables")) vars.push_back(v.get<std::string>());
        RingPtr ring = make_ring(vars, field_traits<K>::tag);
        std::vector<Poly<K>> gens;
        for (const auto& g : j.at("generators"))
            gens.push_back(poly_parse<K>(ring, g.get<std::string>()));
        return Ideal<K>(ring, gens);
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("bad ideal JSON: ") + e.what());
    }
}

}  // namespace

Json ideal_to_json(const Ideal<Rational>& I) { return ideal_to_json_impl(I); }
Json ideal_to_json(const Ideal<GF2>& I) { return ideal_to_json_impl(I); }
Ideal<Rational> ideal_from_json_q(const Json& j) { return ideal_from_json_impl<Rational>(j); }
Ideal<GF2> ideal_from_json_f2(const Json& j) { return ideal_from_json_impl<GF2>(j); }

Json presented_ring_to_json(const PresentedRing<Rational>& R) {
    Json j = ideal_to_json(R.relations);
    j["cohomological_degrees"] = Json::array();
    for (std::size_t i = 0; i < R.ring->nvars(); ++i) j["cohomological_degrees"].push_back(2);
    return j;
}

Json presented_ring_to_json(const PresentedRing<GF2>& R) {
    Json j = ideal_to_json(R.relations);
    j["cohomological_degrees"] = Json::array();
    for (std::size_t i = 0; i < R.ring->nvars(); ++i) j["cohomological_degrees"].push_back(2);
    return j;
}

}  // namespace hkq
