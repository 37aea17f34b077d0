#ifndef CONFSPACE_IO_HPP
#define CONFSPACE_IO_HPP

#include <fstream>
#include <string>

#include <json.hpp>

#include "pdalg.hpp"

namespace confspace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline Rational coeff_from_json(const nlohmann::json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<long>());
    throw InputError("coefficient must be a string \"p/q\" or an integer");
}

} // namespace detail

// Reads an algebra presentation from its JSON form:
//   basis:            [{label, degree}, ...]
//   formal_dimension: m
//   products:         [{left, right, result: [{label, coeff}, ...]}, ...]
//   differential:     [{left, result: [{label, coeff}, ...]}, ...]
//   orientation:      {label, value} or a list of such
// Omitted products and differentials are zero.
inline AlgebraPresentation presentation_from_json(const nlohmann::json& j) {
    AlgebraPresentation A;
    if (!j.contains("basis") || !j["basis"].is_array() || j["basis"].empty())
        throw InputError("missing or empty basis");
    for (const auto& b : j["basis"]) {
        A.labels.push_back(b.at("label").get<std::string>());
        const int deg = b.at("degree").get<int>();
        if (deg < 0) throw InputError("negative degree in basis");
        A.degrees.push_back(deg);
    }
    if (!j.contains("formal_dimension"))
        throw InputError("missing formal_dimension");
    A.formal_dimension = j["formal_dimension"].get<int>();

    const std::size_t n = A.size();
    A.products.assign(n, std::vector<AlgElem>(n, AlgElem(n)));
    A.differential.assign(n, AlgElem(n));
    A.orientation.assign(n, Rational(0));

    auto idx = [&](const std::string& label) {
        auto i = A.label_index(label);
        if (!i) throw InputError("unknown basis label: " + label);
        return *i;
    };

    if (j.contains("products"))
        for (const auto& p : j["products"]) {
            const std::size_t l = idx(p.at("left").get<std::string>());
            const std::size_t r = idx(p.at("right").get<std::string>());
            for (const auto& t : p.at("result"))
                A.products[l][r][idx(t.at("label").get<std::string>())] +=
                    detail::coeff_from_json(t.at("coeff"));
        }
    if (j.contains("differential"))
        for (const auto& p : j["differential"]) {
            const std::size_t l = idx(p.at("left").get<std::string>());
            for (const auto& t : p.at("result"))
                A.differential[l][idx(t.at("label").get<std::string>())] +=
                    detail::coeff_from_json(t.at("coeff"));
        }
    if (j.contains("orientation")) {
        auto read_one = [&](const nlohmann::json& o) {
            A.orientation[idx(o.at("label").get<std::string>())] =
                detail::coeff_from_json(o.at("value"));
        };
        if (j["orientation"].is_array())
            for (const auto& o : j["orientation"]) read_one(o);
        else
            read_one(j["orientation"]);
    }
    A.canonicalize();
    return A;
}

inline AlgebraPresentation load_presentation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InputError("bad JSON in " + path + ": " + e.what());
    }
    try {
        return presentation_from_json(j);
    } catch (const nlohmann::json::exception& e) {
        throw InputError("bad presentation in " + path + ": " + e.what());
    }
}

} // namespace confspace

#endif
