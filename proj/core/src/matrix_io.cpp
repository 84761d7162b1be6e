#include "thetacount/matrix_io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace theta {

namespace {

using nlohmann::json;

RMatrix parse_array(const json& arr, int g, const char* key) {
    RMatrix m(g, g);
    if (!arr.is_array()) throw std::invalid_argument(std::string("period matrix: '") + key + "' must be an array");
    if (arr.size() == static_cast<std::size_t>(g) && g > 1 && arr.front().is_array()) {
        for (int i = 0; i < g; ++i) {
            const auto& row = arr.at(i);
            if (!row.is_array() || row.size() != static_cast<std::size_t>(g))
                throw std::invalid_argument(std::string("period matrix: bad row in '") + key + "'");
            for (int j = 0; j < g; ++j) m(i, j) = row.at(j).get<double>();
        }
        return m;
    }
    if (arr.size() != static_cast<std::size_t>(g) * g)
        throw std::invalid_argument(std::string("period matrix: '") + key + "' must hold g*g entries");
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) m(i, j) = arr.at(i * g + j).get<double>();
    return m;
}

RiemannMatrix from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("g") || !doc.contains("re") || !doc.contains("im"))
        throw std::invalid_argument("period matrix: expected object with keys g, re, im");
    const int g = doc.at("g").get<int>();
    if (g < 1 || g > 32) throw std::invalid_argument("period matrix: g out of range");
    const RMatrix re = parse_array(doc.at("re"), g, "re");
    const RMatrix im = parse_array(doc.at("im"), g, "im");
    CMatrix tau(g, g);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) tau(i, j) = Complex(re(i, j), im(i, j));
    return RiemannMatrix(tau);
}

json to_json(const RiemannMatrix& tau) {
    const int g = tau.g();
    json re = json::array(), im = json::array();
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) {
            re.push_back(tau.tau()(i, j).real());
            im.push_back(tau.tau()(i, j).imag());
        }
    return json{{"g", g}, {"re", re}, {"im", im}};
}

}  // namespace

RiemannMatrix load_period_matrix(std::istream& in) {
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("period matrix: parse error: ") + e.what());
    }
    return from_json(doc);
}

RiemannMatrix load_period_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("period matrix: cannot open " + path);
    return load_period_matrix(in);
}

void save_period_matrix(std::ostream& out, const RiemannMatrix& tau) {
    out << to_json(tau).dump(2) << "\n";
}

void save_period_matrix_file(const std::string& path, const RiemannMatrix& tau) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("period matrix: cannot open " + path + " for writing");
    save_period_matrix(out, tau);
}

std::string period_matrix_json(const RiemannMatrix& tau) { return to_json(tau).dump(); }

}  // namespace theta
