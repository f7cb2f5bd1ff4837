#include "vnw/json_io.hpp"

#include <nlohmann/json.hpp>
#include <cstdio>
#include <sstream>

namespace vnw {

Json toJson(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex complexFromJson(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("expected [re, im] pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

Json toJson(const CVector& v) {
    Json a = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(toJson(v[i]));
    return a;
}

CVector cvectorFromJson(const Json& j) {
    CVector v(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = complexFromJson(j[i]);
    return v;
}

Json toJson(const CMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(toJson(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

CMatrix cmatrixFromJson(const Json& j) {
    const auto rows = j.size();
    const auto cols = rows == 0 ? 0 : j[0].size();
    CMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (j[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c)
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                complexFromJson(j[r][c]);
    }
    return m;
}

Json toJson(const PolySpec& p) {
    return Json{{"n", p.n},
                {"a0", toJson(p.a0)},
                {"linear", toJson(p.linear)},
                {"quad", toJson(p.quad.mat())}};
}

PolySpec polyFromJson(const Json& j) {
    const int n = j.at("n").get<int>();
    const Complex a0 = j.contains("a0") ? complexFromJson(j["a0"]) : Complex(0.0);
    CVector linear =
        j.contains("linear") ? cvectorFromJson(j["linear"]) : CVector(CVector::Zero(n));
    return PolySpec(n, a0, std::move(linear),
                    SymCoeffMatrix::symmetrized(cmatrixFromJson(j.at("quad"))));
}

Json toJson(const SupResult& r) {
    Json angles = Json::array();
    for (Eigen::Index i = 0; i < r.argmax.angles.size(); ++i)
        angles.push_back(r.argmax.angles[i]);
    return Json{{"value", r.value},
                {"argmax_angles", std::move(angles)},
                {"certificate_residual", r.certificate_residual},
                {"upper_bound", r.upper_bound},
                {"grid_resolution", r.grid_resolution},
                {"refinements", r.refinements},
                {"degenerate", r.degenerate}};
}

Json toJson(const SignWitness& w) {
    Json signs = Json::array();
    for (Eigen::Index i = 0; i < w.signs.size(); ++i) signs.push_back(w.signs[i]);
    return Json{{"signs", std::move(signs)}, {"value", w.value}};
}

Json toJson(const GramWitness& w) {
    Json vecs = Json::array();
    for (const auto& x : w.vectors) {
        Json v = Json::array();
        for (Eigen::Index i = 0; i < x.size(); ++i) v.push_back(x[i]);
        vecs.push_back(std::move(v));
    }
    return Json{{"rank", w.rank}, {"vectors", std::move(vecs)}, {"value", w.value}};
}

Json toJson(const VaropoulosPair& p) {
    return Json{{"x", toJson(p.x)}, {"y", toJson(p.y)}};
}

Json toJson(const std::vector<VaropoulosPair>& tuple) {
    Json a = Json::array();
    for (const auto& p : tuple) a.push_back(toJson(p));
    return a;
}

std::vector<VaropoulosPair> tupleFromJson(const Json& j) {
    std::vector<VaropoulosPair> pairs;
    pairs.reserve(j.size());
    for (const auto& e : j)
        pairs.emplace_back(cvectorFromJson(e.at("x")), cvectorFromJson(e.at("y")));
    return pairs;
}

Json toJson(const RatioReport& r) {
    Json gram = Json::array();
    for (const auto& x : r.gram_vectors) {
        Json v = Json::array();
        for (Eigen::Index i = 0; i < x.size(); ++i) v.push_back(x[i]);
        gram.push_back(std::move(v));
    }
    return Json{{"poly", toJson(r.poly)},
                {"sup", toJson(r.sup)},
                {"operator_value", r.operator_value},
                {"ratio", r.ratio},
                {"tuple", toJson(r.tuple)},
                {"gram_vectors", std::move(gram)},
                {"method", r.method}};
}

Json toJson(const FJFamily& f) {
    Json vecs = Json::array();
    for (int r = 0; r < f.l; ++r) {
        Json row = Json::array();
        for (int c = 0; c < f.k; ++c) row.push_back(f.vectors(r, c));
        vecs.push_back(std::move(row));
    }
    Json gram = Json::array();
    for (int r = 0; r < f.l; ++r) {
        Json row = Json::array();
        for (int c = 0; c < f.l; ++c) row.push_back(f.matrix(r, c));
        gram.push_back(std::move(row));
    }
    return Json{{"k", f.k}, {"l", f.l}, {"vectors", std::move(vecs)},
                {"matrix", std::move(gram)}};
}

Json toJson(const InfToOneResult& r) {
    return Json{{"value", r.value}, {"v", toJson(r.v)}, {"w", toJson(r.w)}};
}

std::string formatNumber(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

std::string matrixToCsv(const RMatrix& m) {
    std::string out;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (c) out += ',';
            out += formatNumber(m(r, c));
        }
        out += '\n';
    }
    return out;
}

RMatrix matrixFromCsv(const std::string& text) {
    std::vector<std::vector<double>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("empty CSV matrix");
    const std::size_t cols = rows.front().size();
    RMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("ragged CSV rows");
        for (std::size_t c = 0; c < cols; ++c)
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
    }
    return m;
}

}  // namespace vnw
