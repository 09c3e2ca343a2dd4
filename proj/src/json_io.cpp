#include "medgeo/json_io.hpp"

#include <fstream>
#include <sstream>

namespace medgeo {

json rat_to_json(const Rat& r) {
    return r.str();
}

Rat rat_from_json(const json& j) {
    if (j.is_string()) return Rat::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rat(long(j.get<std::int64_t>()));
    if (j.is_number_unsigned()) return Rat(long(j.get<std::uint64_t>()));
    if (j.is_number_float())
        throw invalid_input("floating-point numbers are not accepted; use exact \"p/q\" strings");
    throw invalid_input("expected a rational (string \"p/q\" or integer)");
}

static std::vector<Rat> rat_matrix_from_json(const json& j, int& n, const char* what) {
    if (!j.is_array()) throw invalid_input(std::string(what) + " must be an array of rows");
    n = int(j.size());
    std::vector<Rat> d;
    d.reserve(std::size_t(n) * n);
    for (const json& row : j) {
        if (!row.is_array() || int(row.size()) != n)
            throw invalid_input(std::string(what) + " must be a square matrix");
        for (const json& v : row) d.push_back(rat_from_json(v));
    }
    return d;
}

json metric_to_json(const FiniteMetric& m) {
    json rows = json::array();
    for (int i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.size(); ++j) row.push_back(rat_to_json(m.dist(i, j)));
        rows.push_back(std::move(row));
    }
    json out;
    out["dist"] = std::move(rows);
    if (!m.labels().empty()) out["labels"] = m.labels();
    if (m.allow_pseudo()) out["allow_pseudo"] = true;
    return out;
}

FiniteMetric metric_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dist")) throw invalid_input("metric JSON needs a \"dist\" key");
    int n = 0;
    std::vector<Rat> d = rat_matrix_from_json(j.at("dist"), n, "\"dist\"");
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        for (const json& l : j.at("labels")) labels.push_back(l.get<std::string>());
    }
    bool pseudo = j.value("allow_pseudo", false);
    return FiniteMetric(n, std::move(d), std::move(labels), pseudo);
}

json points_to_json(const L1Points& p) {
    json pts = json::array();
    for (const auto& pt : p.points) {
        json row = json::array();
        for (const Rat& c : pt) row.push_back(rat_to_json(c));
        pts.push_back(std::move(row));
    }
    return json{{"dim", p.dim}, {"points", std::move(pts)}};
}

L1Points points_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("points"))
        throw invalid_input("points JSON needs \"dim\" and \"points\"");
    L1Points out;
    out.dim = j.at("dim").get<int>();
    for (const json& row : j.at("points")) {
        std::vector<Rat> pt;
        for (const json& v : row) pt.push_back(rat_from_json(v));
        out.points.push_back(std::move(pt));
    }
    out.validate();
    return out;
}

json walls_to_json(const WallSpace& ws) {
    json walls = json::array();
    for (const Wall& w : ws.walls)
        walls.push_back(json{{"h", w.h.indices()}, {"weight", rat_to_json(w.weight)}});
    return json{{"n", ws.n}, {"walls", std::move(walls)}};
}

WallSpace walls_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("walls"))
        throw invalid_input("wall space JSON needs \"n\" and \"walls\"");
    WallSpace ws;
    ws.n = j.at("n").get<int>();
    if (ws.n < 0) throw invalid_input("negative point count");
    for (const json& wj : j.at("walls")) {
        PointSet h(ws.n);
        for (const json& idx : wj.at("h")) {
            int i = idx.get<int>();
            if (i < 0 || i >= ws.n) throw invalid_input("halfspace index out of range");
            h.set(i);
        }
        ws.walls.push_back(Wall{std::move(h), rat_from_json(wj.at("weight"))});
    }
    ws.validate();
    return ws;
}

json kernel_to_json(const Kernel& k) {
    json rows = json::array();
    for (int i = 0; i < k.n; ++i) {
        json row = json::array();
        for (int j = 0; j < k.n; ++j) row.push_back(rat_to_json(k.at(i, j)));
        rows.push_back(std::move(row));
    }
    json out;
    out["psi"] = std::move(rows);
    if (k.approx) out["approx"] = true;
    return out;
}

Kernel kernel_from_json(const json& j) {
    if (!j.is_object() || !j.contains("psi")) throw invalid_input("kernel JSON needs a \"psi\" key");
    Kernel k;
    k.psi = rat_matrix_from_json(j.at("psi"), k.n, "\"psi\"");
    k.approx = j.value("approx", false);
    k.validate();
    return k;
}

json cut_decomposition_to_json(const CutDecomposition& d) {
    json cuts = json::array(), weights = json::array();
    for (const PointSet& s : d.cuts) cuts.push_back(s.indices());
    for (const Rat& w : d.weights) weights.push_back(rat_to_json(w));
    return json{{"cuts", std::move(cuts)}, {"weights", std::move(weights)}};
}

CutDecomposition cut_decomposition_from_json(const json& j, int n) {
    CutDecomposition d;
    for (const json& c : j.at("cuts")) {
        PointSet s(n);
        for (const json& idx : c) s.set(idx.get<int>());
        d.cuts.push_back(std::move(s));
    }
    for (const json& w : j.at("weights")) d.weights.push_back(rat_from_json(w));
    if (d.cuts.size() != d.weights.size()) throw invalid_input("cuts/weights length mismatch");
    return d;
}

json farkas_to_json(const FarkasCertificate& c) {
    json y = json::array();
    for (const Rat& v : c.y) y.push_back(rat_to_json(v));
    return json{{"y", std::move(y)}};
}

json subdivision_to_json(const SubdivisionResult& r) {
    return json{{"sequence", r.sequence}, {"partition", r.blocks}};
}

json medianized_to_json(const MedianizedSpace& ms) {
    json sections = json::array();
    for (const AdmissibleSection& s : ms.sections) {
        json vec = json::array();
        for (int w = 0; w < s.wall_count(); ++w) vec.push_back(s.choice.test(w) ? 1 : 0);
        sections.push_back(std::move(vec));
    }
    json adjacency = json::array();
    for (const CubeEdge& e : cube_adjacency(ms))
        adjacency.push_back(json{{"u", e.u},
                                 {"v", e.v},
                                 {"wall", e.wall},
                                 {"weight", rat_to_json(e.weight)}});
    return json{{"sections", std::move(sections)},
                {"metric", metric_to_json(ms.metric)},
                {"iota", ms.iota},
                {"adjacency", std::move(adjacency)}};
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw invalid_input("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str());
}

} // namespace medgeo
