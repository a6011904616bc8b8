#include "okflow/curve_json.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "okflow/util.hpp"

namespace okflow {

Curve parse_curve_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw validation_error(std::string("curve JSON parse error: ") + e.what());
    }
    // accept wrapped documents (e.g. flow snapshots) that carry the curve as a member
    if (j.is_object() && !j.contains("ambient") && j.contains("curve") && j["curve"].is_object())
        j = j["curve"];
    Curve c;
    std::string amb = j.value("ambient", "");
    if (amb == "r2") c.ambient = Ambient::plane;
    else if (amb == "t2") c.ambient = Ambient::torus;
    else throw validation_error("curve JSON: ambient must be \"r2\" or \"t2\"");
    if (!j.contains("components") || !j["components"].is_array() || j["components"].empty())
        throw validation_error("curve JSON: missing components array");
    for (const auto& jc : j["components"]) {
        Component comp;
        std::string ori = jc.value("orientation", "ccw");
        if (ori == "ccw") comp.orient = Orient::ccw;
        else if (ori == "cw") comp.orient = Orient::cw;
        else throw validation_error("curve JSON: orientation must be \"ccw\" or \"cw\"");
        if (!jc.contains("vertices") || !jc["vertices"].is_array())
            throw validation_error("curve JSON: component without vertices");
        for (const auto& jv : jc["vertices"]) {
            if (!jv.is_array() || jv.size() != 2)
                throw validation_error("curve JSON: vertex must be [x,y]");
            comp.v.push_back({jv[0].get<double>(), jv[1].get<double>()});
        }
        c.comp.push_back(std::move(comp));
    }
    validate(c);
    return c;
}

std::string dump_curve_json(const Curve& c) {
    std::ostringstream os;
    os << "{\"ambient\":\"" << (c.ambient == Ambient::plane ? "r2" : "t2")
       << "\",\"components\":[";
    for (std::size_t k = 0; k < c.comp.size(); ++k) {
        if (k) os << ",";
        os << "{\"orientation\":\"" << (c.comp[k].orient == Orient::ccw ? "ccw" : "cw")
           << "\",\"vertices\":[";
        for (int i = 0; i < c.comp[k].n(); ++i) {
            if (i) os << ",";
            os << "[" << fmt17(c.comp[k].v[i].x) << "," << fmt17(c.comp[k].v[i].y) << "]";
        }
        os << "]}";
    }
    os << "]}";
    return os.str();
}

Curve load_curve_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open curve file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_curve_json(ss.str());
}

void save_curve_json(const Curve& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw validation_error("cannot write curve file: " + path);
    out << dump_curve_json(c) << "\n";
}

std::string curve_fingerprint(const Curve& c) {
    return hex64(fnv1a64(dump_curve_json(c)));
}

} // namespace okflow
