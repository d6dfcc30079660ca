#include "trace.hpp"

#include <filesystem>
#include <fstream>

namespace replan {

namespace {

using nlohmann::json;

json point_json(const Point2& p) { return json::array({p.x, p.y}); }

json rect_json(const Rect& r) {
    return json{{"center", point_json(r.center)}, {"half", json::array({r.half_w, r.half_h})}};
}

void svg_rect(std::ostream& out, const Rect& r, const std::string& fill, double opacity = 1.0) {
    out << "  <rect x=\"" << r.min_x() << "\" y=\"" << r.min_y() << "\" width=\"" << 2 * r.half_w
        << "\" height=\"" << 2 * r.half_h << "\" fill=\"" << fill << "\" fill-opacity=\""
        << opacity << "\"/>\n";
}

Rect rect_from_json(const json& j) {
    return Rect{{j["center"][0].get<double>(), j["center"][1].get<double>()},
                j["half"][0].get<double>(),
                j["half"][1].get<double>()};
}

}  // namespace

json snapshot(const World& w, const Path& path) {
    json movers = json::array();
    for (const auto& m : w.movers) movers.push_back(rect_json(m.shape));
    json hidden = json::array();
    for (const auto& h : w.hidden) {
        json jh = rect_json(h.shape);
        jh["revealed"] = h.revealed;
        hidden.push_back(jh);
    }
    json walls = json::array();
    for (const auto& wall : w.walls) walls.push_back(rect_json(wall));
    json jpath = json::array();
    for (const auto& p : path) jpath.push_back(point_json(p));
    return json{{"tick", w.clock},
                {"bounds", json::array({w.bounds.max_x(), w.bounds.max_y()})},
                {"robot", point_json(w.robot_pos)},
                {"robot_size", w.robot_size},
                {"goal", point_json(w.goal)},
                {"walls", walls},
                {"movers", movers},
                {"hidden", hidden},
                {"path", jpath}};
}

void render_svg(const json& snap, std::ostream& out) {
    double bw = snap["bounds"][0].get<double>();
    double bh = snap["bounds"][1].get<double>();
    double rs = snap.value("robot_size", 1.0);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << bw << " " << bh
        << "\" width=\"600\" height=\"" << 600.0 * bh / bw << "\">\n";
    out << "  <rect x=\"0\" y=\"0\" width=\"" << bw << "\" height=\"" << bh
        << "\" fill=\"white\" stroke=\"black\" stroke-width=\"0.3\"/>\n";
    for (const auto& wll : snap["walls"]) svg_rect(out, rect_from_json(wll), "#444444");
    for (const auto& m : snap["movers"]) svg_rect(out, rect_from_json(m), "#3060c0", 0.85);
    for (const auto& h : snap["hidden"]) {
        bool revealed = h.value("revealed", false);
        svg_rect(out, rect_from_json(h), revealed ? "#e0a020" : "#f0e0b0", revealed ? 0.9 : 0.35);
    }
    const auto& path = snap["path"];
    if (path.size() >= 2) {
        out << "  <polyline fill=\"none\" stroke=\"#20a040\" stroke-width=\"0.4\" points=\"";
        for (const auto& p : path) out << p[0].get<double>() << "," << p[1].get<double>() << " ";
        out << "\"/>\n";
    }
    double gx = snap["goal"][0].get<double>(), gy = snap["goal"][1].get<double>();
    out << "  <line x1=\"" << gx - rs << "\" y1=\"" << gy - rs << "\" x2=\"" << gx + rs
        << "\" y2=\"" << gy + rs << "\" stroke=\"#2040e0\" stroke-width=\"0.4\"/>\n";
    out << "  <line x1=\"" << gx - rs << "\" y1=\"" << gy + rs << "\" x2=\"" << gx + rs
        << "\" y2=\"" << gy - rs << "\" stroke=\"#2040e0\" stroke-width=\"0.4\"/>\n";
    double rx = snap["robot"][0].get<double>(), ry = snap["robot"][1].get<double>();
    svg_rect(out, Rect{{rx, ry}, rs, rs}, "#20a040");
    out << "</svg>\n";
}

int render_frames(const std::string& trace_path, const std::string& out_dir) {
    std::ifstream in(trace_path);
    if (!in) throw std::runtime_error("cannot open trace: " + trace_path);
    std::filesystem::create_directories(out_dir);
    std::string line;
    int frame = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json snap = json::parse(line);
        char name[32];
        std::snprintf(name, sizeof(name), "frame_%05d.svg", frame);
        std::ofstream out(std::filesystem::path(out_dir) / name);
        render_svg(snap, out);
        ++frame;
    }
    return frame;
}

}  // namespace replan
