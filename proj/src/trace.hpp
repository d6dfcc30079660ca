#pragma once

#include <ostream>
#include <string>

#include "json.hpp"
#include "world.hpp"

namespace replan {

// One JSON-lines snapshot of the world and current path, written per tick.
nlohmann::json snapshot(const World& w, const Path& path);

// Renders every snapshot line of a trace file into frames/frame_NNNNN.svg
// under out_dir. Returns the number of frames written.
int render_frames(const std::string& trace_path, const std::string& out_dir);

void render_svg(const nlohmann::json& snap, std::ostream& out);

}  // namespace replan
