#pragma once
// Curve (de)serialization:
//   {"ambient":"r2"|"t2","components":[{"orientation":"ccw"|"cw",
//    "vertices":[[x,y],...]},...]}
// Writing goes through the deterministic 17-significant-digit formatter so
// identical inputs produce byte-identical files.

#include <string>

#include "okflow/geometry.hpp"

namespace okflow {

Curve parse_curve_json(const std::string& text);
std::string dump_curve_json(const Curve& c);

Curve load_curve_json(const std::string& path);
void save_curve_json(const Curve& c, const std::string& path);

// FNV-1a hash of the serialized curve; used as the shape fingerprint in
// reports.
std::string curve_fingerprint(const Curve& c);

} // namespace okflow
