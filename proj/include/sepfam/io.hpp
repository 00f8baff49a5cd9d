#pragma once

#include <string>
#include <string_view>

#include "sepfam/geometry.hpp"
#include "sepfam/separators.hpp"

namespace sepfam {

// Point file: header line "sfp 1", then one "X Y" pair of canonical
// fractions per line. Parsing is strict (single spaces, no blank lines,
// no CR) and rejects duplicate points.
std::string serialize_points(const PointSet& pts);
PointSet parse_points(std::string_view text);
void save_points(const std::string& path, const PointSet& pts);
PointSet load_points(const std::string& path);

// Family file: header line "sff 1", then one separator per line,
//   H A B C            halfplane A*x + B*y <= C
//   D CX CY R2         disc with squared radius R2
//   P X1 Y1 X2 Y2 ...  convex polygon, counterclockwise
// followed by an optional trailing "# provenance: ..." line. Every
// separator is validated on read; serialize(parse(s)) == s byte for byte.
std::string serialize_family(const SeparatingFamily& fam);
SeparatingFamily parse_family(std::string_view text);
void save_family(const std::string& path, const SeparatingFamily& fam);
SeparatingFamily load_family(const std::string& path);

}  // namespace sepfam
