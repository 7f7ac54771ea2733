#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <qorbit/patch.hpp>

namespace qorbit::cli {

enum class GeometryFormat { Csv, Obj, Json };
GeometryFormat parse_geometry_format(std::string_view text);
std::string_view extension(GeometryFormat format);

/// Optional per-point audit label (reclassified stratum) and parameter.
struct PointAudit {
  std::string label;
  double parameter = 0.0;
  bool has_parameter = false;
};

/// All numbers are written with "%.17g", so output bytes are a function of the input.
void write_csv(std::ostream& os, const GeometrySet& g, const std::vector<PointAudit>& audit = {});
/// v records then l (segments) or f (counterclockwise triangles), 1-based.
void write_obj(std::ostream& os, const GeometrySet& g);
void write_json(std::ostream& os, const GeometrySet& g, const std::vector<PointAudit>& audit = {});
void write_geometry(std::ostream& os, GeometryFormat format, const GeometrySet& g,
                    const std::vector<PointAudit>& audit = {});

}  // namespace qorbit::cli
