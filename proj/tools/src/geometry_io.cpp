#include "qorbit_cli/geometry_io.hpp"

#include "qorbit_cli/report.hpp"

namespace qorbit::cli {

namespace {

void metadata_comments(std::ostream& os, const GeometrySet& g, char mark) {
  os << mark << " kind=" << to_string(g.kind);
  if (g.stratum) os << " stratum=" << to_string(*g.stratum);
  for (const ParamRange& r : g.ranges) os << " range=" << format_double(r.lo) << ":" << format_double(r.hi);
  os << " requested=" << g.requested << " dropped=" << g.dropped << "\n";
}

}  // namespace

GeometryFormat parse_geometry_format(std::string_view text) {
  if (text == "csv") return GeometryFormat::Csv;
  if (text == "obj") return GeometryFormat::Obj;
  if (text == "json") return GeometryFormat::Json;
  throw ParseError("unknown format '" + std::string(text) + "' (expected csv, obj or json)");
}

std::string_view extension(GeometryFormat format) {
  switch (format) {
    case GeometryFormat::Csv:
      return "csv";
    case GeometryFormat::Obj:
      return "obj";
    case GeometryFormat::Json:
      return "json";
  }
  return "txt";
}

void write_csv(std::ostream& os, const GeometrySet& g, const std::vector<PointAudit>& audit) {
  metadata_comments(os, g, '#');
  os << (audit.empty() ? "x,y,z\n" : "x,y,z,audit\n");
  for (std::size_t i = 0; i < g.points.size(); ++i) {
    const auto& p = g.points[i];
    os << format_double(p.b3) << "," << format_double(p.b2) << "," << format_double(p.b1);
    if (!audit.empty()) os << "," << audit[i].label;
    os << "\n";
  }
}

void write_obj(std::ostream& os, const GeometrySet& g) {
  metadata_comments(os, g, '#');
  for (const auto& p : g.points) {
    os << "v " << format_double(p.b3) << " " << format_double(p.b2) << " " << format_double(p.b1) << "\n";
  }
  for (const auto& s : g.segments) os << "l " << s[0] + 1 << " " << s[1] + 1 << "\n";
  for (const auto& t : g.triangles) os << "f " << t[0] + 1 << " " << t[1] + 1 << " " << t[2] + 1 << "\n";
}

void write_json(std::ostream& os, const GeometrySet& g, const std::vector<PointAudit>& audit) {
  Json doc;
  doc["kind"] = std::string(to_string(g.kind));
  if (g.stratum) doc["stratum"] = std::string(to_string(*g.stratum));
  Json ranges = Json::array();
  for (const ParamRange& r : g.ranges) ranges.push_back(Json::array({r.lo, r.hi}));
  doc["ranges"] = ranges;
  doc["requested"] = g.requested;
  doc["dropped"] = g.dropped;
  Json points = Json::array();
  for (std::size_t i = 0; i < g.points.size(); ++i) {
    const auto& p = g.points[i];
    Json e = Json::array({p.b3, p.b2, p.b1});
    if (!audit.empty() || !g.forms.empty()) {
      Json rec;
      rec["xyz"] = e;
      if (i < g.forms.size()) {
        Json form = Json::array();
        for (double x : g.forms[i].c) form.push_back(x);
        rec["form"] = form;
      }
      if (i < audit.size()) {
        rec["audit"] = audit[i].label;
        if (audit[i].has_parameter) rec["parameter"] = audit[i].parameter;
      }
      e = rec;
    }
    points.push_back(e);
  }
  doc["points"] = points;
  Json segments = Json::array();
  for (const auto& s : g.segments) segments.push_back(Json::array({s[0], s[1]}));
  Json triangles = Json::array();
  for (const auto& t : g.triangles) triangles.push_back(Json::array({t[0], t[1], t[2]}));
  if (!g.segments.empty()) doc["segments"] = segments;
  if (!g.triangles.empty()) doc["triangles"] = triangles;
  os << doc.dump() << "\n";
}

void write_geometry(std::ostream& os, GeometryFormat format, const GeometrySet& g,
                    const std::vector<PointAudit>& audit) {
  switch (format) {
    case GeometryFormat::Csv:
      write_csv(os, g, audit);
      break;
    case GeometryFormat::Obj:
      write_obj(os, g);
      break;
    case GeometryFormat::Json:
      write_json(os, g, audit);
      break;
  }
}

}  // namespace qorbit::cli
