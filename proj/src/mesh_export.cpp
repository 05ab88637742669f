#include "reticular/mesh_export.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <ostream>
#include <stdexcept>

namespace reticular {

namespace {

// Shortest round-trip representation, independent of the stream locale.
std::string num(double v) {
  if (v == 0) v = 0;  // drop negative zero
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void require_nonempty(const DiscriminantMesh& mesh, const char* fmt) {
  if (mesh.points.empty()) throw DomainError(std::string(fmt) + " export needs a nonempty mesh");
}

void write_csv(const DiscriminantMesh& mesh, std::ostream& out) {
  for (const auto& c : mesh.coord_names) out << c << ',';
  out << "stratum\n";
  for (const auto& p : mesh.points) {
    for (double v : p.coords) out << num(v) << ',';
    out << p.stratum << '\n';
  }
}

void write_obj(const DiscriminantMesh& mesh, std::ostream& out) {
  require_nonempty(mesh, "OBJ");
  if (mesh.coord_names.size() > 3) throw DomainError("OBJ export supports at most 3 coordinates");
  out << "# " << mesh.kind << " point cloud, " << mesh.points.size() << " points\n";
  out << "# coordinates";
  for (const auto& c : mesh.coord_names) out << ' ' << c;
  out << '\n';
  // Vertices grouped by stratum in the mesh's stratum order.
  std::size_t next = 1;
  for (const auto& s : mesh.strata) {
    if (mesh.count(s) == 0) continue;
    out << "g " << s << '\n';
    const std::size_t first = next;
    for (const auto& p : mesh.points) {
      if (p.stratum != s) continue;
      out << 'v';
      for (std::size_t c = 0; c < 3; ++c) out << ' ' << (c < p.coords.size() ? num(p.coords[c]) : "0");
      out << '\n';
      ++next;
    }
    for (std::size_t i = first; i < next; i += 16) {
      out << 'p';
      for (std::size_t j = i; j < std::min(next, i + 16); ++j) out << ' ' << j;
      out << '\n';
    }
  }
}

void write_ply(const DiscriminantMesh& mesh, std::ostream& out) {
  require_nonempty(mesh, "PLY");
  out << "ply\nformat ascii 1.0\n";
  out << "comment " << mesh.kind << '\n';
  for (std::size_t i = 0; i < mesh.strata.size(); ++i) out << "comment stratum " << i << ' ' << mesh.strata[i] << '\n';
  out << "element vertex " << mesh.points.size() << '\n';
  static const char* axes[] = {"x", "y", "z"};
  const std::size_t d = mesh.coord_names.size();
  for (std::size_t c = 0; c < d; ++c) {
    out << "property double " << (d <= 3 ? axes[c] : mesh.coord_names[c].c_str()) << '\n';
  }
  out << "property int stratum\nend_header\n";
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < mesh.strata.size(); ++i) index.emplace(mesh.strata[i], i);
  for (const auto& p : mesh.points) {
    for (double v : p.coords) out << num(v) << ' ';
    out << index.at(p.stratum) << '\n';
  }
}

}  // namespace

MeshFormat parse_mesh_format(const std::string& s) {
  if (s == "csv") return MeshFormat::Csv;
  if (s == "obj") return MeshFormat::Obj;
  if (s == "ply") return MeshFormat::Ply;
  throw std::invalid_argument("unknown mesh format '" + s + "' (csv, obj, ply)");
}

MeshFormat mesh_format_for_path(const std::string& path) {
  const auto dot = path.rfind('.');
  if (dot == std::string::npos) return MeshFormat::Csv;
  const std::string ext = path.substr(dot + 1);
  if (ext == "obj") return MeshFormat::Obj;
  if (ext == "ply") return MeshFormat::Ply;
  return MeshFormat::Csv;
}

void write_mesh(const DiscriminantMesh& mesh, MeshFormat format, std::ostream& out) {
  switch (format) {
    case MeshFormat::Csv: write_csv(mesh, out); break;
    case MeshFormat::Obj: write_obj(mesh, out); break;
    case MeshFormat::Ply: write_ply(mesh, out); break;
  }
}

void export_mesh(const DiscriminantMesh& mesh, MeshFormat format, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_mesh(mesh, format, f);
  f.flush();
  if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace reticular
