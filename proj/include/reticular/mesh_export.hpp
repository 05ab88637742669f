#pragma once

#include <iosfwd>
#include <string>

#include "reticular/discriminant.hpp"

namespace reticular {

enum class MeshFormat { Csv, Obj, Ply };

MeshFormat parse_mesh_format(const std::string& s);
// Guess from the file extension, CSV when unknown.
MeshFormat mesh_format_for_path(const std::string& path);

// CSV: header of coordinate names then "stratum". OBJ and PLY are point
// clouds; both need a nonempty mesh and OBJ needs at most three coordinates.
void write_mesh(const DiscriminantMesh& mesh, MeshFormat format, std::ostream& out);
void export_mesh(const DiscriminantMesh& mesh, MeshFormat format, const std::string& path);

}  // namespace reticular
