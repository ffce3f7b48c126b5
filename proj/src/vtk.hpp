#pragma once

#include <string>

#include "field.hpp"
#include "mesh.hpp"

namespace sllg {

/// Legacy ASCII VTK (version 3.0) of the triangulation alone.
std::string vtk_mesh_string(const Mesh& mesh, const std::string& title);

/// Legacy ASCII VTK of a nodal vector field plus its modulus as point data.
/// Output is byte-deterministic (17 significant digits).
std::string vtk_field_string(const NodalField& field, const std::string& title,
                             const std::string& array_name);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace sllg
