#include "vtk.hpp"

#include <fstream>

#include "csvfmt.hpp"
#include "errors.hpp"

namespace sllg {

namespace {

std::string vtk_header(const Mesh& mesh, const std::string& title) {
    std::string s;
    s += "# vtk DataFile Version 3.0\n";
    s += title + "\n";
    s += "ASCII\n";
    s += "DATASET UNSTRUCTURED_GRID\n";
    s += "POINTS " + std::to_string(mesh.node_count()) + " double\n";
    for (const Vec2& p : mesh.nodes)
        s += fmt_double(p.x) + " " + fmt_double(p.y) + " 0\n";
    const int ne = mesh.element_count();
    s += "CELLS " + std::to_string(ne) + " " + std::to_string(4 * ne) + "\n";
    for (const auto& t : mesh.elements)
        s += "3 " + std::to_string(t[0]) + " " + std::to_string(t[1]) + " " +
             std::to_string(t[2]) + "\n";
    s += "CELL_TYPES " + std::to_string(ne) + "\n";
    for (int e = 0; e < ne; ++e) s += "5\n";
    return s;
}

}  // namespace

std::string vtk_mesh_string(const Mesh& mesh, const std::string& title) {
    return vtk_header(mesh, title);
}

std::string vtk_field_string(const NodalField& field, const std::string& title,
                             const std::string& array_name) {
    const Mesh& mesh = field.mesh();
    std::string s = vtk_header(mesh, title);
    s += "POINT_DATA " + std::to_string(mesh.node_count()) + "\n";
    s += "VECTORS " + array_name + " double\n";
    for (int n = 0; n < field.size(); ++n)
        s += fmt_double(field[n].x) + " " + fmt_double(field[n].y) + " " +
             fmt_double(field[n].z) + "\n";
    s += "SCALARS modulus double 1\n";
    s += "LOOKUP_TABLE default\n";
    for (int n = 0; n < field.size(); ++n) s += fmt_double(norm(field[n])) + "\n";
    return s;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace sllg
