#pragma once

#include <iosfwd>
#include <string>

#include "cech/diagram.hpp"
#include "cech/geometry.hpp"
#include "cech/trace.hpp"

namespace cech {

struct Dendrogram;  // clustering.hpp

// Point clouds: one point per line, comma-separated coordinates, '#' comments.
PointCloud read_point_cloud(std::istream& in);
PointCloud load_point_cloud(const std::string& path);
void write_point_cloud(std::ostream& out, const PointCloud& cloud);
void save_point_cloud(const std::string& path, const PointCloud& cloud);

// Diagrams: lines "dim,birth,death" with "inf" for essential classes,
// sorted by (dim, birth, death).
PersistenceDiagram read_diagram(std::istream& in);
PersistenceDiagram load_diagram(const std::string& path);
void write_diagram(std::ostream& out, const PersistenceDiagram& d);
void save_diagram(const std::string& path, const PersistenceDiagram& d);

// Dendrograms: lines "scale,i,j", scales ascending.
Dendrogram read_dendrogram(std::istream& in);
Dendrogram load_dendrogram(const std::string& path);
void write_dendrogram(std::ostream& out, const Dendrogram& d);
void save_dendrogram(const std::string& path, const Dendrogram& d);

// Traces: lines "scale,simplex_count,tag" with tag insert|collapse.
RunTrace read_trace(std::istream& in);
RunTrace load_trace(const std::string& path);
void write_trace(std::ostream& out, const RunTrace& t);
void save_trace(const std::string& path, const RunTrace& t);

}  // namespace cech
