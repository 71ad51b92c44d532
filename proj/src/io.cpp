#include "cech/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "cech/clustering.hpp"

namespace cech {

namespace {

std::string fmt_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

double parse_real(const std::string& s, const char* what) {
  if (s == "inf" || s == "Inf" || s == "INF") return kInfDeath;
  std::size_t pos = 0;
  double v;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw std::runtime_error(std::string("malformed ") + what + ": '" + s + "'");
  }
  if (pos != s.size())
    throw std::runtime_error(std::string("malformed ") + what + ": '" + s + "'");
  return v;
}

long parse_int(const std::string& s, const char* what) {
  std::size_t pos = 0;
  long v;
  try {
    v = std::stol(s, &pos);
  } catch (const std::exception&) {
    throw std::runtime_error(std::string("malformed ") + what + ": '" + s + "'");
  }
  if (pos != s.size())
    throw std::runtime_error(std::string("malformed ") + what + ": '" + s + "'");
  return v;
}

bool next_data_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    return true;
  }
  return false;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  return in;
}

}  // namespace

PointCloud read_point_cloud(std::istream& in) {
  std::vector<Point> pts;
  std::string line;
  while (next_data_line(in, line)) {
    const auto fields = split_csv(line);
    Point p(static_cast<Eigen::Index>(fields.size()));
    for (std::size_t k = 0; k < fields.size(); ++k)
      p(static_cast<Eigen::Index>(k)) = parse_real(fields[k], "coordinate");
    pts.push_back(std::move(p));
  }
  return PointCloud::from_points(pts);
}

PointCloud load_point_cloud(const std::string& path) {
  auto in = open_in(path);
  return read_point_cloud(in);
}

void write_point_cloud(std::ostream& out, const PointCloud& cloud) {
  for (int i = 0; i < cloud.size(); ++i) {
    for (int j = 0; j < cloud.dim(); ++j) {
      if (j) out << ',';
      out << fmt_real(cloud.coords()(i, j));
    }
    out << '\n';
  }
}

void save_point_cloud(const std::string& path, const PointCloud& cloud) {
  auto out = open_out(path);
  write_point_cloud(out, cloud);
}

PersistenceDiagram read_diagram(std::istream& in) {
  PersistenceDiagram d;
  std::string line;
  while (next_data_line(in, line)) {
    const auto fields = split_csv(line);
    if (fields.size() != 3) throw std::runtime_error("malformed diagram line: " + line);
    Interval iv;
    iv.dim = static_cast<int>(parse_int(fields[0], "dimension"));
    iv.birth = parse_real(fields[1], "birth");
    iv.death = parse_real(fields[2], "death");
    d.intervals.push_back(iv);
  }
  return d;
}

PersistenceDiagram load_diagram(const std::string& path) {
  auto in = open_in(path);
  return read_diagram(in);
}

void write_diagram(std::ostream& out, const PersistenceDiagram& d) {
  PersistenceDiagram s = d;
  s.sort();
  for (const Interval& iv : s.intervals) {
    out << iv.dim << ',' << fmt_real(iv.birth) << ',';
    if (iv.essential())
      out << "inf";
    else
      out << fmt_real(iv.death);
    out << '\n';
  }
}

void save_diagram(const std::string& path, const PersistenceDiagram& d) {
  auto out = open_out(path);
  write_diagram(out, d);
}

Dendrogram read_dendrogram(std::istream& in) {
  Dendrogram d;
  std::string line;
  int max_index = -1;
  while (next_data_line(in, line)) {
    const auto fields = split_csv(line);
    if (fields.size() != 3) throw std::runtime_error("malformed dendrogram line: " + line);
    LinkageEvent e;
    e.scale = parse_real(fields[0], "scale");
    e.i = static_cast<int>(parse_int(fields[1], "cluster index"));
    e.j = static_cast<int>(parse_int(fields[2], "cluster index"));
    if (e.i >= e.j) throw std::runtime_error("dendrogram event must have i < j");
    if (!d.events.empty() && e.scale < d.events.back().scale)
      throw std::runtime_error("dendrogram scales must be nondecreasing");
    max_index = std::max(max_index, e.j);
    d.events.push_back(e);
  }
  d.n = static_cast<int>(d.events.size()) + 1;
  if (max_index >= d.n) throw std::runtime_error("dendrogram cluster index out of range");
  return d;
}

Dendrogram load_dendrogram(const std::string& path) {
  auto in = open_in(path);
  return read_dendrogram(in);
}

void write_dendrogram(std::ostream& out, const Dendrogram& d) {
  for (const LinkageEvent& e : d.events)
    out << fmt_real(e.scale) << ',' << e.i << ',' << e.j << '\n';
}

void save_dendrogram(const std::string& path, const Dendrogram& d) {
  auto out = open_out(path);
  write_dendrogram(out, d);
}

RunTrace read_trace(std::istream& in) {
  RunTrace t;
  std::string line;
  while (next_data_line(in, line)) {
    const auto fields = split_csv(line);
    if (fields.size() != 3) throw std::runtime_error("malformed trace line: " + line);
    TraceSample s;
    s.scale = parse_real(fields[0], "scale");
    s.simplex_count = static_cast<std::size_t>(parse_int(fields[1], "simplex count"));
    if (fields[2] == "insert")
      s.tag = TraceSample::Tag::Insert;
    else if (fields[2] == "collapse")
      s.tag = TraceSample::Tag::Collapse;
    else
      throw std::runtime_error("malformed trace tag: " + fields[2]);
    t.samples.push_back(s);
  }
  return t;
}

RunTrace load_trace(const std::string& path) {
  auto in = open_in(path);
  return read_trace(in);
}

void write_trace(std::ostream& out, const RunTrace& t) {
  for (const TraceSample& s : t.samples)
    out << fmt_real(s.scale) << ',' << s.simplex_count << ','
        << (s.tag == TraceSample::Tag::Insert ? "insert" : "collapse") << '\n';
}

void save_trace(const std::string& path, const RunTrace& t) {
  auto out = open_out(path);
  write_trace(out, t);
}

}  // namespace cech
