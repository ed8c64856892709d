#include "zonocube/io.hpp"

#include <cstdio>
#include <json.hpp>
#include <sstream>

namespace zonocube {

int to_symmetric_label(int color, int n) {
  int m = n / 2;
  if (color < 1 || color > n) throw InvalidInput("color out of range");
  if (n % 2 == 1) return color - m - 1;
  return color <= m ? color - m - 1 : color - m;
}

int from_symmetric_label(int label, int n) {
  int m = n / 2;
  if (n % 2 == 1) {
    if (label < -m || label > m) throw InvalidInput("symmetric label out of range");
    return label + m + 1;
  }
  if (label == 0 || label < -m || label > m)
    throw InvalidInput("symmetric label out of range for even color count");
  return label < 0 ? label + m + 1 : label + m;
}

namespace {

void emit_inversions(std::ostringstream& os, const Cubillage& q, LabelMode mode) {
  os << "[";
  bool first_set = true;
  for (ColorSet f : q.inv().members) {
    if (!first_set) os << ",";
    first_set = false;
    os << "[";
    auto els = f.elements();
    for (size_t i = 0; i < els.size(); ++i) {
      if (i) os << ",";
      os << (mode == LabelMode::Natural ? els[i] : to_symmetric_label(els[i], q.n()));
    }
    os << "]";
  }
  os << "]";
}

}  // namespace

std::string emit_cubillage(const Cubillage& q, LabelMode mode) {
  std::ostringstream os;
  os << "{\"n\":" << q.n() << ",\"d\":" << q.d() << ",\"inversions\":";
  emit_inversions(os, q, mode);
  if (mode == LabelMode::Symmetric) os << ",\"label_mode\":\"symmetric\"";
  os << "}";
  return os.str();
}

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON at byte ") + std::to_string(e.byte) + ": " +
                       e.what());
  }
}

int require_int(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number_integer())
    throw InvalidInput(std::string("document needs an integer \"") + field + "\" field");
  return j[field].get<int>();
}

}  // namespace

ParsedCubillage parse_cubillage(const std::string& text) {
  json j = parse_json(text);
  int n = require_int(j, "n");
  int d = require_int(j, "d");
  LabelMode mode = LabelMode::Natural;
  if (j.contains("label_mode")) {
    std::string s = j["label_mode"].get<std::string>();
    if (s == "symmetric")
      mode = LabelMode::Symmetric;
    else if (s != "natural")
      throw InvalidInput("label_mode must be \"natural\" or \"symmetric\", got \"" + s + "\"");
  }
  if (!j.contains("inversions") || !j["inversions"].is_array())
    throw InvalidInput("document needs an \"inversions\" array");
  InversionSet inv(n, d);
  size_t at = 0;
  for (const auto& item : j["inversions"]) {
    if (!item.is_array())
      throw InvalidInput("inversions[" + std::to_string(at) + "] is not an array");
    ColorSet f;
    for (const auto& c : item) {
      if (!c.is_number_integer())
        throw InvalidInput("inversions[" + std::to_string(at) + "] holds a non-integer");
      int color = c.get<int>();
      if (mode == LabelMode::Symmetric) color = from_symmetric_label(color, n);
      if (f.contains(color))
        throw InvalidInput("inversions[" + std::to_string(at) + "] repeats color " +
                           std::to_string(color));
      f = f.with(color);
    }
    inv.insert(f);
    ++at;
  }
  return ParsedCubillage{Cubillage::validated(std::move(inv)), mode};
}

std::string emit_digraph(const FlipDigraph& g, const std::string& cls) {
  std::ostringstream os;
  os << "{\"n\":" << g.n << ",\"d\":" << g.d << ",\"class\":\"" << cls << "\",\"nodes\":[";
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    if (i) os << ",";
    os << "{\"id\":" << i << ",\"rank\":" << g.nodes[i].rank() << ",\"inversions\":";
    emit_inversions(os, g.nodes[i], LabelMode::Natural);
    os << "}";
  }
  os << "],\"edges\":[";
  for (size_t i = 0; i < g.edges.size(); ++i) {
    if (i) os << ",";
    os << "{\"src\":" << g.edges[i].src << ",\"dst\":" << g.edges[i].dst << ",\"kind\":\""
       << flip_kind_name(g.edges[i].kind) << "\"}";
  }
  os << "]}";
  return os.str();
}

DigraphDocument parse_digraph(const std::string& text) {
  json j = parse_json(text);
  DigraphDocument doc;
  doc.n = require_int(j, "n");
  doc.d = require_int(j, "d");
  if (!j.contains("class") || !j["class"].is_string())
    throw InvalidInput("digraph document needs a \"class\" field");
  doc.cls = j["class"].get<std::string>();
  if (!j.contains("nodes") || !j["nodes"].is_array() || !j.contains("edges") ||
      !j["edges"].is_array())
    throw InvalidInput("digraph document needs \"nodes\" and \"edges\" arrays");
  for (const auto& nd : j["nodes"]) {
    DigraphDocument::Node node;
    node.id = require_int(nd, "id");
    node.rank = require_int(nd, "rank");
    for (const auto& inv : nd.at("inversions")) node.inversions.push_back(inv.get<std::vector<int>>());
    doc.nodes.push_back(std::move(node));
  }
  for (const auto& ed : j["edges"]) {
    DigraphDocument::Edge edge;
    edge.src = require_int(ed, "src");
    edge.dst = require_int(ed, "dst");
    edge.kind = ed.at("kind").get<std::string>();
    doc.edges.push_back(std::move(edge));
  }
  return doc;
}

std::string digraph_to_dot(const DigraphDocument& doc) {
  std::ostringstream os;
  os << "digraph cubillages {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box, fontname=\"monospace\", fontsize=10];\n";
  for (const auto& nd : doc.nodes) {
    os << "  n" << nd.id << " [label=\"" << nd.id << " r" << nd.rank << ": ";
    if (nd.inversions.empty()) os << "{}";
    for (size_t i = 0; i < nd.inversions.size(); ++i) {
      if (i) os << " ";
      for (int c : nd.inversions[i]) os << c;
    }
    os << "\"];\n";
  }
  for (const auto& ed : doc.edges) {
    os << "  n" << ed.src << " -> n" << ed.dst;
    if (ed.kind == "double")
      os << " [color=\"black:invis:black\"]";
    else if (ed.kind == "barrel")
      os << " [style=bold, penwidth=2.5]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

namespace {

double rat_to_double(const Rat& r) {
  return r.convert_to<double>();
}

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

}  // namespace

std::string cubillage_to_svg(const Cubillage& q, const Frame& f) {
  if (q.d() != 2) throw InvalidInput("svg export is defined for d=2 only");
  if (f.n != q.n() || f.d != 2) throw InvalidInput("svg export: frame mismatch");
  const int n = q.n();
  const double scale = 40.0;
  const double margin = 20.0;

  double xmin = 0, xmax = 0;
  for (int i = 1; i <= n; ++i) {
    double ti = rat_to_double(f.t[i - 1]);
    (ti < 0 ? xmin : xmax) += ti;
  }
  auto X = [&](double sx) { return margin + (sx - xmin) * scale; };
  auto Y = [&](double sy) { return margin + (n - sy) * scale; };  // flip: rank axis upward

  auto corner = [&](ColorSet v) {
    double sx = 0;
    for (int c : v.elements()) sx += rat_to_double(f.t[c - 1]);
    return std::pair<double, double>(X(sx), Y(v.size()));
  };

  std::ostringstream os;
  double w = (xmax - xmin) * scale + 2 * margin;
  double h = n * scale + 2 * margin;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(w) << "\" height=\"" << fmt(h)
     << "\" viewBox=\"0 0 " << fmt(w) << " " << fmt(h) << "\">\n";
  for (ColorSet type : enumerate_packets(n, 2)) {
    ColorSet base = cube_base(q, type);
    auto dirs = type.elements();
    auto p0 = corner(base);
    auto p1 = corner(base.with(dirs[0]));
    auto p2 = corner(base.with(dirs[0]).with(dirs[1]));
    auto p3 = corner(base.with(dirs[1]));
    os << "  <polygon points=\"" << fmt(p0.first) << "," << fmt(p0.second) << " " << fmt(p1.first)
       << "," << fmt(p1.second) << " " << fmt(p2.first) << "," << fmt(p2.second) << " "
       << fmt(p3.first) << "," << fmt(p3.second)
       << "\" fill=\"white\" stroke=\"black\" stroke-width=\"1\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string counts_csv(const std::vector<std::tuple<int, int, std::string, uint64_t>>& rows) {
  std::ostringstream os;
  os << "n,d,class,count\n";
  for (const auto& [n, d, cls, count] : rows) os << n << "," << d << "," << cls << "," << count << "\n";
  return os.str();
}

}  // namespace zonocube
