#include "sg/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace sg {

namespace {

int parse_sign(const nlohmann::json& j, const char* what) {
  if (!j.is_number_integer())
    throw input_error(std::string(what) + " must be an integer");
  int s = j.get<int>();
  if (s != 1 && s != -1) throw input_error(std::string(what) + " must be 1 or -1");
  return s;
}

}  // namespace

GraphDoc graph_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw input_error("graph document needs \"n\" and \"edges\"");
  if (!j["n"].is_number_integer()) throw input_error("\"n\" must be an integer");
  int n = j["n"].get<int>();
  if (!j["edges"].is_array()) throw input_error("\"edges\" must be an array");

  std::vector<Edge> file_edges;
  for (const auto& item : j["edges"]) {
    if (!item.is_array() || item.size() != 3)
      throw input_error("each edge must be [u, v, s]");
    if (!item[0].is_number_integer() || !item[1].is_number_integer())
      throw input_error("edge endpoints must be integers");
    file_edges.push_back(
        {item[0].get<int>(), item[1].get<int>(), parse_sign(item[2], "edge sign")});
  }

  GraphDoc doc;
  doc.graph = SignedGraph(n, file_edges);

  if (j.contains("rotation")) {
    if (!j["rotation"].is_array())
      throw input_error("\"rotation\" must be an array of arrays");
    // File rotations index edges by their position in the file's edge list;
    // remap to canonical ids.
    std::vector<int> canonical_id(file_edges.size());
    for (size_t i = 0; i < file_edges.size(); i++)
      canonical_id[i] = doc.graph.edge_id(file_edges[i].u, file_edges[i].v);
    std::vector<std::vector<int>> rotation;
    for (const auto& row : j["rotation"]) {
      if (!row.is_array()) throw input_error("\"rotation\" must be an array of arrays");
      std::vector<int> ids;
      for (const auto& cell : row) {
        if (!cell.is_number_integer())
          throw input_error("rotation entries must be edge ids");
        int e = cell.get<int>();
        if (e < 0 || e >= static_cast<int>(file_edges.size()))
          throw input_error("rotation references unknown edge id " + std::to_string(e));
        ids.push_back(canonical_id[e]);
      }
      rotation.push_back(std::move(ids));
    }
    doc.rotation = std::move(rotation);
  }

  if (j.contains("vertex_signs")) {
    if (!j["vertex_signs"].is_array())
      throw input_error("\"vertex_signs\" must be an array");
    std::vector<int> signs;
    for (const auto& cell : j["vertex_signs"])
      signs.push_back(parse_sign(cell, "vertex sign"));
    doc.vertex_signs = std::move(signs);
  }
  return doc;
}

EmbeddedGraph GraphDoc::embedded() const {
  if (!rotation) throw input_error("graph document carries no rotation");
  return EmbeddedGraph(graph, *rotation);
}

VertexSignedGraph GraphDoc::vertex_signed() const {
  if (!rotation) throw input_error("graph document carries no rotation");
  if (!vertex_signs) throw input_error("graph document carries no vertex signs");
  return VertexSignedGraph(graph, *rotation, *vertex_signs);
}

namespace {

// Hand-rolled writers keep each top-level key on a single line; nlohmann's
// indented dump would spread every edge triple over five lines.
void append_ints(std::string& out, const std::vector<int>& xs) {
  out += '[';
  for (size_t i = 0; i < xs.size(); i++) {
    if (i) out += ", ";
    out += std::to_string(xs[i]);
  }
  out += ']';
}

void append_rows(std::string& out, const std::vector<std::vector<int>>& rows) {
  out += '[';
  for (size_t i = 0; i < rows.size(); i++) {
    if (i) out += ", ";
    append_ints(out, rows[i]);
  }
  out += ']';
}

std::string graph_json(const SignedGraph& g,
                       const std::vector<std::vector<int>>* rotation,
                       const std::vector<int>* vertex_signs) {
  std::string out = "{\n  \"n\": " + std::to_string(g.n()) + ",\n  \"edges\": [";
  for (int e = 0; e < g.m(); e++) {
    if (e) out += ", ";
    out += '[' + std::to_string(g.edge(e).u) + ", " + std::to_string(g.edge(e).v) +
           ", " + std::to_string(g.edge(e).sign) + ']';
  }
  out += ']';
  if (rotation) {
    out += ",\n  \"rotation\": ";
    append_rows(out, *rotation);
  }
  if (vertex_signs) {
    out += ",\n  \"vertex_signs\": ";
    append_ints(out, *vertex_signs);
  }
  out += "\n}\n";
  return out;
}

}  // namespace

std::string graph_to_json(const SignedGraph& g) {
  return graph_json(g, nullptr, nullptr);
}

std::string graph_to_json(const EmbeddedGraph& g) {
  return graph_json(g.graph(), &g.rotation(), nullptr);
}

std::string graph_to_json(const VertexSignedGraph& g) {
  return graph_json(g.graph(), &g.rotation(), &g.vertex_signs());
}

std::string coloring_to_json(const Coloring& c) {
  std::string out = "{\n  \"k\": " + std::to_string(c.k) + ",\n  \"colors\": ";
  append_ints(out, c.colors);
  return out + "\n}\n";
}

Coloring coloring_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("k") || !j.contains("colors"))
    throw input_error("coloring document needs \"k\" and \"colors\"");
  Coloring c;
  c.k = j["k"].get<int>();
  for (const auto& cell : j["colors"]) {
    if (!cell.is_number_integer()) throw input_error("colors must be integers");
    c.colors.push_back(cell.get<int>());
  }
  return c;
}

std::string labeling_to_json(const EdgeLabeling& L) {
  std::string out = "{\n  \"labels\": [";
  for (size_t i = 0; i < L.labels.size(); i++) {
    if (i) out += ", ";
    out += '"';
    out += label_char(L.labels[i]);
    out += '"';
  }
  return out + "]\n}\n";
}

EdgeLabeling labeling_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("labels"))
    throw input_error("labeling document needs \"labels\"");
  EdgeLabeling L;
  for (const auto& cell : j["labels"]) {
    if (!cell.is_string() || cell.get<std::string>().size() != 1)
      throw input_error("labels must be \"0\", \"a\" or \"b\"");
    L.labels.push_back(label_from_char(cell.get<std::string>()[0]));
  }
  return L;
}

std::string two_factor_to_json(const TwoFactor& f) {
  std::string out = "{\n  \"edges\": ";
  append_ints(out, f.edges);
  out += ",\n  \"cycles\": ";
  append_rows(out, f.cycles);
  return out + "\n}\n";
}

// graph6: 6-bit chunks offset by 63; n encoded in 1 or 4 bytes, then the
// upper triangle of the adjacency matrix column by column.
SignedGraph graph_from_graph6(const std::string& line) {
  std::string s = line;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
  if (s.empty()) throw input_error("empty graph6 string");
  size_t pos = 0;
  auto byte = [&](size_t i) -> int {
    if (i >= s.size()) throw input_error("truncated graph6 string");
    int c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) throw input_error("invalid graph6 character");
    return c - 63;
  };
  long long n;
  if (s[0] != '~') {
    n = byte(0);
    pos = 1;
  } else if (s.size() > 1 && s[1] != '~') {
    n = (static_cast<long long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
    pos = 4;
  } else {
    throw input_error("graph6 strings beyond 258047 vertices are not supported");
  }
  std::vector<Edge> edges;
  int bit = 0;
  long long word = 0;
  int avail = 0;
  for (int v = 1; v < n; v++) {
    for (int u = 0; u < v; u++) {
      if (avail == 0) {
        word = byte(pos++);
        avail = 6;
      }
      bit = (word >> (avail - 1)) & 1;
      avail--;
      if (bit) edges.push_back({u, v, 1});
    }
  }
  if (pos != s.size()) throw input_error("trailing data in graph6 string");
  return SignedGraph(static_cast<int>(n), edges);
}

std::string graph_to_graph6(const SignedGraph& g) {
  std::string out;
  int n = g.n();
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  } else {
    throw input_error("graph too large for graph6 encoding");
  }
  int acc = 0, used = 0;
  for (int v = 1; v < n; v++) {
    for (int u = 0; u < v; u++) {
      acc = (acc << 1) | (g.edge_id(u, v) >= 0 ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
  return out;
}

namespace {

std::string dot_body(const SignedGraph& g, const std::vector<int>* vertex_signs) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.n(); v++) {
    out << "  " << v;
    if (vertex_signs && (*vertex_signs)[v] < 0) out << " [shape=box]";
    else out << " [shape=circle]";
    out << ";\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  " << e.u << " -- " << e.v;
    if (e.sign < 0) out << " [style=dashed, label=\"-\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace

std::string graph_to_dot(const SignedGraph& g) { return dot_body(g, nullptr); }

std::string graph_to_dot(const VertexSignedGraph& g) {
  return dot_body(g.graph(), &g.vertex_signs());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write " + path);
  out << content;
}

}  // namespace sg
