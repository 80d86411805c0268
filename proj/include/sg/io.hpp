#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sg/coloring.hpp"
#include "sg/embedding.hpp"
#include "sg/factors.hpp"
#include "sg/graph.hpp"
#include "sg/labeling.hpp"

namespace sg {

// Parsed graph document: the signed graph plus whatever optional blocks the
// file carried. Rotations in the file refer to edge ids in the file's own
// edge order; they are remapped to canonical ids on read.
struct GraphDoc {
  SignedGraph graph;
  std::optional<std::vector<std::vector<int>>> rotation;
  std::optional<std::vector<int>> vertex_signs;

  bool has_rotation() const { return rotation.has_value(); }
  bool has_vertex_signs() const { return vertex_signs.has_value(); }

  EmbeddedGraph embedded() const;            // requires rotation
  VertexSignedGraph vertex_signed() const;   // requires rotation + vertex signs
};

// JSON object {"n": int, "edges": [[u, v, s], ...]} with optional
// "rotation": [[edge ids]...] and "vertex_signs": [s...]; s is 1 or -1.
GraphDoc graph_from_json(const std::string& text);
std::string graph_to_json(const SignedGraph& g);
std::string graph_to_json(const EmbeddedGraph& g);
std::string graph_to_json(const VertexSignedGraph& g);

std::string coloring_to_json(const Coloring& c);
Coloring coloring_from_json(const std::string& text);

std::string labeling_to_json(const EdgeLabeling& L);
EdgeLabeling labeling_from_json(const std::string& text);

std::string two_factor_to_json(const TwoFactor& f);

// graph6 encoding of the underlying unsigned graph; import defaults the
// signature to all +1.
SignedGraph graph_from_graph6(const std::string& line);
std::string graph_to_graph6(const SignedGraph& g);

// DOT rendering: negative edges dashed and labeled "-", negative vertices
// drawn as boxes.
std::string graph_to_dot(const SignedGraph& g);
std::string graph_to_dot(const VertexSignedGraph& g);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace sg
