#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sg/embedding.hpp"
#include "sg/factors.hpp"
#include "sg/graph.hpp"
#include "sg/labeling.hpp"

namespace sg {

// Replacement gadget for an odd-degree negative vertex: a 2k-cycle with
// alternating vertex signs (ring vertices 0..2k-1, even ids positive, odd
// negative) plus a positive center (vertex 2k) joined to the odd ring
// vertices. The k even ring vertices are the attachment points, in cyclic
// order; each receives one pendant edge when the gadget is installed.
struct Gadget {
  VertexSignedGraph graph;  // 2k+1 vertices, 3k edges
  std::vector<int> attachment_points;
  int k = 0;
};

Gadget build_gadget(int k);

// One installed gadget inside a host: its vertex set, the pendant edges in
// host rotation order, and the host vertex it replaced.
struct GadgetRegion {
  std::vector<int> vertices;
  std::vector<int> pendant_edges;
  int k = 0;
  int host_vertex = -1;
};

struct GadgetInstall {
  VertexSignedGraph graph;
  std::vector<GadgetRegion> regions;
  // edge_map[e] = id in `graph` of host edge e (edges at a replaced vertex
  // map to the corresponding pendant edges).
  std::vector<int> edge_map;
};

// Replaces the single negative odd-degree vertex v by a gadget of its
// degree. The i-th pendant edge attaches to v's i-th neighbor in rotation
// order. Vertices other than v keep their ids; gadget vertices take id v and
// ids n, n+1, ... If the host embedding satisfied Euler's formula, the
// result does too.
GadgetInstall replace_vertex_with_gadget(const VertexSignedGraph& h, int v);

// Replaces every negative vertex (all must have odd degree) in one pass.
// Kept vertices are renumbered densely in their original order; the j-th
// replaced vertex's gadget occupies the next 2k+1 ids.
GadgetInstall replace_all_negative_vertices(const VertexSignedGraph& h);

// Collapses one installed gadget region back to a single negative vertex
// that inherits the pendant edges. edge_map[e] = id in `graph` of the
// pre-contraction edge e, or -1 for the region's internal edges.
struct ContractResult {
  VertexSignedGraph graph;
  std::vector<int> edge_map;
};
ContractResult contract_gadget(const VertexSignedGraph& h, const GadgetRegion& region);

// Undoes replace_all_negative_vertices: contracts every region and restores
// the original vertex numbering, returning the host graph exactly.
VertexSignedGraph contract_all_gadgets(const VertexSignedGraph& host,
                                       const GadgetInstall& install);

// Restriction of a labeling of the installed graph to the host through
// edge_map: host edge e gets the label of edge_map[e].
EdgeLabeling restrict_labeling(const EdgeLabeling& L, const std::vector<int>& edge_map);

// 15-vertex cubic fragment with three attachment half-edges. Vertices are
// 0..14; apex carries attachment edge e1, attach2 carries e2, attach3
// carries e3. rotation[v] lists neighbor vertex ids with -1, -2, -3 marking
// the e1/e2/e3 half-edge positions. Internal edges carry the names e4..e25
// (e20 unused); four vertices are negative.
struct FragmentTemplate {
  VertexSignedGraph graph;  // internal edges only; degree 2 at attachments
  int apex = 0;
  int attach2 = 0;
  int attach3 = 0;
  std::array<std::array<int, 3>, 15> rotation;
  std::vector<std::string> edge_names;  // per internal edge id
  std::vector<int> negative_vertices;

  int edge_by_name(const std::string& name) const;
};

FragmentTemplate build_tutte_fragment();

// Tutte's graph as a central vertex plus three fragment copies, each joined
// to the center by its e1 edge and to its neighbors by e2/e3; 46 vertices,
// 69 edges, cubic, planar, with the 12 fragment negatives.
struct TutteGraph {
  VertexSignedGraph graph;
  std::array<int, 3> e1_edges;                  // per fragment copy
  std::array<std::array<int, 15>, 3> copy_vertices;  // template id -> vertex

  // Edge id of the named fragment edge inside the given copy.
  int copy_edge(int copy, const std::string& name) const;
};

TutteGraph build_tutte_graph();

// Enumerates every 2-factor; reports the first consistent one as a
// certificate, or UNSAT with the number examined.
struct TwoFactorSearch {
  Verdict verdict = Verdict::kUnsat;
  TwoFactor certificate;  // valid iff verdict == kSat
  long long examined = 0;
};
TwoFactorSearch verify_no_consistent_two_factor(const VertexSignedGraph& h);

// The counterexample pipeline: Tutte's graph with every negative vertex
// replaced by a 7-vertex gadget (118 vertices, 177 edges, 36 negatives), and
// its dual triangulation signed so face signs match the cubic graph's vertex
// signs (61 vertices, all faces triangles).
struct Counterexample {
  VertexSignedGraph cubic;
  EmbeddedGraph triangulation;
  std::vector<int> edge_map;  // cubic edge id -> triangulation edge id
};
Counterexample build_counterexample();

// Replay of the fragment forcing argument: over all edge subsets giving
// every fragment vertex degree 2 (attachment half-edges included, e1 forced
// out, e2/e3/e4/e5 forced in), each claimed edge in turn is forced into any
// subset whose complete internal cycles all have an even number of positive
// vertices.
struct FragmentReplay {
  bool confirmed = false;
  std::vector<std::string> claims;      // e21, e9, e17, e15, e14
  std::vector<int> pool_sizes;          // configs violating each claim
  int degree_valid_configs = 0;         // all configs with e1 out
  int final_pool = 0;                   // configs satisfying all claims
};
FragmentReplay fragment_forcing_replay();

// Streams vertex subsets of size t (lexicographic order) whose negative
// placement leaves the cubic graph without a consistent 2-factor. Stops
// after `budget` subsets have been examined (budget < 0: no bound) or when
// the visitor returns false.
void search_negative_placements(const VertexSignedGraph& h, int t, long long budget,
                                const std::function<bool(const std::vector<int>&)>& visit);

}  // namespace sg
