#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sg/embedding.hpp"
#include "sg/graph.hpp"

namespace sg {

// Fixed planar embedded graphs with all-positive signatures, used as test
// substrates. Rotations are hand-laid and Euler-checked in the test suite.
EmbeddedGraph tetrahedron();
EmbeddedGraph prism(int n);      // n >= 3; prism(4) is the cube
EmbeddedGraph antiprism(int n);  // n >= 3; antiprism(3) is the octahedron
EmbeddedGraph cube();
EmbeddedGraph octahedron();
EmbeddedGraph icosahedron();
EmbeddedGraph dodecahedron();  // dual of the icosahedron

// The 3-connected members with at most max_n vertices.
std::vector<EmbeddedGraph> small_catalog(int max_n);

// Copy of g with each edge sign chosen uniformly at random.
EmbeddedGraph randomize_signature(const EmbeddedGraph& g, std::mt19937_64& rng);

// Random connected cubic graph on n vertices (n even) from the pairing
// model, resampled until simple and connected. Rotations list incident edges
// ascending (no planarity implied); vertex signs all +1.
VertexSignedGraph random_cubic_host(int n, std::uint64_t seed);

// Random planar cubic graph: dual of a stacked triangulation grown by
// repeatedly subdividing a random face of the tetrahedron. n must be even
// and >= 4; the triangulation has n faces. Vertex signs all +1.
VertexSignedGraph random_planar_cubic_host(int n, std::uint64_t seed);

// Copy of h with the given vertices negative.
VertexSignedGraph with_negative_vertices(const VertexSignedGraph& h,
                                         const std::vector<int>& negatives);

// All connected labeled graphs with 1..max_n vertices (max_n <= 6), edges
// all +1, ordered by vertex count then edge bitmask.
std::vector<SignedGraph> connected_graphs_upto(int max_n);

// One representative per switching class of g's signatures: spanning-forest
// edges positive, co-tree edges running through all sign patterns.
std::vector<SignedGraph> signatures_up_to_switching(const SignedGraph& g);

}  // namespace sg
