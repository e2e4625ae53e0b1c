#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tuttecoh/graph.hpp"

namespace tuttecoh {

inline constexpr std::uint64_t kDefaultSeed = 20061;
inline constexpr int kRandomGraphCount = 50;
inline constexpr int kRandomMaxVertices = 5;
inline constexpr int kRandomMaxEdges = 6;
inline constexpr int kFamilyMaxEdges = 8;

struct CorpusEntry {
  std::string name;
  Graph graph;
};

/// One representative per isomorphism class of multigraphs (loops and
/// parallel edges allowed) with 1..max_vertices vertices and at most
/// max_edges edges. Representatives list their edges in canonical order.
std::vector<Graph> enumerate_multigraphs(int max_vertices, int max_edges);

/// Uniform vertex count in [1, max_vertices], edge count in [0, max_edges],
/// endpoints uniform.
Graph random_multigraph(std::mt19937_64& rng, int max_vertices, int max_edges);

/// Uniform permutation of 0..n-1 by Fisher-Yates. Written out so the result
/// depends only on the engine, not on the standard library.
std::vector<int> random_permutation(int n, std::mt19937_64& rng);

/// Uniform integer in [lo, hi] from the engine, library independent.
int uniform_int(std::mt19937_64& rng, int lo, int hi);

/// Every family member with at most `family_max_edges` edges.
std::vector<CorpusEntry> family_corpus(int family_max_edges = kFamilyMaxEdges);

/// Family members plus seeded random multigraphs, optionally limited to
/// graphs with at most `max_edges` edges.
std::vector<CorpusEntry> builtin_corpus(std::uint64_t seed = kDefaultSeed, int max_edges = kFamilyMaxEdges);

/// Enumerated classes (named enum#k) followed by the family corpus.
std::vector<CorpusEntry> sweep_corpus(int max_vertices = 5, int max_edges = 6,
                                      int family_max_edges = kFamilyMaxEdges);

}  // namespace tuttecoh
