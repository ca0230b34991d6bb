#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "arborist/graph.hpp"
#include "arborist/metrics.hpp"

namespace arborist {

// Weight files hold one block per sentence, blank-line separated:
//   n <token count>
//   e <src> <dst> <weight> [label]
// '#' starts a comment line. Self loops and edges into the root are not
// representable in a Graph, so the parser drops them and counts the drops
// instead of failing the file.
struct WeightFileResult {
  std::vector<Graph> sentences;
  std::size_t dropped_self_loops = 0;
  std::size_t dropped_root_incoming = 0;
};

// parse_error on malformed input; the message carries the 1-based line.
WeightFileResult parse_weight_file(std::istream& in);
WeightFileResult parse_weight_file_text(const std::string& text);

// Weights are written with enough digits to parse back bit-identical.
void emit_weight_file(std::ostream& out, std::span<const Graph> sentences);

// Heads files hold one token per line, sentences blank-line separated:
//   <index>\t<head>\t<label or _>
// '_' as head marks a token the decoder could not attach.
struct HeadsSentence {
  SentenceHeads heads;
  std::vector<std::string> labels;
};

std::vector<HeadsSentence> parse_heads_file(std::istream& in);  // parse_error
void emit_heads_file(std::ostream& out, std::span<const HeadsSentence> sentences);

struct RandomGraphConfig {
  NodeId tokens = 4;
  double density = 1.0;          // inclusion probability per (src, dst) pair
  bool integer_weights = false;  // ints in [weight_min, weight_max], else uniform [0,1)
  int weight_min = -9;
  int weight_max = 9;
  double parallel_fraction = 0.0;  // chance of appending parallel duplicates
  bool ensure_connected = false;   // patch nodes with no incoming edge
};

// Deterministic for a given config and generator state. Draws its own
// uniforms from raw 64-bit outputs so results match across standard
// libraries.
Graph random_graph(const RandomGraphConfig& cfg, std::mt19937_64& rng);

std::string format_weight(double w);  // shortest round-trip decimal form

}  // namespace arborist
