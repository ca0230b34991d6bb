#include "arborist/io.hpp"

#include <cassert>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace arborist {
namespace {

[[noreturn]] void bad_line(std::size_t line, const std::string& what) {
  raise(Errc::parse_error, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

bool parse_u32(const std::string& s, std::uint32_t& out) {
  const char* b = s.data();
  const char* e = b + s.size();
  auto res = std::from_chars(b, e, out);
  return res.ec == std::errc{} && res.ptr == e;
}

bool parse_double(const std::string& s, double& out) {
  const char* b = s.data();
  const char* e = b + s.size();
  auto res = std::from_chars(b, e, out);
  return res.ec == std::errc{} && res.ptr == e;
}

bool blank(const std::string& line) {
  for (char c : line)
    if (c != ' ' && c != '\t') return false;
  return true;
}

bool comment(const std::string& line) {
  for (char c : line) {
    if (c == ' ' || c == '\t') continue;
    return c == '#';
  }
  return false;
}

}  // namespace

WeightFileResult parse_weight_file(std::istream& in) {
  WeightFileResult out;
  bool open = false;
  std::uint32_t tokens = 0;
  std::vector<EdgeInput> edges;
  std::size_t line_no = 0;
  std::size_t block_line = 0;

  auto finish = [&] {
    if (!open) return;
    out.sentences.push_back(build_graph(tokens, edges));
    open = false;
    edges.clear();
  };

  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (blank(line)) {
      finish();
      continue;
    }
    if (comment(line)) continue;

    std::vector<std::string> f = split_ws(line);
    if (f[0] == "n") {
      if (open) bad_line(line_no, "sentence starting before a blank line");
      if (f.size() != 2) bad_line(line_no, "expected: n <token count>");
      if (!parse_u32(f[1], tokens) || tokens == 0) bad_line(line_no, "bad token count '" + f[1] + "'");
      open = true;
      block_line = line_no;
      continue;
    }
    if (f[0] == "e") {
      if (!open) bad_line(line_no, "edge before any 'n' line");
      if (f.size() != 4 && f.size() != 5) bad_line(line_no, "expected: e <src> <dst> <weight> [label]");
      std::uint32_t src = 0;
      std::uint32_t dst = 0;
      double w = 0.0;
      if (!parse_u32(f[1], src)) bad_line(line_no, "bad source '" + f[1] + "'");
      if (!parse_u32(f[2], dst)) bad_line(line_no, "bad target '" + f[2] + "'");
      if (src > tokens || dst > tokens) bad_line(line_no, "endpoint beyond declared token count");
      if (!parse_double(f[3], w)) bad_line(line_no, "bad weight '" + f[3] + "'");
      if (!std::isfinite(w)) bad_line(line_no, "weight must be finite");
      if (dst == kRoot) {
        ++out.dropped_root_incoming;
        continue;
      }
      if (src == dst) {
        ++out.dropped_self_loops;
        continue;
      }
      edges.push_back({src, dst, w, f.size() == 5 ? f[4] : std::string{}});
      continue;
    }
    bad_line(line_no, "unrecognized directive '" + f[0] + "'");
  }
  (void)block_line;
  finish();
  return out;
}

WeightFileResult parse_weight_file_text(const std::string& text) {
  std::istringstream ss(text);
  return parse_weight_file(ss);
}

std::string format_weight(double w) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, w);
  assert(res.ec == std::errc{});
  return std::string(buf, res.ptr);
}

void emit_weight_file(std::ostream& out, std::span<const Graph> sentences) {
  bool first = true;
  for (const Graph& g : sentences) {
    if (!first) out << "\n";
    first = false;
    out << "n " << g.token_count() << "\n";
    for (const Edge& e : g.edges()) {
      out << "e " << e.src << " " << e.dst << " " << format_weight(e.weight);
      std::string_view label = g.label_of(e);
      if (!label.empty()) out << " " << label;
      out << "\n";
    }
  }
}

std::vector<HeadsSentence> parse_heads_file(std::istream& in) {
  std::vector<HeadsSentence> out;
  HeadsSentence cur;
  bool open = false;
  std::size_t line_no = 0;

  auto finish = [&] {
    if (!open) return;
    out.push_back(std::move(cur));
    cur = HeadsSentence{};
    open = false;
  };

  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (blank(line)) {
      finish();
      continue;
    }
    std::vector<std::string> f;
    std::size_t start = 0;
    while (true) {
      std::size_t tab = line.find('\t', start);
      f.push_back(line.substr(start, tab == std::string::npos ? tab : tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (f.size() != 3) bad_line(line_no, "expected: <index>\\t<head>\\t<label or _>");
    std::uint32_t index = 0;
    if (!parse_u32(f[0], index) || index != cur.heads.size() + 1)
      bad_line(line_no, "token index '" + f[0] + "' out of order");
    int head = kMissingHead;
    if (f[1] != "_") {
      std::uint32_t h = 0;
      if (!parse_u32(f[1], h)) bad_line(line_no, "bad head '" + f[1] + "'");
      head = static_cast<int>(h);
    }
    cur.heads.push_back(head);
    cur.labels.push_back(f[2] == "_" ? std::string{} : f[2]);
    open = true;
  }
  finish();
  return out;
}

void emit_heads_file(std::ostream& out, std::span<const HeadsSentence> sentences) {
  bool first = true;
  for (const HeadsSentence& s : sentences) {
    if (!first) out << "\n";
    first = false;
    for (std::size_t t = 0; t < s.heads.size(); ++t) {
      out << (t + 1) << "\t";
      if (s.heads[t] == kMissingHead)
        out << "_";
      else
        out << s.heads[t];
      out << "\t";
      const std::string& label = t < s.labels.size() ? s.labels[t] : std::string{};
      out << (label.empty() ? "_" : label) << "\n";
    }
  }
}

namespace {

double u01(std::mt19937_64& rng) {
  // 53 high bits, same mapping everywhere.
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double draw_weight(const RandomGraphConfig& cfg, std::mt19937_64& rng) {
  if (!cfg.integer_weights) return u01(rng);
  auto span = static_cast<std::uint64_t>(cfg.weight_max - cfg.weight_min) + 1;
  return static_cast<double>(cfg.weight_min + static_cast<int>(rng() % span));
}

}  // namespace

Graph random_graph(const RandomGraphConfig& cfg, std::mt19937_64& rng) {
  if (cfg.tokens == 0) raise(Errc::precondition, "need at least one token");
  const NodeId n = cfg.tokens;
  std::vector<EdgeInput> edges;
  for (NodeId dst = 1; dst <= n; ++dst)
    for (NodeId src = 0; src <= n; ++src) {
      if (src == dst) continue;
      if (u01(rng) >= cfg.density) continue;
      edges.push_back({src, dst, draw_weight(cfg, rng)});
    }

  if (cfg.parallel_fraction > 0.0 && !edges.empty() && u01(rng) < cfg.parallel_fraction) {
    std::size_t copies = 1 + rng() % 3;
    for (std::size_t k = 0; k < copies; ++k) {
      const EdgeInput& base = edges[rng() % edges.size()];
      edges.push_back({base.src, base.dst, draw_weight(cfg, rng)});
    }
  }

  if (cfg.ensure_connected) {
    std::vector<std::uint8_t> has_in(n + 1, 0);
    bool has_root_edge = false;
    for (const EdgeInput& e : edges) {
      has_in[e.dst] = 1;
      has_root_edge |= e.src == kRoot;
    }
    for (NodeId dst = 1; dst <= n; ++dst) {
      if (has_in[dst]) continue;
      NodeId src = n > 1 ? (dst % n) + 1 : kRoot;
      edges.push_back({src, dst, draw_weight(cfg, rng)});
    }
    if (!has_root_edge) edges.push_back({kRoot, 1, draw_weight(cfg, rng)});
  }

  return build_graph(n, edges);
}

}  // namespace arborist
