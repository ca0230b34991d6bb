#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "arborist/bench.hpp"
#include "arborist/decode.hpp"
#include "arborist/io.hpp"
#include "arborist/metrics.hpp"
#include "arborist/oracle.hpp"

namespace {

using namespace arborist;

std::optional<WeightFileResult> load_weights(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open " << path << "\n";
    return std::nullopt;
  }
  try {
    return parse_weight_file(in);
  } catch (const Error& e) {
    std::cerr << path << ": " << e.what() << "\n";
    return std::nullopt;
  }
}

std::optional<std::vector<HeadsSentence>> load_heads(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open " << path << "\n";
    return std::nullopt;
  }
  try {
    return parse_heads_file(in);
  } catch (const Error& e) {
    std::cerr << path << ": " << e.what() << "\n";
    return std::nullopt;
  }
}

int run_decode(const std::string& input, const std::string& output, const std::string& mode,
               bool trace) {
  std::optional<WeightFileResult> parsed = load_weights(input);
  if (!parsed) return 1;
  if (parsed->dropped_self_loops || parsed->dropped_root_incoming)
    std::cerr << "dropped " << parsed->dropped_self_loops << " self loop(s) and "
              << parsed->dropped_root_incoming << " edge(s) into the root\n";

  const bool constrained = mode == "constrained";
  bool any_failure = false;
  std::vector<HeadsSentence> out;
  out.reserve(parsed->sentences.size());
  for (std::size_t i = 0; i < parsed->sentences.size(); ++i) {
    const Graph& g = parsed->sentences[i];
    DecodeTrace tr;
    DecodeOptions opt;
    if (trace) opt.trace = &tr;
    HeadsSentence hs;
    try {
      GraphView v(g);
      EdgeSelection sel = constrained ? decode_dependency_tree(v, opt) : decode_mwa(v, opt);
      for (NodeId t = 1; t < g.node_count(); ++t) {
        const Edge& e = g.edge(sel.chosen[t]);
        hs.heads.push_back(static_cast<int>(e.src));
        hs.labels.emplace_back(g.label_of(e));
      }
      if (trace) {
        std::cerr << "sentence " << (i + 1) << ": weight " << format_weight(sel.total_weight)
                  << ", contractions " << tr.contractions << ", reductions "
                  << tr.reduction_steps << "\n";
        for (std::size_t s = 0; s < tr.constrain_steps.size(); ++s) {
          const ConstrainStep& st = tr.constrain_steps[s];
          std::cerr << "  step " << (s + 1) << ": removed edge "
                    << st.candidates[st.chosen].removed_edge << " score "
                    << format_weight(st.candidates[st.chosen].removal_weight) << " case "
                    << (st.reduction ? "reduction" : "optimization") << "\n";
        }
      }
    } catch (const Error& e) {
      any_failure = true;
      hs.heads.assign(g.token_count(), kMissingHead);
      hs.labels.assign(g.token_count(), std::string{});
      std::cerr << "sentence " << (i + 1) << ": " << e.what() << "\n";
    }
    out.push_back(std::move(hs));
  }

  std::ofstream os(output);
  if (!os) {
    std::cerr << "cannot write " << output << "\n";
    return 1;
  }
  emit_heads_file(os, out);
  return any_failure ? 2 : 0;
}

int run_eval(const std::string& gold_path, const std::string& con_path,
             const std::string& unc_path) {
  auto gold = load_heads(gold_path);
  auto con = load_heads(con_path);
  auto unc = load_heads(unc_path);
  if (!gold || !con || !unc) return 1;
  auto strip = [](const std::vector<HeadsSentence>& in) {
    std::vector<SentenceHeads> out;
    out.reserve(in.size());
    for (const HeadsSentence& s : in) out.push_back(s.heads);
    return out;
  };
  try {
    EvalReport r = evaluate(strip(*gold), strip(*con), strip(*unc));
    std::cout << format_report(r);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 0;
}

int run_bench_cmd(const BenchConfig& cfg) {
  try {
    std::vector<BenchRow> rows = run_bench(cfg);
    write_bench_csv(std::cout, rows, cfg.digest);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 0;
}

int run_oracle(const std::string& input, std::size_t max_n) {
  std::optional<WeightFileResult> parsed = load_weights(input);
  if (!parsed) return 1;
  bool any_fail = false;
  for (const Graph& g : parsed->sentences) {
    GraphView v(g);
    std::optional<ScoredTree> best_u;
    std::optional<ScoredTree> best_c;
    try {
      best_u = best_tree(v, false, max_n);
      best_c = best_tree(v, true, max_n);
    } catch (const Error& e) {
      std::cerr << e.what() << "\n";
      return 1;
    }
    std::optional<double> dec_u;
    std::optional<double> dec_c;
    try {
      dec_u = decode_mwa(v).total_weight;
    } catch (const Error&) {
    }
    try {
      dec_c = decode_dependency_tree(v).total_weight;
    } catch (const Error&) {
    }
    auto agree = [](const std::optional<ScoredTree>& b, const std::optional<double>& d) {
      if (!b || !d) return !b && !d;
      double tol = 1e-9 * std::max(1.0, std::fabs(b->weight));
      return std::fabs(b->weight - *d) <= tol;
    };
    std::cout << "unconstrained " << (best_u ? format_weight(best_u->weight) : "none")
              << " constrained " << (best_c ? format_weight(best_c->weight) : "none") << " "
              << (agree(best_u, dec_u) ? "PASS" : "FAIL") << " "
              << (agree(best_c, dec_c) ? "PASS" : "FAIL") << "\n";
    any_fail = any_fail || !agree(best_u, dec_u) || !agree(best_c, dec_c);
  }
  return any_fail ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum-weight arborescence and dependency-tree decoding"};
  app.require_subcommand(1);

  std::string input;
  std::string output;
  std::string mode = "constrained";
  bool trace = false;
  CLI::App* decode = app.add_subcommand("decode", "Decode a weight file to head assignments");
  decode->add_option("--input", input, "weight file")->required();
  decode->add_option("--output", output, "heads file to write")->required();
  decode->add_option("--mode", mode, "constrained (default) or unconstrained")
      ->check(CLI::IsMember({"constrained", "unconstrained"}));
  decode->add_flag("--trace", trace, "step diagnostics on stderr");

  std::string gold;
  std::string pred_con;
  std::string pred_unc;
  CLI::App* eval = app.add_subcommand("eval", "Score predictions against gold heads");
  eval->add_option("--gold", gold, "gold heads file")->required();
  eval->add_option("--pred-constrained", pred_con, "constrained predictions")->required();
  eval->add_option("--pred-unconstrained", pred_unc, "unconstrained predictions")->required();

  arborist::BenchConfig bc;
  CLI::App* bench = app.add_subcommand("bench", "Time the decoders on random dense graphs");
  bench->add_option("--min-n", bc.min_n, "smallest size (default 100)");
  bench->add_option("--max-n", bc.max_n, "largest size (default 1600)");
  bench->add_option("--trials", bc.trials, "trials per size (default 5)");
  bench->add_option("--seed", bc.seed, "generator seed (default 1)");
  bench->add_option("--density", bc.density, "edge probability (default 1.0)");
  bench->add_flag("--digest", bc.digest, "append a result digest column");

  std::string oracle_input;
  std::size_t max_n = 8;
  CLI::App* oracle = app.add_subcommand("oracle", "Check decoders against exhaustive search");
  oracle->add_option("--input", oracle_input, "weight file")->required();
  oracle->add_option("--max-n", max_n, "largest sentence the oracle will take (default 8)");

  CLI11_PARSE(app, argc, argv);

  if (decode->parsed()) return run_decode(input, output, mode, trace);
  if (eval->parsed()) return run_eval(gold, pred_con, pred_unc);
  if (bench->parsed()) return run_bench_cmd(bc);
  if (oracle->parsed()) return run_oracle(oracle_input, max_n);
  return 1;
}
