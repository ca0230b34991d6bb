#include "arborist/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace arborist {

bool is_malformed(const SentenceHeads& heads) {
  const int n = static_cast<int>(heads.size());
  int roots = 0;
  for (int i = 0; i < n; ++i) {
    int h = heads[i];
    if (h < 0 || h > n || h == i + 1) return true;
    roots += h == 0;
  }
  if (roots != 1) return true;

  // One valid head each; only cycles can remain.
  std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int s = 1; s <= n; ++s) {
    int v = s;
    while (v != 0 && seen[v] == 0) {
      seen[v] = s;
      v = heads[v - 1];
    }
    if (v != 0 && seen[v] == s) return true;
  }
  return false;
}

double malformed_rate(std::span<const SentenceHeads> preds) {
  if (preds.empty()) raise(Errc::empty_corpus, "no sentences to rate");
  std::size_t bad = 0;
  for (const SentenceHeads& s : preds) bad += is_malformed(s);
  return static_cast<double>(bad) / static_cast<double>(preds.size());
}

namespace {

void check_aligned(std::span<const SentenceHeads> gold, std::span<const SentenceHeads> pred) {
  if (gold.size() != pred.size())
    raise(Errc::length_mismatch, std::to_string(gold.size()) + " gold vs " +
                                     std::to_string(pred.size()) + " predicted sentences");
  for (std::size_t i = 0; i < gold.size(); ++i)
    if (gold[i].size() != pred[i].size())
      raise(Errc::length_mismatch, "sentence " + std::to_string(i + 1) + ": " +
                                       std::to_string(gold[i].size()) + " gold vs " +
                                       std::to_string(pred[i].size()) + " predicted tokens");
}

}  // namespace

double uas(std::span<const SentenceHeads> gold, std::span<const SentenceHeads> pred) {
  check_aligned(gold, pred);
  if (gold.empty()) raise(Errc::empty_corpus, "no sentences to score");
  std::size_t tokens = 0;
  std::size_t hits = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    tokens += gold[i].size();
    for (std::size_t t = 0; t < gold[i].size(); ++t) hits += gold[i][t] == pred[i][t];
  }
  if (tokens == 0) raise(Errc::empty_corpus, "no tokens to score");
  return static_cast<double>(hits) / static_cast<double>(tokens);
}

double exact_match(std::span<const SentenceHeads> gold, std::span<const SentenceHeads> pred) {
  check_aligned(gold, pred);
  if (gold.empty()) raise(Errc::empty_corpus, "no sentences to score");
  std::size_t hits = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) hits += gold[i] == pred[i];
  return static_cast<double>(hits) / static_cast<double>(gold.size());
}

double relative_delta(double unconstrained, double constrained) {
  if (unconstrained == 0.0) raise(Errc::zero_baseline, "unconstrained score is zero");
  return (constrained - unconstrained) / unconstrained;
}

EvalReport evaluate(std::span<const SentenceHeads> gold,
                    std::span<const SentenceHeads> pred_constrained,
                    std::span<const SentenceHeads> pred_unconstrained) {
  EvalReport r;
  r.sentences = gold.size();
  for (const SentenceHeads& s : gold) r.tokens += s.size();
  r.malformed_rate_unconstrained = malformed_rate(pred_unconstrained);
  r.malformed_rate_constrained = malformed_rate(pred_constrained);
  r.uas_unconstrained = uas(gold, pred_unconstrained);
  r.uas_constrained = uas(gold, pred_constrained);
  r.exact_match_unconstrained = exact_match(gold, pred_unconstrained);
  r.exact_match_constrained = exact_match(gold, pred_constrained);
  // NaN instead of zero_baseline so a report always comes back whole.
  r.rel_delta_uas = r.uas_unconstrained == 0.0
                        ? std::nan("")
                        : relative_delta(r.uas_unconstrained, r.uas_constrained);
  r.rel_delta_exact = r.exact_match_unconstrained == 0.0
                          ? std::nan("")
                          : relative_delta(r.exact_match_unconstrained, r.exact_match_constrained);
  return r;
}

namespace {

std::string six(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

std::string format_report(const EvalReport& r) {
  std::string out;
  out += "sentences " + std::to_string(r.sentences) + "\n";
  out += "tokens " + std::to_string(r.tokens) + "\n";
  out += "malformed_rate_unconstrained " + six(r.malformed_rate_unconstrained) + "\n";
  out += "malformed_rate_constrained " + six(r.malformed_rate_constrained) + "\n";
  out += "uas_unconstrained " + six(r.uas_unconstrained) + "\n";
  out += "uas_constrained " + six(r.uas_constrained) + "\n";
  out += "exact_match_unconstrained " + six(r.exact_match_unconstrained) + "\n";
  out += "exact_match_constrained " + six(r.exact_match_constrained) + "\n";
  out += "rel_delta_uas " + six(r.rel_delta_uas) + "\n";
  out += "rel_delta_exact " + six(r.rel_delta_exact) + "\n";
  return out;
}

std::string format_report_csv(const EvalReport& r) {
  std::string out =
      "sentences,tokens,malformed_rate_unconstrained,malformed_rate_constrained,"
      "uas_unconstrained,uas_constrained,exact_match_unconstrained,"
      "exact_match_constrained,rel_delta_uas,rel_delta_exact\n";
  out += std::to_string(r.sentences) + "," + std::to_string(r.tokens) + "," +
         six(r.malformed_rate_unconstrained) + "," + six(r.malformed_rate_constrained) + "," +
         six(r.uas_unconstrained) + "," + six(r.uas_constrained) + "," +
         six(r.exact_match_unconstrained) + "," + six(r.exact_match_constrained) + "," +
         six(r.rel_delta_uas) + "," + six(r.rel_delta_exact) + "\n";
  return out;
}

}  // namespace arborist
