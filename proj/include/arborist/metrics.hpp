#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "arborist/error.hpp"

namespace arborist {

// heads[i] is the head of token i+1; 0 means the root, kMissingHead means
// the decoder emitted no head for it.
inline constexpr int kMissingHead = -1;
using SentenceHeads = std::vector<int>;

// Malformed = not a tree: anything but exactly one root attachment, or a
// missing head, an out-of-range head, a self head, or a cycle.
bool is_malformed(const SentenceHeads& heads);

double malformed_rate(std::span<const SentenceHeads> preds);  // empty_corpus

// Fraction of correctly attached tokens over all tokens. The artificial
// root is not a token, so it never enters the denominator.
double uas(std::span<const SentenceHeads> gold, std::span<const SentenceHeads> pred);

double exact_match(std::span<const SentenceHeads> gold, std::span<const SentenceHeads> pred);

// (constrained - unconstrained) / unconstrained. zero_baseline when the
// unconstrained score is 0.
double relative_delta(double unconstrained, double constrained);

struct EvalReport {
  std::size_t sentences = 0;
  std::size_t tokens = 0;
  double malformed_rate_unconstrained = 0.0;
  double malformed_rate_constrained = 0.0;
  double uas_unconstrained = 0.0;
  double uas_constrained = 0.0;
  double exact_match_unconstrained = 0.0;
  double exact_match_constrained = 0.0;
  double rel_delta_uas = 0.0;
  double rel_delta_exact = 0.0;
};

EvalReport evaluate(std::span<const SentenceHeads> gold,
                    std::span<const SentenceHeads> pred_constrained,
                    std::span<const SentenceHeads> pred_unconstrained);

// key<space>value per line, fields in declaration order, 6 decimal places.
std::string format_report(const EvalReport& r);

// Single CSV row with header, same fields and precision.
std::string format_report_csv(const EvalReport& r);

}  // namespace arborist
