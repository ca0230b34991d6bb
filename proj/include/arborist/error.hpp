#pragma once

#include <stdexcept>
#include <string>

namespace arborist {

// Every failure the library reports, as a stable code that callers can
// switch on. Messages are for humans; codes are the contract.
enum class Errc {
  edge_into_root,
  self_loop,
  non_finite_weight,
  unknown_edge_id,
  root_has_no_incoming,
  no_incoming_edge,
  node_not_in_cycle,
  not_a_cycle,
  no_enter_edge,
  multiple_enter_edges,
  no_arborescence,
  not_a_root_edge,
  no_feasible_removal,
  no_dependency_tree,
  too_large,
  empty_corpus,
  length_mismatch,
  zero_baseline,
  parse_error,
  precondition,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void raise(Errc code, const std::string& what);

}  // namespace arborist
