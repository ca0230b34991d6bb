#include "arborist/error.hpp"

namespace arborist {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::edge_into_root: return "edge_into_root";
    case Errc::self_loop: return "self_loop";
    case Errc::non_finite_weight: return "non_finite_weight";
    case Errc::unknown_edge_id: return "unknown_edge_id";
    case Errc::root_has_no_incoming: return "root_has_no_incoming";
    case Errc::no_incoming_edge: return "no_incoming_edge";
    case Errc::node_not_in_cycle: return "node_not_in_cycle";
    case Errc::not_a_cycle: return "not_a_cycle";
    case Errc::no_enter_edge: return "no_enter_edge";
    case Errc::multiple_enter_edges: return "multiple_enter_edges";
    case Errc::no_arborescence: return "no_arborescence";
    case Errc::not_a_root_edge: return "not_a_root_edge";
    case Errc::no_feasible_removal: return "no_feasible_removal";
    case Errc::no_dependency_tree: return "no_dependency_tree";
    case Errc::too_large: return "too_large";
    case Errc::empty_corpus: return "empty_corpus";
    case Errc::length_mismatch: return "length_mismatch";
    case Errc::zero_baseline: return "zero_baseline";
    case Errc::parse_error: return "parse_error";
    case Errc::precondition: return "precondition";
  }
  return "unknown";
}

void raise(Errc code, const std::string& what) {
  throw Error(code, std::string(errc_name(code)) + ": " + what);
}

}  // namespace arborist
