#include "arborist/decode.hpp"

#include <cstddef>
#include <cstdint>
#include <limits>
#include <utility>
#include <optional>
#include <string>
#include <vector>

namespace arborist {
namespace {

// An original edge as seen by a supernode, weight adjusted for every
// contraction it entered so far. src is the original source node.
struct Inst {
  EdgeId id;
  NodeId src;
  double w;
};

struct BestPair {
  EdgeId best = kNoEdge;
  double best_w = 0.0;
  EdgeId alt = kNoEdge;  // best among non-root sources
  double alt_w = 0.0;

  void consider(EdgeId id, double w, bool from_root) {
    if (best == kNoEdge || w > best_w || (w == best_w && id < best)) {
      best = id;
      best_w = w;
    }
    if (from_root) return;
    if (alt == kNoEdge || w > alt_w || (w == alt_w && id < alt)) {
      alt = id;
      alt_w = w;
    }
  }
};

// Iterative contract-and-stitch engine behind both decoders. Tokens and
// supernodes share one slot array; a union-find resolves original edge
// endpoints to their current slot. Supernode incoming lists keep the best
// original edge id per outside source slot with its adjusted weight, so
// unwinding only has to peel one offset per layer.
//
// Caches never go stale: a removal rewrites exactly one list, and a
// contraction only consumes lists of the nodes it swallows.
class Engine {
 public:
  Engine(const GraphView& v, bool constrained, const DecodeOptions& opt)
      : v_(v), g_(v.graph()), constrained_(constrained), opt_(opt) {}

  EdgeSelection run() {
    if (opt_.trace) opt_.trace->clear();
    init();
    sweep();
    if (constrained_) constrain();
    return unwind();
  }

 private:
  struct Member {
    NodeId slot;
    EdgeId edge;    // cycle edge entering this member
    double edge_w;  // its weight at the layer below
    double offset;  // cycle weight minus edge_w
  };
  struct Layer {
    NodeId supernode;
    std::vector<Member> members;
  };

  NodeId find(NodeId v) {
    while (up_[v] != v) {
      up_[v] = up_[up_[v]];
      v = up_[v];
    }
    return v;
  }

  NodeId head_slot(NodeId s) { return find(g_.edge(sel_[s]).src); }

  [[noreturn]] void infeasible(const std::string& what) {
    raise(constrained_ ? Errc::no_dependency_tree : Errc::no_arborescence, what);
  }

  void adopt(NodeId s) {
    sel_[s] = cache_[s].best;
    selw_[s] = cache_[s].best_w;
  }

  void recompute_cache(NodeId s) {
    BestPair p;
    if (s <= n_) {
      for (const InEdge& e : g_.incoming_packed(s)) {
        if (e.src == kRoot && (root_cut_[s] || !v_.allows_root(s))) continue;
        p.consider(e.id, e.weight, e.src == kRoot);
      }
    } else {
      for (const Inst& i : inst_[s]) p.consider(i.id, i.w, i.src == kRoot);
    }
    cache_[s] = p;
  }

  void init() {
    n_ = g_.token_count();
    slots_ = n_ + 1;
    live_.assign(slots_, 1);
    live_[kRoot] = 0;
    parent_.assign(slots_, kNoNode);
    up_.resize(slots_);
    for (NodeId s = 0; s < slots_; ++s) up_[s] = s;
    root_cut_.assign(slots_, 0);
    inst_.assign(slots_, {});
    sel_.assign(slots_, kNoEdge);
    selw_.assign(slots_, 0.0);
    cache_.assign(slots_, BestPair{});
    stamp_.assign(slots_, 0);
    spot_.assign(slots_, 0);
    epoch_ = 0;
    mark_.assign(slots_, 0);
    pass_ = 0;
    floor_ = 0;
    W_ = 0.0;
    for (NodeId v = 1; v <= n_; ++v) {
      recompute_cache(v);
      if (cache_[v].best == kNoEdge)
        infeasible("node " + std::to_string(v) + " has no usable incoming edge");
      adopt(v);
      W_ += selw_[v];
    }
  }

  NodeId new_slot() {
    NodeId c = slots_++;
    live_.push_back(1);
    parent_.push_back(kNoNode);
    up_.push_back(c);
    inst_.emplace_back();
    sel_.push_back(kNoEdge);
    selw_.push_back(0.0);
    cache_.push_back(BestPair{});
    stamp_.push_back(0);
    spot_.push_back(0);
    mark_.push_back(0);
    return c;
  }

  // Collapses the given slots into a fresh supernode. override_slot, when
  // set, contributes the hypothetical edge a scored removal would give it
  // instead of its current greedy pick.
  NodeId contract_members(const std::vector<NodeId>& members, NodeId override_slot,
                          EdgeId override_edge, double override_w) {
    NodeId c = new_slot();
    Layer L;
    L.supernode = c;
    L.members.reserve(members.size());
    double cycle_w = 0.0;
    double old_sum = 0.0;
    for (NodeId m : members) {
      Member mem;
      mem.slot = m;
      mem.edge = (m == override_slot) ? override_edge : sel_[m];
      mem.edge_w = (m == override_slot) ? override_w : selw_[m];
      mem.offset = 0.0;
      cycle_w += mem.edge_w;
      old_sum += selw_[m];
      L.members.push_back(mem);
    }
    for (Member& mem : L.members) mem.offset = cycle_w - mem.edge_w;

    // Merge before folding so dead edges resolve to c and drop out here.
    for (NodeId m : members) {
      live_[m] = 0;
      parent_[m] = c;
      up_[m] = c;
    }

    // Fold to one instance per live source slot, best weight then lowest
    // id. Every later reader wants per-source maxima only, and the cap
    // stops chained contractions from snowballing these lists.
    ++epoch_;
    std::vector<Inst>& out = inst_[c];
    auto add = [&](EdgeId id, NodeId src, double w) {
      NodeId at = find(src);
      if (at == c) return;
      if (stamp_[at] != epoch_) {
        stamp_[at] = epoch_;
        spot_[at] = out.size();
        out.push_back({id, src, w});
        return;
      }
      Inst& cur = out[spot_[at]];
      if (w > cur.w || (w == cur.w && id < cur.id)) cur = {id, src, w};
    };
    for (const Member& mem : L.members) {
      if (mem.slot <= n_) {
        for (const InEdge& e : g_.incoming_packed(mem.slot)) {
          if (e.src == kRoot && (root_cut_[mem.slot] || !v_.allows_root(mem.slot))) continue;
          add(e.id, e.src, e.weight + mem.offset);
        }
      } else {
        for (const Inst& i : inst_[mem.slot]) add(i.id, i.src, i.w + mem.offset);
        inst_[mem.slot] = {};
      }
    }

    recompute_cache(c);
    if (cache_[c].best == kNoEdge) infeasible("nothing reaches the contracted cycle");
    adopt(c);
    W_ += selw_[c] - old_sum;
    layers_.push_back(std::move(L));
    if (opt_.trace) ++opt_.trace->contractions;
    return c;
  }

  // Follows head links from s, contracting every selection cycle the walk
  // closes, and keeps going from each supernode until the chain reaches the
  // root or a slot some earlier walk already cleared. Marks at or below
  // floor_ count as unvisited.
  void resolve(NodeId s) {
    ++pass_;
    NodeId v = s;
    for (;;) {
      if (v == kRoot) return;
      if (mark_[v] == pass_) {
        std::vector<NodeId> loop;
        NodeId u = v;
        do {
          loop.push_back(u);
          u = head_slot(u);
        } while (u != v);
        v = contract_members(loop, kNoNode, kNoEdge, 0.0);
        continue;
      }
      if (mark_[v] > floor_) return;
      mark_[v] = pass_;
      v = head_slot(v);
    }
  }

  void sweep() {
    for (NodeId s = 1; s < slots_; ++s)
      if (live_[s]) resolve(s);
  }

  // Greedy weight after deleting every root edge into x, rebuilt from the
  // lists instead of the caches. Validation path only.
  std::optional<double> scratch_removal(NodeId x) {
    double sum = 0.0;
    for (NodeId s = 1; s < slots_; ++s) {
      if (!live_[s]) continue;
      BestPair p;
      if (s <= n_) {
        for (const InEdge& e : g_.incoming_packed(s)) {
          if (e.src == kRoot && (s == x || root_cut_[s] || !v_.allows_root(s))) continue;
          p.consider(e.id, e.weight, false);
        }
      } else {
        for (const Inst& i : inst_[s]) {
          if (s == x && i.src == kRoot) continue;
          p.consider(i.id, i.w, false);
        }
      }
      if (p.best == kNoEdge) return std::nullopt;
      sum += p.best_w;
    }
    return sum;
  }

  // Enforces the single root attachment. The selection is acyclic here and
  // after every step below, so it always names its root edges directly.
  void constrain() {
    for (;;) {
      std::vector<NodeId> sigma;
      for (NodeId s = 1; s < slots_; ++s)
        if (live_[s] && g_.edge(sel_[s]).src == kRoot) sigma.push_back(s);
      if (sigma.size() <= 1) return;

      ConstrainStep step;
      step.greedy_weight = W_;
      const std::size_t none = static_cast<std::size_t>(-1);
      std::size_t best_idx = none;
      for (NodeId s : sigma) {
        RemovalCandidate cand;
        cand.removed_edge = sel_[s];
        cand.target = s;
        cand.feasible = cache_[s].alt != kNoEdge;
        if (cand.feasible) cand.removal_weight = W_ - selw_[s] + cache_[s].alt_w;
        if (opt_.check_caches) {
          std::optional<double> scratch = scratch_removal(s);
          if (scratch.has_value() != cand.feasible)
            raise(Errc::precondition, "cached feasibility disagrees with rescan");
          cand.scratch_weight = scratch.value_or(std::numeric_limits<double>::quiet_NaN());
        }
        step.candidates.push_back(cand);
        if (!cand.feasible) continue;
        if (best_idx == none) {
          best_idx = step.candidates.size() - 1;
          continue;
        }
        const RemovalCandidate& cur = step.candidates[best_idx];
        if (cand.removal_weight > cur.removal_weight ||
            (cand.removal_weight == cur.removal_weight && cand.removed_edge < cur.removed_edge))
          best_idx = step.candidates.size() - 1;
      }
      if (best_idx == none) {
        if (opt_.trace) opt_.trace->constrain_steps.push_back(std::move(step));
        raise(Errc::no_dependency_tree, "every root edge removal orphans its target");
      }
      step.chosen = best_idx;
      NodeId x = step.candidates[best_idx].target;
      EdgeId alt = cache_[x].alt;
      double alt_w = cache_[x].alt_w;

      // Would the swap close a cycle? Walk the head chain from the new
      // source; the acyclic selection guarantees it ends at the root or x.
      std::vector<NodeId> members;
      NodeId v = find(g_.edge(alt).src);
      while (v != kRoot && v != x) {
        members.push_back(v);
        v = head_slot(v);
      }
      if (v == x) {
        // Contract that cycle with the root edges still in place; they
        // turn into enter edges and stay available one level up.
        step.reduction = true;
        members.insert(members.begin(), x);
        contract_members(members, x, alt, alt_w);
        // Chains that ran through the swallowed slots now pass through the
        // supernode, so cleared marks from earlier walks no longer vouch
        // for them.
        floor_ = pass_;
        sweep();
        if (opt_.trace) ++opt_.trace->reduction_steps;
      } else {
        if (x <= n_) {
          root_cut_[x] = 1;
        } else {
          std::erase_if(inst_[x], [&](const Inst& i) { return i.src == kRoot; });
        }
        W_ -= selw_[x];
        recompute_cache(x);
        adopt(x);
        W_ += selw_[x];
      }
      if (opt_.trace) opt_.trace->constrain_steps.push_back(std::move(step));
    }
  }

  EdgeSelection unwind() {
    std::vector<EdgeId> pick(slots_, kNoEdge);
    std::vector<double> pickw(slots_, 0.0);
    double running = 0.0;
    for (NodeId s = 1; s < slots_; ++s) {
      if (!live_[s]) continue;
      pick[s] = sel_[s];
      pickw[s] = selw_[s];
      running += selw_[s];
    }
    if (opt_.trace) opt_.trace->level_weights.push_back(running);

    for (auto it = layers_.rbegin(); it != layers_.rend(); ++it) {
      const Layer& L = *it;
      EdgeId e = pick[L.supernode];
      double ew = pickw[L.supernode];

      // The entered member is the child of the supernode on the ancestor
      // chain of the edge's original target.
      NodeId j = g_.edge(e).dst;
      while (parent_[j] != L.supernode) {
        if (parent_[j] == kNoNode) raise(Errc::precondition, "stitch lost its entrance");
        j = parent_[j];
      }

      double before = running;
      running -= ew;
      for (const Member& m : L.members) {
        if (m.slot == j) {
          pick[j] = e;
          pickw[j] = ew - m.offset;
          running += pickw[j];
        } else {
          pick[m.slot] = m.edge;
          pickw[m.slot] = m.edge_w;
          running += m.edge_w;
        }
      }
      if (opt_.trace) {
        opt_.trace->stitches.push_back({before, running});
        opt_.trace->level_weights.push_back(running);
      }
    }

    EdgeSelection out;
    out.chosen.assign(n_ + 1, kNoEdge);
    for (NodeId v = 1; v <= n_; ++v) {
      out.chosen[v] = pick[v];
      out.total_weight += g_.edge(pick[v]).weight;
    }
    if (opt_.trace) opt_.trace->final_weight = out.total_weight;
    return out;
  }

  const GraphView& v_;
  const Graph& g_;
  bool constrained_;
  DecodeOptions opt_;

  NodeId n_ = 0;
  NodeId slots_ = 0;
  std::vector<std::uint8_t> live_;
  std::vector<NodeId> parent_;  // contraction forest, kNoNode at the top
  std::vector<NodeId> up_;      // path compressed membership
  std::vector<std::uint8_t> root_cut_;
  std::vector<std::vector<Inst>> inst_;
  std::vector<EdgeId> sel_;
  std::vector<double> selw_;
  std::vector<BestPair> cache_;
  std::vector<std::uint32_t> stamp_;  // per-slot epoch of the fold above
  std::vector<std::size_t> spot_;
  std::uint32_t epoch_ = 0;
  std::vector<std::uint32_t> mark_;  // walk stamps for resolve
  std::uint32_t pass_ = 0;
  std::uint32_t floor_ = 0;
  std::vector<Layer> layers_;
  double W_ = 0.0;  // selection weight over live slots
};

}  // namespace

EdgeSelection decode_mwa(const GraphView& v, const DecodeOptions& opt) {
  return Engine(v, false, opt).run();
}

EdgeSelection decode_mwa(const Graph& g, const DecodeOptions& opt) {
  return decode_mwa(GraphView(g), opt);
}

EdgeSelection decode_dependency_tree(const GraphView& v, const DecodeOptions& opt) {
  return Engine(v, true, opt).run();
}

EdgeSelection decode_dependency_tree(const Graph& g, const DecodeOptions& opt) {
  return decode_dependency_tree(GraphView(g), opt);
}

RootEdgeCandidate best_root_edge_removal(const GraphView& v, const GreedyResult& greedy) {
  if (greedy.cycle) raise(Errc::precondition, "greedy selection must be acyclic");
  const Graph& g = v.graph();
  std::optional<RootEdgeCandidate> best;
  std::size_t root_edges = 0;
  for (NodeId j = 1; j < g.node_count(); ++j) {
    EdgeId id = greedy.selection.chosen[j];
    if (id == kNoEdge || g.edge(id).src != kRoot) continue;
    ++root_edges;
    std::optional<Edge> alt = best_incoming(v, j, /*exclude_root=*/true);
    if (!alt) continue;
    RootEdgeCandidate cand;
    cand.edge = g.edge(id);
    cand.target = j;
    cand.removal_weight = greedy.selection.total_weight - g.edge(id).weight + alt->weight;
    if (!best || cand.removal_weight > best->removal_weight ||
        (cand.removal_weight == best->removal_weight && cand.edge.id < best->edge.id))
      best = cand;
  }
  if (root_edges < 2) raise(Errc::precondition, "need at least two root edges to remove one");
  if (!best) raise(Errc::no_feasible_removal, "every removal orphans its target");
  return *best;
}

}  // namespace arborist
