// exact.hpp — exact optimum solutions for desk-scale instances.
//
// Branch and bound over subsets of the candidate links. Branching always
// targets a violated necessity: while some vertex is uncovered, any feasible
// solution must pick a link incident to it; once everything is covered but
// some chord of the cycle is still uncrossed, any feasible solution must
// pick a link crossing that chord. Enumerating, for one such requirement,
// the choices "smallest satisfying link, second-smallest after banning the
// first, ..." partitions the remaining feasible sets, so the search is
// complete. Pruning is by a cheap additive lower bound and never discards a
// branch that could still tie the incumbent, which lets the search report
// the lexicographically smallest optimal witness.
#pragma once

#include <algorithm>
#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "feasibility.hpp"
#include "instance.hpp"
#include "rational.hpp"

namespace vca {

// How the next uncovered vertex is chosen: lowest label, or the one with the
// fewest available incident links (fail-first). Both are complete.
enum class BranchPolicy { smallest_vertex, fewest_options };

struct BnBConfig {
  long long node_budget = 50'000'000;
  long long time_budget_ms = 0;  // 0 = unlimited
  BranchPolicy policy = BranchPolicy::smallest_vertex;
};

struct ExactResult {
  int size{0};
  LinkSet witness;
  long long nodes{0};
};

namespace detail {

class ExactSearch {
 public:
  ExactSearch(const Instance& inst, const BnBConfig& cfg)
      : inst_(inst), cfg_(cfg), n_(inst.n()),
        m_(inst.link_count()),
        banned_(static_cast<std::size_t>(inst.link_count()), 0),
        cover_count_(static_cast<std::size_t>(inst.n()) + 1, 0),
        incident_(static_cast<std::size_t>(inst.n()) + 1) {
    if (cfg.node_budget < 1)
      throw FormatError("exact search: node budget must be positive");
    if (cfg.time_budget_ms < 0)
      throw FormatError("exact search: time budget must be nonnegative");
    for (int i = 0; i < m_; ++i) {
      const Chord& c = inst.links()[static_cast<std::size_t>(i)];
      incident_[static_cast<std::size_t>(c.a)].push_back(i);
      incident_[static_cast<std::size_t>(c.b)].push_back(i);
    }
    uncovered_ = n_;
    start_ = std::chrono::steady_clock::now();
  }

  ExactResult run() {
    // Incumbent: a pruned minimal solution, cheap and already <= n - 2.
    const LinkSet pruned = prune_minimal(LinkSet::full(inst_));
    best_size_ = pruned.size();
    best_indices_ = pruned.indices();
    visit();
    ExactResult result;
    result.size = best_size_;
    result.witness = LinkSet::from_indices(inst_, best_indices_);
    result.nodes = nodes_;
    return result;
  }

 private:
  void charge_node() {
    ++nodes_;
    if (nodes_ > cfg_.node_budget)
      throw BudgetExceededError("exact search exceeded its node budget of " +
                                std::to_string(cfg_.node_budget));
    if (cfg_.time_budget_ms > 0 && (nodes_ & 1023) == 0) {
      const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - start_);
      if (elapsed.count() > cfg_.time_budget_ms)
        throw BudgetExceededError("exact search exceeded its time budget of " +
                                  std::to_string(cfg_.time_budget_ms) + " ms");
    }
  }

  void include(int link) {
    chosen_.push_back(link);
    chosen_chords_.push_back(inst_.links()[static_cast<std::size_t>(link)]);
    for (int v : {chosen_chords_.back().a, chosen_chords_.back().b})
      if (++cover_count_[static_cast<std::size_t>(v)] == 1) --uncovered_;
  }

  void exclude_last() {
    for (int v : {chosen_chords_.back().a, chosen_chords_.back().b})
      if (--cover_count_[static_cast<std::size_t>(v)] == 0) ++uncovered_;
    chosen_.pop_back();
    chosen_chords_.pop_back();
  }

  int pick_vertex() const {
    int best_v = 0;
    std::size_t best_options = 0;
    for (int v = 1; v <= n_; ++v) {
      if (cover_count_[static_cast<std::size_t>(v)] > 0) continue;
      if (cfg_.policy == BranchPolicy::smallest_vertex) return v;
      std::size_t options = 0;
      for (int i : incident_[static_cast<std::size_t>(v)])
        if (!banned_[static_cast<std::size_t>(i)]) ++options;
      if (best_v == 0 || options < best_options) {
        best_v = v;
        best_options = options;
      }
    }
    return best_v;
  }

  void offer_candidate() {
    std::vector<int> sorted = chosen_;
    std::sort(sorted.begin(), sorted.end());
    const int size = static_cast<int>(sorted.size());
    if (size < best_size_ || (size == best_size_ && sorted < best_indices_)) {
      best_size_ = size;
      best_indices_ = std::move(sorted);
    }
  }

  void visit() {
    charge_node();
    const int size = static_cast<int>(chosen_.size());

    std::optional<Chord> uncrossed;
    if (uncovered_ == 0) {
      const FeasibilityReport report =
          is_feasible_crossing(n_, chosen_chords_);
      if (report.feasible) {
        // Supersets are strictly larger, so this branch is done.
        offer_candidate();
        return;
      }
      uncrossed = report.uncrossed_chord;
    }

    // Additive lower bound on links still needed: each new link covers at
    // most two uncovered vertices; an infeasible set needs at least one
    // more; any feasible set has at least two links.
    int needed = (uncovered_ + 1) / 2;
    needed = std::max(needed, 1);
    needed = std::max(needed, 2 - size);
    if (size + needed > best_size_) return;

    // Candidate links for the violated requirement, ascending.
    std::vector<int> options;
    if (uncovered_ > 0) {
      const int v = pick_vertex();
      for (int i : incident_[static_cast<std::size_t>(v)])
        if (!banned_[static_cast<std::size_t>(i)]) options.push_back(i);
    } else {
      for (int i = 0; i < m_; ++i)
        if (!banned_[static_cast<std::size_t>(i)] &&
            crosses(inst_.links()[static_cast<std::size_t>(i)], *uncrossed))
          options.push_back(i);
    }
    if (options.empty()) return;

    std::size_t newly_banned = 0;
    for (int link : options) {
      include(link);
      visit();
      exclude_last();
      banned_[static_cast<std::size_t>(link)] = 1;
      ++newly_banned;
    }
    for (std::size_t k = 0; k < newly_banned; ++k)
      banned_[static_cast<std::size_t>(options[k])] = 0;
  }

  const Instance& inst_;
  BnBConfig cfg_;
  int n_;
  int m_;
  std::vector<char> banned_;
  std::vector<int> cover_count_;
  std::vector<std::vector<int>> incident_;
  std::vector<int> chosen_;
  std::vector<Chord> chosen_chords_;
  int uncovered_{0};
  int best_size_{0};
  std::vector<int> best_indices_;
  long long nodes_{0};
  std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

// Minimum feasible subset of the candidate links, with the lexicographically
// smallest witness of that size. Deterministic given the configuration.
inline ExactResult exact_optimum(const Instance& inst,
                                 const BnBConfig& cfg = {}) {
  detail::ExactSearch search(inst, cfg);
  return search.run();
}

// Ground-truth oracle: enumerate all subsets in increasing size, lexicographic
// within each size, and return the first feasible one. Exponential; intended
// for cross-checking exact_optimum on small instances only.
inline ExactResult naive_optimum(const Instance& inst) {
  const int m = inst.link_count();
  long long examined = 0;
  for (int k = 0; k <= m; ++k) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    for (;;) {
      ++examined;
      std::vector<Chord> chords;
      chords.reserve(static_cast<std::size_t>(k));
      for (int i : idx)
        chords.push_back(inst.links()[static_cast<std::size_t>(i)]);
      if (is_feasible_crossing(inst.n(), chords).feasible) {
        ExactResult result;
        result.size = k;
        result.witness = LinkSet::from_indices(inst, idx);
        result.nodes = examined;
        return result;
      }
      // Advance to the next k-combination of [0, m).
      int pos = k - 1;
      while (pos >= 0 &&
             idx[static_cast<std::size_t>(pos)] == m - k + pos)
        --pos;
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
      for (int i = pos + 1; i < k; ++i)
        idx[static_cast<std::size_t>(i)] =
            idx[static_cast<std::size_t>(i - 1)] + 1;
    }
  }
  // The candidate set itself is feasible by construction, so unreachable.
  throw InfeasibleInputError("naive search found no feasible subset");
}

}  // namespace vca
