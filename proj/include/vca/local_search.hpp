// local_search.hpp — utility, criticality, and the local-search solvers.
//
// The utility of a singleton-free link family F is
//     U(F) = -|F| + Σ over circle components J of (|V(J)| - 3),
// the number of vertices covered beyond three per component, minus the links
// spent. F is (α, N_max)-critical when no addition K of at most N_max links
// keeps F∪K singleton-free and gains utility at least (1-α) times the number
// of newly covered vertices. The basic algorithm grows F greedily until
// critical and then completes it minimally; the refined variant runs the
// growth phase for an ascending schedule of α values before the one
// completion. All ratio comparisons are exact rational comparisons.
#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bitset.hpp"
#include "circle.hpp"
#include "errors.hpp"
#include "feasibility.hpp"
#include "instance.hpp"
#include "rational.hpp"

namespace vca {

struct SearchParams {
  Rational alpha{3, 4};
  int n_max{8};
  // Ascending schedule for the refined algorithm; unused by local_search.
  std::vector<Rational> alphas;
  // Guardrails: candidate sets examined per iteration, and an optional
  // wall-clock budget for a whole solver run (0 = unlimited). Exceeding
  // either aborts with CapExceededError: the approximation guarantees need
  // true criticality, so silently stopping early is not an option.
  long long candidate_cap{200'000'000};
  long long time_budget_ms{0};
};

struct SearchIteration {
  std::vector<Chord> accepted;  // the improving set K
  long long utility_before{0};
  long long utility_after{0};
  int new_vertices{0};
  int pass{0};  // index into the α schedule (always 0 for local_search)
};

struct SearchTrace {
  std::vector<SearchIteration> iterations;
  std::vector<Chord> final_f;
  std::vector<Chord> completion;
  int passes{1};
  long long candidates_examined{0};
};

struct SearchResult {
  LinkSet f;
  LinkSet q;
  SearchTrace trace;
  std::vector<std::string> warnings;
};

// The smallest N_max for which the connect-budget analysis behind the LP
// bound applies at a given α: ⌈(5-2α)/(2α-1)⌉ + 1.
inline Int n_max_threshold(const Rational& alpha) {
  return ceil_rat(Rational(5 - 2 * alpha) / Rational(2 * alpha - 1)) + 1;
}

inline void check_alpha(const Rational& alpha) {
  if (!(alpha > Rational(1, 2) && alpha <= 1))
    throw AlphaRangeError("alpha must lie in (1/2, 1], got " +
                          format_rational(alpha));
}

// Validates hard parameter constraints and returns a human-readable warning
// when n_max is below the analysis threshold for the smallest α in use (the
// algorithm still runs and its size bound still holds; only the LP-based
// lower bound loses its justification, and certify() omits it).
inline std::optional<std::string> validate_search_params(
    const SearchParams& params, bool refined = false) {
  if (params.n_max < 1) throw FormatError("n_max must be at least 1");
  if (params.candidate_cap < 1) throw FormatError("candidate cap must be positive");
  if (refined) {
    if (params.alphas.empty())
      throw AlphaRangeError("refined search needs a nonempty alpha schedule");
    for (std::size_t i = 0; i < params.alphas.size(); ++i) {
      check_alpha(params.alphas[i]);
      if (i > 0 && !(params.alphas[i - 1] < params.alphas[i]))
        throw AlphaRangeError("alpha schedule must be strictly ascending");
    }
  } else {
    check_alpha(params.alpha);
  }
  const Rational smallest = refined ? params.alphas.front() : params.alpha;
  const Int needed = n_max_threshold(smallest);
  if (Int(params.n_max) < needed)
    return "n_max=" + std::to_string(params.n_max) +
           " is below the analysis threshold " + needed.str() +
           " for alpha=" + format_rational(smallest) +
           "; the size guarantee still holds but the LP lower bound will not"
           " be certified";
  return std::nullopt;
}

inline long long utility(const LinkSet& f) {
  if (f.empty()) return 0;
  ComponentPartition part = components(f);
  if (!part.singletons.empty())
    throw SingletonError("utility undefined: link " +
                         to_string(part.singletons.front()) +
                         " crosses nothing in the family");
  long long u = -static_cast<long long>(f.size());
  for (const CircleComponent& comp : part.components)
    u += static_cast<long long>(comp.covered.size()) - 3;
  return u;
}

// Gain of adding K to F: (U(F∪K) - U(F), |V(F∪K) \ V(F)|).
inline std::pair<long long, int> utility_gain(const LinkSet& f,
                                              const LinkSet& k) {
  LinkSet fk = f.unite(k);
  const long long gain = utility(fk) - utility(f);
  VertexList before = f.covered_vertices();
  VertexList after = fk.covered_vertices();
  std::vector<int> fresh;
  std::set_difference(after.begin(), after.end(), before.begin(), before.end(),
                      std::back_inserter(fresh));
  return {gain, static_cast<int>(fresh.size())};
}

namespace detail {

// Enumerates candidate improvement sets for a fixed F as connected subsets
// of the extended link graph on S\F, whose edges join links that cross or
// that share an endpoint outside V(F). This is complete: decomposing any
// improving K into classes of that relation keeps the newly-covered-vertex
// counts exactly additive (a shared new vertex would merge the classes) and
// makes the per-class gains sum to at least the joint gain (classes can only
// overlap on vertices already covered by F, which the per-class utilities
// count once each), so whenever K qualifies some single class qualifies too.
//
// Candidates are evaluated with a rollback union-find over atoms = K links
// plus F components, merged along crossings only, so gain evaluation is O(1)
// per candidate and push/pop is near-constant.
class ImprovementSearch {
 public:
  using Clock = std::chrono::steady_clock;

  ImprovementSearch(const Instance& inst, const std::vector<int>& f_indices,
                    const Rational& alpha, int n_max, long long candidate_cap,
                    std::optional<Clock::time_point> deadline)
      : inst_(inst),
        n_max_(n_max),
        candidate_cap_(candidate_cap),
        deadline_(deadline) {
    const int m = inst.link_count();
    const int n = inst.n();
    if (m > Bits256::capacity || n > Bits256::capacity)
      throw CapExceededError(
          "instance beyond desk scale for the search engine (at most 256 "
          "links and 256 vertices)");
    check_alpha(alpha);
    if (denominator(alpha) > Int(1) << 40)
      throw CapExceededError(
          "alpha denominator beyond desk scale for exact 64-bit ratio tests");
    alpha_num_ = numerator(alpha).convert_to<long long>();
    alpha_den_ = denominator(alpha).convert_to<long long>();

    const std::vector<Chord>& links = inst.links();
    cross_.assign(static_cast<std::size_t>(m), Bits256{});
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (crosses(links[static_cast<std::size_t>(i)],
                    links[static_cast<std::size_t>(j)])) {
          cross_[static_cast<std::size_t>(i)].set(j);
          cross_[static_cast<std::size_t>(j)].set(i);
        }

    for (int i : f_indices) f_mask_.set(i);
    usable_ = andnot(Bits256::prefix(m), f_mask_);

    // Components of F with their covered-vertex masks and contributions.
    std::vector<Chord> f_links;
    for (int i : f_indices) f_links.push_back(links[static_cast<std::size_t>(i)]);
    std::vector<int> labels;
    const int classes = crossing_components(f_links, labels);
    comp_vmask_.assign(static_cast<std::size_t>(classes), Bits256{});
    for (std::size_t pos = 0; pos < f_links.size(); ++pos) {
      comp_vmask_[static_cast<std::size_t>(labels[pos])].set(f_links[pos].a - 1);
      comp_vmask_[static_cast<std::size_t>(labels[pos])].set(f_links[pos].b - 1);
    }
    comp_contrib_.assign(static_cast<std::size_t>(classes), 0);
    for (int c = 0; c < classes; ++c) {
      comp_contrib_[static_cast<std::size_t>(c)] =
          comp_vmask_[static_cast<std::size_t>(c)].count() - 3;
      vf_mask_ |= comp_vmask_[static_cast<std::size_t>(c)];
    }

    // For each usable link: which F components it crosses, plus the extended
    // adjacency (crossing, or a shared endpoint outside V(F)).
    fcross_.assign(static_cast<std::size_t>(m), {});
    for (int c = 0; c < classes; ++c) {
      Bits256 members;
      for (std::size_t pos = 0; pos < f_links.size(); ++pos)
        if (labels[pos] == c) members.set(*inst.link_index(f_links[pos]));
      usable_.for_each([&](int i) {
        if (cross_[static_cast<std::size_t>(i)].intersects(members))
          fcross_[static_cast<std::size_t>(i)].push_back(c);
      });
    }
    ext_adj_ = cross_;
    for (int v = 1; v <= n; ++v) {
      if (vf_mask_.test(v - 1)) continue;
      std::vector<int> here;
      usable_.for_each([&](int i) {
        const Chord& c = links[static_cast<std::size_t>(i)];
        if (c.a == v || c.b == v) here.push_back(i);
      });
      for (std::size_t x = 0; x < here.size(); ++x)
        for (std::size_t y = x + 1; y < here.size(); ++y) {
          ext_adj_[static_cast<std::size_t>(here[x])].set(here[y]);
          ext_adj_[static_cast<std::size_t>(here[y])].set(here[x]);
        }
    }
    for (auto& row : ext_adj_) row &= usable_;

    // Union-find atoms: links 0..m-1, then F components m..m+classes-1.
    const int atoms = m + classes;
    parent_.resize(static_cast<std::size_t>(atoms));
    for (int a = 0; a < atoms; ++a) parent_[static_cast<std::size_t>(a)] = a;
    root_links_.assign(static_cast<std::size_t>(atoms), 0);
    root_fsub_.assign(static_cast<std::size_t>(atoms), 0);
    root_fcnt_.assign(static_cast<std::size_t>(atoms), 0);
    root_atoms_.assign(static_cast<std::size_t>(atoms), 1);
    root_vmask_.assign(static_cast<std::size_t>(atoms), Bits256{});
    for (int c = 0; c < classes; ++c) {
      root_vmask_[static_cast<std::size_t>(m + c)] =
          comp_vmask_[static_cast<std::size_t>(c)];
      root_fsub_[static_cast<std::size_t>(m + c)] =
          comp_contrib_[static_cast<std::size_t>(c)];
      root_fcnt_[static_cast<std::size_t>(m + c)] = 1;
    }
    link_vmask_.assign(static_cast<std::size_t>(m), Bits256{});
    for (int i = 0; i < m; ++i) {
      link_vmask_[static_cast<std::size_t>(i)].set(links[static_cast<std::size_t>(i)].a - 1);
      link_vmask_[static_cast<std::size_t>(i)].set(links[static_cast<std::size_t>(i)].b - 1);
    }
  }

  // Runs the enumeration; returns the first qualifying K in canonical order
  // (roots ascending, then depth-first with ascending extensions). On
  // success the qualifying K is left pushed, so last_gain() and
  // last_new_vertices() read off its exact evaluation.
  std::optional<std::vector<int>> run() {
    std::optional<std::vector<int>> found;
    usable_.for_each([&](int r) {
      if (found) return;
      const Bits256 low = Bits256::prefix(r + 1);
      push(r);
      bool hit = evaluate();
      if (!hit && k_size_ < n_max_) {
        const Bits256 frontier =
            andnot(ext_adj_[static_cast<std::size_t>(r)], low);
        hit = grow(frontier, Bits256{}, low);
      }
      if (hit)
        found = current_k();
      else
        pop();
    });
    return found;
  }

  long long candidates_examined() const { return candidates_; }
  // Gain and new-vertex count of the currently pushed K (valid right after
  // a successful run()); used to keep the trace exact without recomputation.
  long long last_gain() const { return gain(); }
  int last_new_vertices() const { return new_count_; }

 private:
  // Depth-first extension of the current K. `frontier` holds the links
  // adjacent to K in the extended graph (with indices below the root masked
  // out); `excluded` holds links tried earlier at this level or above, which
  // must not reappear in this subtree — that discipline makes every
  // connected candidate set visited exactly once. On a hit the qualifying
  // links stay pushed.
  bool grow(const Bits256& frontier, Bits256 excluded, const Bits256& low) {
    bool hit = false;
    frontier.for_each([&](int e) {
      if (hit || excluded.test(e) || k_mask_.test(e)) return;
      push(e);
      bool sub = evaluate();
      if (!sub && k_size_ < n_max_) {
        const Bits256 next = andnot(
            frontier | andnot(ext_adj_[static_cast<std::size_t>(e)], low),
            excluded);
        sub = grow(next, excluded, low);
      }
      if (sub) {
        hit = true;
        return;
      }
      pop();
      excluded.set(e);
    });
    return hit;
  }

  std::vector<int> current_k() const {
    std::vector<int> out;
    k_mask_.for_each([&](int i) { out.push_back(i); });
    return out;
  }

  long long gain() const { return -k_size_ + k_sum_ - f_sub_; }

  // Candidate test: F∪K singleton-free and gain ≥ (1-α)·new, exactly.
  bool evaluate() {
    ++candidates_;
    if (candidates_ > candidate_cap_)
      throw CapExceededError(
          "candidate cap exceeded in improvement search (cap " +
          std::to_string(candidate_cap_) + ")");
    if (deadline_ && (candidates_ & 2047) == 0 &&
        Clock::now() > *deadline_)
      throw CapExceededError("wall-clock budget exceeded in improvement search");
    if (invalid_ > 0) return false;
    return gain() * alpha_den_ >=
           (alpha_den_ - alpha_num_) * static_cast<long long>(new_count_);
  }

  int find(int x) const {
    while (parent_[static_cast<std::size_t>(x)] != x)
      x = parent_[static_cast<std::size_t>(x)];
    return x;
  }

  long long root_term(int r) const {
    return root_links_[static_cast<std::size_t>(r)] > 0
               ? root_vmask_[static_cast<std::size_t>(r)].count() - 3
               : 0;
  }
  // A root consisting of a lone link atom is a circle-graph singleton of
  // F∪K: the link crosses nothing (merges happen along crossings only).
  bool root_invalid(int r) const {
    return root_links_[static_cast<std::size_t>(r)] == 1 &&
           root_fcnt_[static_cast<std::size_t>(r)] == 0;
  }

  struct UnionRecord {
    int child;
    int parent;
    int parent_links;
    long long parent_fsub;
    int parent_fcnt;
    int parent_atoms;
    Bits256 parent_vmask;
  };
  struct Frame {
    int link;
    int unions;
    Bits256 added_new;  // newly covered vertex bits contributed by this link
  };

  void unite(int x, int y) {
    int rx = find(x), ry = find(y);
    if (rx == ry) return;
    if (root_atoms_[static_cast<std::size_t>(rx)] <
        root_atoms_[static_cast<std::size_t>(ry)])
      std::swap(rx, ry);
    // rx absorbs ry.
    k_sum_ -= root_term(rx) + root_term(ry);
    if (root_links_[static_cast<std::size_t>(rx)] > 0)
      f_sub_ -= root_fsub_[static_cast<std::size_t>(rx)];
    if (root_links_[static_cast<std::size_t>(ry)] > 0)
      f_sub_ -= root_fsub_[static_cast<std::size_t>(ry)];
    invalid_ -= (root_invalid(rx) ? 1 : 0) + (root_invalid(ry) ? 1 : 0);

    undo_.push_back({ry, rx, root_links_[static_cast<std::size_t>(rx)],
                     root_fsub_[static_cast<std::size_t>(rx)],
                     root_fcnt_[static_cast<std::size_t>(rx)],
                     root_atoms_[static_cast<std::size_t>(rx)],
                     root_vmask_[static_cast<std::size_t>(rx)]});
    parent_[static_cast<std::size_t>(ry)] = rx;
    root_links_[static_cast<std::size_t>(rx)] +=
        root_links_[static_cast<std::size_t>(ry)];
    root_fsub_[static_cast<std::size_t>(rx)] +=
        root_fsub_[static_cast<std::size_t>(ry)];
    root_fcnt_[static_cast<std::size_t>(rx)] +=
        root_fcnt_[static_cast<std::size_t>(ry)];
    root_atoms_[static_cast<std::size_t>(rx)] +=
        root_atoms_[static_cast<std::size_t>(ry)];
    root_vmask_[static_cast<std::size_t>(rx)] |=
        root_vmask_[static_cast<std::size_t>(ry)];

    k_sum_ += root_term(rx);
    if (root_links_[static_cast<std::size_t>(rx)] > 0)
      f_sub_ += root_fsub_[static_cast<std::size_t>(rx)];
    invalid_ += root_invalid(rx) ? 1 : 0;
  }

  void push(int e) {
    Frame frame{e, 0, Bits256{}};
    const std::size_t undo_before = undo_.size();

    // Activate the link atom.
    root_links_[static_cast<std::size_t>(e)] = 1;
    root_vmask_[static_cast<std::size_t>(e)] =
        link_vmask_[static_cast<std::size_t>(e)];
    k_sum_ += root_term(e);
    invalid_ += root_invalid(e) ? 1 : 0;
    ++k_size_;

    Bits256 fresh = andnot(link_vmask_[static_cast<std::size_t>(e)], vf_mask_);
    frame.added_new = andnot(fresh, new_mask_);
    new_mask_ |= frame.added_new;
    new_count_ += frame.added_new.count();

    Bits256 partners = cross_[static_cast<std::size_t>(e)] & k_mask_;
    partners.for_each([&](int j) { unite(e, j); });
    for (int c : fcross_[static_cast<std::size_t>(e)])
      unite(e, static_cast<int>(cross_.size()) + c);

    frame.unions = static_cast<int>(undo_.size() - undo_before);
    k_mask_.set(e);
    frames_.push_back(frame);
  }

  void pop() {
    const Frame frame = frames_.back();
    frames_.pop_back();
    const int e = frame.link;
    k_mask_.reset(e);
    for (int u = 0; u < frame.unions; ++u) {
      const UnionRecord rec = undo_.back();
      undo_.pop_back();
      const int rx = rec.parent;
      // Reverse the aggregate updates of unite().
      invalid_ -= root_invalid(rx) ? 1 : 0;
      if (root_links_[static_cast<std::size_t>(rx)] > 0)
        f_sub_ -= root_fsub_[static_cast<std::size_t>(rx)];
      k_sum_ -= root_term(rx);

      parent_[static_cast<std::size_t>(rec.child)] = rec.child;
      root_links_[static_cast<std::size_t>(rx)] = rec.parent_links;
      root_fsub_[static_cast<std::size_t>(rx)] = rec.parent_fsub;
      root_fcnt_[static_cast<std::size_t>(rx)] = rec.parent_fcnt;
      root_atoms_[static_cast<std::size_t>(rx)] = rec.parent_atoms;
      root_vmask_[static_cast<std::size_t>(rx)] = rec.parent_vmask;

      k_sum_ += root_term(rx) + root_term(rec.child);
      if (root_links_[static_cast<std::size_t>(rx)] > 0)
        f_sub_ += root_fsub_[static_cast<std::size_t>(rx)];
      if (root_links_[static_cast<std::size_t>(rec.child)] > 0)
        f_sub_ += root_fsub_[static_cast<std::size_t>(rec.child)];
      invalid_ += (root_invalid(rx) ? 1 : 0) +
                  (root_invalid(rec.child) ? 1 : 0);
    }
    new_mask_ = andnot(new_mask_, frame.added_new);
    new_count_ -= frame.added_new.count();
    // Deactivate the atom.
    invalid_ -= root_invalid(e) ? 1 : 0;
    k_sum_ -= root_term(e);
    root_links_[static_cast<std::size_t>(e)] = 0;
    root_vmask_[static_cast<std::size_t>(e)] = Bits256{};
    --k_size_;
  }

  const Instance& inst_;
  int n_max_;
  long long candidate_cap_;
  std::optional<Clock::time_point> deadline_;
  long long alpha_num_{3}, alpha_den_{4};

  std::vector<Bits256> cross_;      // link -> links it crosses
  std::vector<Bits256> ext_adj_;    // extended adjacency among usable links
  std::vector<Bits256> link_vmask_; // link -> endpoint vertex bits
  std::vector<std::vector<int>> fcross_;  // link -> F components it crosses
  std::vector<Bits256> comp_vmask_;
  std::vector<long long> comp_contrib_;
  Bits256 f_mask_, usable_, vf_mask_;

  // Rollback union-find over atoms (links, then F components).
  std::vector<int> parent_;
  std::vector<int> root_links_;
  std::vector<long long> root_fsub_;
  std::vector<int> root_fcnt_;
  std::vector<int> root_atoms_;
  std::vector<Bits256> root_vmask_;
  std::vector<UnionRecord> undo_;
  std::vector<Frame> frames_;

  Bits256 k_mask_, new_mask_;
  int k_size_{0};
  int new_count_{0};
  long long k_sum_{0};
  long long f_sub_{0};
  int invalid_{0};
  long long candidates_{0};
};

}  // namespace detail

// First improving set in canonical enumeration order, or absent iff F is
// (α, N_max)-critical. Deterministic.
inline std::optional<LinkSet> find_improving_set(
    const LinkSet& f, const Rational& alpha, int n_max,
    long long candidate_cap = SearchParams{}.candidate_cap,
    std::optional<std::chrono::steady_clock::time_point> deadline =
        std::nullopt) {
  detail::ImprovementSearch search(f.instance(), f.indices(), alpha, n_max,
                                   candidate_cap, deadline);
  auto found = search.run();
  if (!found) return std::nullopt;
  return LinkSet::from_indices(f.instance(), std::move(*found));
}

inline bool is_critical(const LinkSet& f, const Rational& alpha, int n_max,
                        long long candidate_cap = SearchParams{}.candidate_cap) {
  return !find_improving_set(f, alpha, n_max, candidate_cap).has_value();
}

namespace detail {

// Shared phase-1 growth loop: extends F until (α, N_max)-critical, recording
// one trace entry per accepted set.
inline void grow_until_critical(const Instance& inst, std::vector<int>& f_idx,
                                const Rational& alpha,
                                const SearchParams& params, int pass,
                                SearchTrace& trace, long long& current_utility,
                                std::optional<ImprovementSearch::Clock::time_point>
                                    deadline) {
  for (;;) {
    ImprovementSearch search(inst, f_idx, alpha, params.n_max,
                             params.candidate_cap, deadline);
    auto found = search.run();
    trace.candidates_examined += search.candidates_examined();
    if (!found) break;
    SearchIteration iter;
    for (int i : *found)
      iter.accepted.push_back(inst.links()[static_cast<std::size_t>(i)]);
    iter.utility_before = current_utility;
    iter.utility_after = current_utility + search.last_gain();
    iter.new_vertices = search.last_new_vertices();
    iter.pass = pass;
    trace.iterations.push_back(std::move(iter));
    current_utility += search.last_gain();
    f_idx.insert(f_idx.end(), found->begin(), found->end());
    std::sort(f_idx.begin(), f_idx.end());
  }
}

inline std::optional<ImprovementSearch::Clock::time_point> make_deadline(
    const SearchParams& params) {
  if (params.time_budget_ms <= 0) return std::nullopt;
  return ImprovementSearch::Clock::now() +
         std::chrono::milliseconds(params.time_budget_ms);
}

}  // namespace detail

// Basic local search: grow F until (α, N_max)-critical, then return F plus
// its minimal completion. The solution F∪Q is feasible and satisfies
// |F∪Q| ≤ n - 3 - (1-α)|V(F)|.
inline SearchResult local_search(const Instance& inst,
                                 const SearchParams& params) {
  SearchResult result{LinkSet(inst), LinkSet(inst), {}, {}};
  if (auto warning = validate_search_params(params, /*refined=*/false))
    result.warnings.push_back(*warning);
  auto deadline = detail::make_deadline(params);

  std::vector<int> f_idx;
  long long current_utility = 0;
  detail::grow_until_critical(inst, f_idx, params.alpha, params, /*pass=*/0,
                              result.trace, current_utility, deadline);
  result.f = LinkSet::from_indices(inst, f_idx);
  result.q = minimal_completion(result.f, LinkSet::full(inst));
  result.trace.final_f = result.f.members();
  result.trace.completion = result.q.members();
  result.trace.passes = 1;
  return result;
}

// Refined local search: one growth phase per α in the ascending schedule,
// each continuing from the previous F (so F_i ⊇ F_{i-1} and F_i is
// (α_i, N_max)-critical), then a single minimal completion.
inline SearchResult refined_local_search(const Instance& inst,
                                         const SearchParams& params) {
  SearchResult result{LinkSet(inst), LinkSet(inst), {}, {}};
  if (auto warning = validate_search_params(params, /*refined=*/true))
    result.warnings.push_back(*warning);
  auto deadline = detail::make_deadline(params);

  std::vector<int> f_idx;
  long long current_utility = 0;
  for (std::size_t pass = 0; pass < params.alphas.size(); ++pass)
    detail::grow_until_critical(inst, f_idx, params.alphas[pass], params,
                                static_cast<int>(pass), result.trace,
                                current_utility, deadline);
  result.f = LinkSet::from_indices(inst, f_idx);
  result.q = minimal_completion(result.f, LinkSet::full(inst));
  result.trace.final_f = result.f.members();
  result.trace.completion = result.q.members();
  result.trace.passes = static_cast<int>(params.alphas.size());
  return result;
}

// Breakpoint schedule for the refined algorithm: all values (k+4)/(2k+3)
// and (k+2)/(2k+3) for 1 ≤ k ≤ k_max that lie in (1/2, 1], deduplicated,
// ascending, with 1 appended. These are exactly the points where the two
// ceilings inside f_α jump, so f_α is constant between consecutive entries.
inline std::vector<Rational> alpha_schedule(int k_max) {
  if (k_max < 1) throw AlphaRangeError("k_max must be at least 1");
  std::vector<Rational> points;
  for (int k = 1; k <= k_max; ++k) {
    const Rational den(2 * k + 3);
    for (int num : {k + 4, k + 2}) {
      Rational alpha = Rational(num) / den;
      if (alpha > Rational(1, 2) && alpha <= 1) points.push_back(alpha);
    }
  }
  points.push_back(Rational(1));
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

}  // namespace vca
