#ifndef NONINC_SEARCH_HPP
#define NONINC_SEARCH_HPP

// Exact and heuristic computation of f, the largest s admitting s points and
// s lines with no incidences.
//
// For fixed Y the best line set is external_lines(Y), so only point sets are
// searched.  The value is monotone (dropping a point never loses an external
// line), hence exact_f raises a target t = incumbent + 1 one step at a time
// and asks whether some t-subset has at least t external lines.  Each such
// question is a depth-first enumeration of increasing index sequences that
// keeps the external-line bitset per level and filters the remaining
// candidates by the external count they would leave.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <thread>
#include <vector>

#include "noninc/bits.hpp"
#include "noninc/bounds.hpp"
#include "noninc/certificate.hpp"
#include "noninc/error.hpp"
#include "noninc/index_set.hpp"
#include "noninc/plane.hpp"

namespace noninc {

struct SearchConfig {
  std::uint64_t node_budget = 100'000'000;
  unsigned workers = 1;
  /// Return the lexicographically first optimal Y regardless of scheduling.
  bool deterministic = true;
  std::optional<NonincidenceCertificate> initial;
};

enum class SearchStatus { proven, budget_exhausted };

struct SearchResult {
  std::uint64_t value = 0;
  NonincidenceCertificate certificate;
  SearchStatus status = SearchStatus::proven;
  std::uint64_t nodes = 0;
};

namespace detail {

class TargetSearch {
 public:
  TargetSearch(const Plane& pl, std::size_t target, std::uint64_t budget, std::atomic<std::uint64_t>& nodes)
      : pl_(pl), target_(target), budget_(budget), batch_(std::min<std::uint64_t>(budget, 4096)), nodes_(nodes),
        words_(words_for(pl.num_lines())) {}

  enum class Outcome { found, exhausted, none };

  struct Result {
    Outcome outcome = Outcome::none;
    std::vector<std::uint32_t> points;
  };

  Result run(unsigned workers, bool deterministic) {
    const std::size_t n = pl_.num_points();
    const std::vector<Word> all = full_bits(pl_.num_lines());

    // Root candidates: single points leaving at least `target` external lines.
    std::vector<std::uint32_t> roots;
    for (std::uint32_t p = 0; p < n; ++p)
      if (popcount_andnot(all, pl_.point_row(p)) >= target_) roots.push_back(p);

    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best_branch{std::numeric_limits<std::size_t>::max()};
    std::vector<std::vector<std::uint32_t>> found(roots.size());

    auto worker = [&] {
      Worker w(*this, best_branch, deterministic);
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= roots.size() || i > best_branch.load() || abort_.load()) break;
        // In nondeterministic mode any hit ends the search.
        if (!deterministic && best_branch.load() != std::numeric_limits<std::size_t>::max()) break;
        w.branch_limit = i;
        if (w.explore_root(roots, i, all)) {
          found[i] = w.path;
          std::size_t cur = best_branch.load();
          while (i < cur && !best_branch.compare_exchange_weak(cur, i)) {
          }
        }
      }
      w.flush();
    };

    workers = std::max(1u, workers);
    if (workers == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }

    Result res;
    const std::size_t b = best_branch.load();
    if (b != std::numeric_limits<std::size_t>::max()) {
      res.outcome = Outcome::found;
      res.points = found[b];
    } else {
      res.outcome = abort_.load() ? Outcome::exhausted : Outcome::none;
    }
    return res;
  }

 private:
  struct Worker {
    Worker(TargetSearch& ts, std::atomic<std::size_t>& best, bool deterministic)
        : ts(ts), ext((ts.target_ + 1) * ts.words_), cand(ts.target_ + 1), best_branch(best),
          deterministic(deterministic) {}

    TargetSearch& ts;
    std::vector<Word> ext;                        // per-level external bitsets
    std::vector<std::vector<std::uint32_t>> cand; // per-level candidate lists
    std::vector<std::uint32_t> path;
    std::uint64_t local = 0;
    std::size_t branch_limit = 0;
    std::atomic<std::size_t>& best_branch;
    bool deterministic;

    std::span<Word> level(std::size_t d) { return {ext.data() + d * ts.words_, ts.words_}; }

    void flush() {
      if (local) {
        ts.nodes_.fetch_add(local);
        local = 0;
      }
    }

    bool tick() {
      if (++local >= ts.batch_) {
        const auto total = ts.nodes_.fetch_add(local) + local;
        local = 0;
        if (total >= ts.budget_) ts.abort_.store(true);
      }
      if (ts.abort_.load(std::memory_order_relaxed)) return false;
      const std::size_t b = best_branch.load(std::memory_order_relaxed);
      // A hit in an earlier branch makes this one irrelevant; without
      // determinism any hit does.
      return deterministic ? b >= branch_limit : b == std::numeric_limits<std::size_t>::max();
    }

    bool explore_root(const std::vector<std::uint32_t>& roots, std::size_t i, const std::vector<Word>& all) {
      path.assign(1, roots[i]);
      auto e = level(1);
      const auto row = ts.pl_.point_row(roots[i]);
      for (std::size_t w = 0; w < ts.words_; ++w) e[w] = all[w] & ~row[w];
      if (ts.target_ == 1) {
        tick();
        return true;
      }
      cand[1].clear();
      for (std::size_t j = i + 1; j < roots.size(); ++j)
        if (popcount_andnot(e, ts.pl_.point_row(roots[j])) >= ts.target_) cand[1].push_back(roots[j]);
      return dfs(1);
    }

    // path holds d points; level(d) is their external bitset, cand[d] the
    // admissible extensions.
    bool dfs(std::size_t d) {
      if (!tick()) return false;
      const std::size_t need = ts.target_ - d;
      const auto& c = cand[d];
      if (c.size() < need) return false;
      for (std::size_t i = 0; i + need <= c.size(); ++i) {
        const std::uint32_t p = c[i];
        const auto parent = level(d);
        auto child = level(d + 1);
        const auto row = ts.pl_.point_row(p);
        for (std::size_t w = 0; w < ts.words_; ++w) child[w] = parent[w] & ~row[w];
        path.push_back(p);
        if (need == 1) return true;
        auto& next = cand[d + 1];
        next.clear();
        for (std::size_t j = i + 1; j < c.size(); ++j)
          if (popcount_andnot(child, ts.pl_.point_row(c[j])) >= ts.target_) next.push_back(c[j]);
        if (next.size() >= need - 1 && dfs(d + 1)) return true;
        path.pop_back();
        if (ts.abort_.load(std::memory_order_relaxed)) return false;
      }
      return false;
    }
  };

  const Plane& pl_;
  std::size_t target_;
  std::uint64_t budget_;
  std::uint64_t batch_;
  std::atomic<std::uint64_t>& nodes_;
  std::size_t words_;
  std::atomic<bool> abort_{false};
};

}  // namespace detail

/// Exact f for the plane.  Status is proven only when the target search
/// above the returned value was exhausted without hitting the node budget.
inline SearchResult exact_f(const Plane& pl, const SearchConfig& cfg = {}) {
  if (cfg.node_budget < 1) throw error(errc::bad_parameters, "node budget must be at least 1");
  SearchResult res;
  res.certificate = NonincidenceCertificate{pl.reference(), {}, {}, 0, Provenance::search, std::nullopt};
  if (cfg.initial) {
    if (!verify_certificate(pl, *cfg.initial))
      throw error(errc::bad_parameters, "initial certificate does not verify");
    res.certificate = *cfg.initial;
    res.value = cfg.initial->s;
  }

  const std::uint64_t cap = stinson_bound(pl.order());
  std::atomic<std::uint64_t> nodes{0};
  for (;;) {
    const std::uint64_t target = res.value + 1;
    if (target > cap || target > pl.num_points()) break;
    const std::uint64_t used = nodes.load();
    if (used >= cfg.node_budget) {
      res.status = SearchStatus::budget_exhausted;
      break;
    }
    detail::TargetSearch ts(pl, target, cfg.node_budget, nodes);
    const auto r = ts.run(cfg.workers, cfg.deterministic);
    if (r.outcome == detail::TargetSearch::Outcome::found) {
      res.value = target;
      res.certificate = make_certificate(pl, PointSet(r.points), Provenance::search);
      continue;
    }
    if (r.outcome == detail::TargetSearch::Outcome::exhausted) res.status = SearchStatus::budget_exhausted;
    break;
  }
  res.nodes = nodes.load();
  return res;
}

/// Independent check: does some s-subset of points have >= s external lines?
/// Plain combination enumeration, no pruning, only Plane::incident queries.
inline bool oracle_bruteforce(const Plane& pl, std::uint64_t s) {
  const std::uint64_t n = pl.num_points();
  if (s > n) return false;
  // C(n, s) <= 1e7
  {
    long double c = 1;
    for (std::uint64_t i = 0; i < s; ++i) {
      c = c * static_cast<long double>(n - i) / static_cast<long double>(i + 1);
      if (c > 1e7L) throw error(errc::too_large, "C(" + std::to_string(n) + ", " + std::to_string(s) + ") exceeds 10^7");
    }
  }
  std::vector<std::uint64_t> comb(s);
  for (std::uint64_t i = 0; i < s; ++i) comb[i] = i;
  for (;;) {
    std::uint64_t free_lines = 0;
    for (std::uint64_t l = 0; l < pl.num_lines(); ++l) {
      bool hit = false;
      for (auto p : comb)
        if (pl.incident(p, l)) {
          hit = true;
          break;
        }
      if (!hit) ++free_lines;
    }
    if (free_lines >= s) return true;
    // next combination
    std::uint64_t i = s;
    while (i > 0 && comb[i - 1] == n - s + (i - 1)) --i;
    if (i == 0) return false;
    ++comb[i - 1];
    for (std::uint64_t j = i; j < s; ++j) comb[j] = comb[j - 1] + 1;
  }
}

namespace detail {

// Y with per-line hit counts; external lines are those with count 0.
class CoverState {
 public:
  explicit CoverState(const Plane& pl)
      : pl_(&pl), hits_(pl.num_lines(), 0), in_(pl.num_points(), 0), external_(pl.num_lines()) {}

  std::size_t size() const { return members_.size(); }
  std::size_t external() const { return external_; }
  bool contains(std::uint32_t p) const { return in_[p]; }
  const std::vector<std::uint32_t>& members() const { return members_; }

  /// External lines lost by adding p.
  std::size_t kills(std::uint32_t p) const {
    std::size_t k = 0;
    for (auto l : pl_->lines_through(p)) k += hits_[l] == 0;
    return k;
  }

  /// Change in external count from replacing `out` by `in`.
  long swap_delta(std::uint32_t out, std::uint32_t in) const {
    long d = 0;
    for (auto l : pl_->lines_through(out)) d += hits_[l] == 1;
    for (auto l : pl_->lines_through(in)) {
      const bool shared = pl_->incident(out, l);
      const unsigned after = hits_[l] - (shared ? 1u : 0u);
      d -= after == 0;
    }
    return d;
  }

  void add(std::uint32_t p) {
    for (auto l : pl_->lines_through(p)) external_ -= hits_[l]++ == 0;
    in_[p] = 1;
    members_.push_back(p);
  }
  void remove(std::uint32_t p) {
    for (auto l : pl_->lines_through(p)) external_ += --hits_[l] == 0;
    in_[p] = 0;
    members_.erase(std::find(members_.begin(), members_.end(), p));
  }

 private:
  const Plane* pl_;
  std::vector<unsigned> hits_;
  std::vector<char> in_;
  std::vector<std::uint32_t> members_;
  std::size_t external_ = 0;
};

}  // namespace detail

/// Randomized greedy with single-swap hill climbing.  The seed picks the
/// starting point and the order in which swaps are tried; greedy additions
/// break ties by least index.  Deterministic for a fixed seed.
inline NonincidenceCertificate greedy_heuristic(const Plane& pl, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto n = static_cast<std::uint32_t>(pl.num_points());
  detail::CoverState state(pl);

  auto best_addition = [&]() {
    std::uint32_t best = n;
    std::size_t best_k = std::numeric_limits<std::size_t>::max();
    for (std::uint32_t p = 0; p < n; ++p) {
      if (state.contains(p)) continue;
      const auto k = state.kills(p);
      if (k < best_k) {
        best_k = k;
        best = p;
      }
    }
    return best;
  };

  std::vector<std::uint32_t> best_points;
  auto record = [&] {
    if (state.external() >= state.size() && state.size() > best_points.size()) best_points = state.members();
  };

  state.add(static_cast<std::uint32_t>(rng() % n));
  record();

  constexpr int max_sideways = 200;
  for (;;) {
    if (state.size() >= n) break;
    state.add(best_addition());
    if (state.external() >= state.size()) {
      record();
      continue;
    }
    // Climb: single swaps that raise the external count, with a bounded
    // number of sideways moves to escape plateaus.
    int sideways = 0;
    while (state.external() < state.size()) {
      std::vector<std::uint32_t> ins, outs = state.members();
      for (std::uint32_t p = 0; p < n; ++p)
        if (!state.contains(p)) ins.push_back(p);
      std::shuffle(outs.begin(), outs.end(), rng);
      std::shuffle(ins.begin(), ins.end(), rng);
      std::optional<std::pair<std::uint32_t, std::uint32_t>> improving, flat;
      for (auto o : outs) {
        for (auto i : ins) {
          const long d = state.swap_delta(o, i);
          if (d > 0) {
            improving = std::pair{o, i};
            break;
          }
          if (d == 0 && !flat) flat = std::pair{o, i};
        }
        if (improving) break;
      }
      if (improving) {
        state.remove(improving->first);
        state.add(improving->second);
      } else if (flat && sideways++ < max_sideways) {
        state.remove(flat->first);
        state.add(flat->second);
      } else {
        break;
      }
    }
    if (state.external() < state.size()) break;
    record();
  }

  return make_certificate(pl, PointSet::from_unsorted(best_points), Provenance::search);
}

}  // namespace noninc

#endif  // NONINC_SEARCH_HPP
