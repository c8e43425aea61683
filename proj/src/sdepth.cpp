#include "stanley/sdepth.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <thread>
#include <unordered_set>

namespace stanley {

namespace {

using Clock = std::chrono::steady_clock;

bool interval_less(const Interval& a, const Interval& b) {
  int ra = std::popcount(a.lower), rb = std::popcount(b.lower);
  if (ra != rb) return ra < rb;
  if (a.lower != b.lower) return seq_lex_less(a.lower, b.lower);
  return seq_lex_less(a.upper, b.upper);
}

struct VecHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint64_t w : v) {
      h ^= static_cast<std::size_t>(w);
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Coordination between root-branch workers. `winner` holds the least root
// branch index known to succeed; a worker on branch j may stop once some
// branch < j has won, which keeps the reported witness identical to the
// serial search's.
struct SharedState {
  std::atomic<bool> timed_out{false};
  std::atomic<int> winner{INT_MAX};
  std::optional<Clock::time_point> deadline;
};

enum class Step { Exhausted, Found, Aborted };

class PartitionSearch {
 public:
  PartitionSearch(const CharacteristicPoset& poset, int d, const SearchOptions& options,
                  SharedState* shared, int branch_index)
      : poset_(poset),
        d_(d),
        limit_(poset.stratum_offset[static_cast<std::size_t>(d) + 1]),
        options_(options),
        shared_(shared),
        branch_index_(branch_index),
        covered_(limit_, 0) {}

  // Marks [lower, lower|extra] without feasibility questions (root split).
  void seed(std::uint64_t lower, std::uint64_t extra) {
    std::size_t top = trail_.size();
    bool ok = mark_interval(lower, extra, top);
    (void)ok;
    chosen_.push_back({lower, lower | extra});
  }

  Step run() { return dfs(0); }

  const std::vector<Interval>& chosen() const { return chosen_; }
  std::uint64_t nodes() const { return nodes_; }

  // Candidate tops for the first uncovered element, in lex order of the added
  // index sets; used to split the root across workers.
  static std::vector<std::uint64_t> root_extras(const CharacteristicPoset& poset, int d) {
    std::size_t limit = poset.stratum_offset[static_cast<std::size_t>(d) + 1];
    if (limit == 0) return {};
    std::uint64_t first = poset.element_at(0);
    std::vector<std::uint64_t> extras;
    for_each_combination(free_indices(poset.n, first), d - std::popcount(first),
                         [&](std::uint64_t t) {
                           extras.push_back(t);
                           return true;
                         });
    return extras;
  }

 private:
  static std::vector<int> free_indices(int n, std::uint64_t c) {
    std::vector<int> out;
    for (std::uint64_t rest = full_mask(n) & ~c; rest; rest &= rest - 1)
      out.push_back(std::countr_zero(rest));
    return out;
  }

  // Visits every size-`take` subset of `bits` as a mask, lexicographically by
  // index sequence; stops early if the visitor returns false.
  template <typename F>
  static void for_each_combination(const std::vector<int>& bits, int take, F&& visit) {
    int m = static_cast<int>(bits.size());
    if (take < 0 || take > m) return;
    std::vector<int> at(static_cast<std::size_t>(take));
    for (int i = 0; i < take; ++i) at[static_cast<std::size_t>(i)] = i;
    while (true) {
      std::uint64_t t = 0;
      for (int i : at) t |= std::uint64_t{1} << bits[static_cast<std::size_t>(i)];
      if (!visit(t)) return;
      int pos = take - 1;
      while (pos >= 0 && at[static_cast<std::size_t>(pos)] == m - take + pos) --pos;
      if (pos < 0) return;
      ++at[static_cast<std::size_t>(pos)];
      for (int i = pos + 1; i < take; ++i)
        at[static_cast<std::size_t>(i)] = at[static_cast<std::size_t>(i - 1)] + 1;
    }
  }

  bool mark_interval(std::uint64_t lower, std::uint64_t extra, std::size_t trail_top) {
    std::uint64_t sub = 0;
    while (true) {
      std::size_t idx = poset_.index_of(lower | sub);
      if (covered_[idx]) {
        rollback(trail_top);
        return false;
      }
      covered_[idx] = 1;
      trail_.push_back(idx);
      if (sub == extra) return true;
      sub = (sub - extra) & extra;
    }
  }

  void rollback(std::size_t trail_top) {
    while (trail_.size() > trail_top) {
      covered_[trail_.back()] = 0;
      trail_.pop_back();
    }
  }

  bool should_abort() {
    if (shared_ == nullptr) return false;
    if (shared_->timed_out.load(std::memory_order_relaxed)) return true;
    return shared_->winner.load(std::memory_order_relaxed) < branch_index_;
  }

  bool deadline_hit() {
    if (!options_.deadline) return false;
    if (Clock::now() <= *options_.deadline) return false;
    if (shared_) shared_->timed_out.store(true, std::memory_order_relaxed);
    return true;
  }

  std::vector<std::uint64_t> signature() const {
    std::vector<std::uint64_t> sig((limit_ + 63) / 64, 0);
    for (std::size_t i = 0; i < limit_; ++i)
      if (covered_[i]) sig[i >> 6] |= std::uint64_t{1} << (i & 63);
    return sig;
  }

  Step dfs(std::size_t cursor) {
    while (cursor < limit_ && covered_[cursor]) ++cursor;
    if (cursor == limit_) return Step::Found;
    if (options_.memoize_failures && failed_.count(signature())) return Step::Exhausted;

    std::uint64_t c = poset_.element_at(cursor);
    Step result = Step::Exhausted;
    for_each_combination(
        free_indices(poset_.n, c), d_ - std::popcount(c), [&](std::uint64_t t) {
          ++nodes_;
          if ((nodes_ & 255) == 0 && deadline_hit()) {
            result = Step::Aborted;
            return false;
          }
          if (should_abort()) {
            result = Step::Aborted;
            return false;
          }
          std::size_t top = trail_.size();
          if (mark_interval(c, t, top)) {
            chosen_.push_back({c, c | t});
            Step r = dfs(cursor + 1);
            if (r != Step::Exhausted) {
              result = r;
              return false;  // Found keeps marks and chosen intact
            }
            chosen_.pop_back();
            rollback(top);
          }
          return true;
        });
    if (result == Step::Exhausted && options_.memoize_failures)
      failed_.insert(signature());
    return result;
  }

  const CharacteristicPoset& poset_;
  int d_;
  std::size_t limit_;
  const SearchOptions& options_;
  SharedState* shared_;
  int branch_index_;
  std::vector<std::uint8_t> covered_;
  std::vector<std::size_t> trail_;
  std::vector<Interval> chosen_;
  std::unordered_set<std::vector<std::uint64_t>, VecHash> failed_;
  std::uint64_t nodes_ = 0;
};

IntervalPartition assemble_witness(const CharacteristicPoset& poset, int d,
                                   std::vector<Interval> chosen) {
  // Everything of rank above d stands alone.
  for (std::size_t r = static_cast<std::size_t>(d) + 1; r < poset.strata.size(); ++r)
    for (std::uint64_t e : poset.strata[r]) chosen.push_back({e, e});
  std::sort(chosen.begin(), chosen.end(), interval_less);
  return IntervalPartition{std::move(chosen)};
}

}  // namespace

Feasibility partition_exists(const CharacteristicPoset& poset, int d,
                             const SearchOptions& options, SearchStats* stats) {
  int mindeg = poset.ideal.mindeg();
  if (d < mindeg || d > poset.n)
    throw ValidationError("d=" + std::to_string(d) + " outside [mindeg=" +
                          std::to_string(mindeg) + ", n=" + std::to_string(poset.n) + "]");
  if (options.deadline && Clock::now() > *options.deadline)
    throw DeadlineExceeded(PartialResult{});

  auto t0 = Clock::now();
  SharedState shared;
  shared.deadline = options.deadline;

  Feasibility out;
  std::uint64_t nodes = 0;

  std::vector<std::uint64_t> extras = PartitionSearch::root_extras(poset, d);
  bool parallel = options.threads > 1 && extras.size() > 1;

  if (!parallel) {
    PartitionSearch search(poset, d, options, &shared, 0);
    Step step = search.run();
    nodes = search.nodes();
    if (step == Step::Aborted || shared.timed_out.load())
      throw DeadlineExceeded(PartialResult{});
    if (step == Step::Found) {
      out.exists = true;
      out.witness = assemble_witness(poset, d, search.chosen());
    }
  } else {
    std::uint64_t first = poset.element_at(0);
    int m = static_cast<int>(extras.size());
    std::vector<std::optional<std::vector<Interval>>> found(static_cast<std::size_t>(m));
    std::atomic<int> next{0};
    std::atomic<std::uint64_t> node_sum{0};

    auto worker = [&]() {
      while (true) {
        int j = next.fetch_add(1);
        if (j >= m) return;
        if (shared.timed_out.load()) return;
        if (shared.winner.load() < j) continue;  // a smaller branch already won
        PartitionSearch search(poset, d, options, &shared, j);
        search.seed(first, extras[static_cast<std::size_t>(j)]);
        Step step = search.run();
        node_sum.fetch_add(search.nodes());
        if (step == Step::Found) {
          found[static_cast<std::size_t>(j)] = search.chosen();
          int cur = shared.winner.load();
          while (j < cur && !shared.winner.compare_exchange_weak(cur, j)) {
          }
        }
      }
    };

    int nthreads = std::min<int>(options.threads, m);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nthreads));
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    nodes = node_sum.load();
    if (shared.timed_out.load()) throw DeadlineExceeded(PartialResult{});
    int w = shared.winner.load();
    if (w != INT_MAX) {
      out.exists = true;
      out.witness = assemble_witness(poset, d, *found[static_cast<std::size_t>(w)]);
    }
  }

  if (stats) {
    stats->nodes = nodes;
    stats->wall_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  }
  return out;
}

SdepthResult exact_sdepth(const SqfreeIdeal& ideal, const SearchOptions& options) {
  auto t0 = Clock::now();
  CharacteristicPoset poset = build_poset(ideal, options.poset_cap);
  int lo = ideal.mindeg();
  int hi = ideal.n;
  if (options.upper_bound_hint > 0) hi = std::min(hi, options.upper_bound_hint);
  if (hi < lo)
    throw ValidationError("upper bound hint below the minimal generator degree");

  SdepthResult result;
  PartialResult partial;
  auto record = [&](const SearchStats& s) { result.stats.nodes += s.nodes; };

  try {
    if (!options.binary_search) {
      for (int d = hi;; --d) {
        SearchStats s;
        Feasibility f = partition_exists(poset, d, options, &s);
        record(s);
        if (f.exists) {
          result.value = d;
          result.witness = std::move(f.witness);
          break;
        }
        partial.smallest_infeasible = d;
        // d = mindeg is always feasible (the all-singletons partition), so
        // the loop terminates before leaving the range.
      }
    } else {
      // Feasibility is monotone decreasing in d; bisect over [lo, hi]. The
      // low end is feasible unconditionally via the all-singletons partition.
      SearchStats s;
      Feasibility f = partition_exists(poset, hi, options, &s);
      record(s);
      if (f.exists) {
        result.value = hi;
        result.witness = std::move(f.witness);
      } else {
        partial.smallest_infeasible = hi;
        int a = lo, b = hi - 1;
        bool have_witness = false;
        while (a < b) {
          int mid = a + (b - a + 1) / 2;
          SearchStats sm;
          Feasibility fm = partition_exists(poset, mid, options, &sm);
          record(sm);
          if (fm.exists) {
            a = mid;
            result.witness = std::move(fm.witness);
            have_witness = true;
            partial.best_feasible = a;
            partial.witness = result.witness;
          } else {
            b = mid - 1;
            partial.smallest_infeasible = mid;
          }
        }
        result.value = a;
        if (!have_witness) {
          SearchStats sa;
          Feasibility fa = partition_exists(poset, a, options, &sa);
          record(sa);
          result.witness = std::move(fa.witness);
        }
      }
    }
  } catch (DeadlineExceeded& e) {
    e.partial.best_feasible = partial.best_feasible;
    e.partial.witness = partial.witness;
    e.partial.smallest_infeasible = partial.smallest_infeasible;
    throw;
  }

  result.stats.wall_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  return result;
}

}  // namespace stanley
