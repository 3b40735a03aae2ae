#include "hsolab/enumeration.hpp"

#include <array>
#include <bit>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "hsolab/io.hpp"

namespace hsolab {

EnumerationPlan EnumerationPlan::from_stream(GraphClassSpec cls, std::istream& graph6, bool dedup) {
  auto graphs = std::make_shared<std::vector<Graph>>();
  for_each_graph6(graph6, "stream", [&](GraphRecord&& r) { graphs->push_back(std::move(r.graph)); });
  return {cls, dedup, std::move(graphs)};
}

void EnumerationPlan::validate() const {
  const int n = graph_class.order;
  if (n < 1) throw EnumerationError("class order must be at least 1");
  if (graph_class.constraint == GraphClassSpec::Constraint::kCyclomatic && graph_class.cyclomatic < 0) {
    throw EnumerationError("cyclomatic number must be non-negative");
  }
  if (!external && n > kInternalEnumerationCap) {
    throw EnumerationError("internal enumeration is capped at n = " + std::to_string(kInternalEnumerationCap) +
                           "; supply a graph6 stream for n = " + std::to_string(n));
  }
  if (dedup && n > kDedupCap) {
    throw EnumerationError("deduplication is capped at n = " + std::to_string(kDedupCap));
  }
}

namespace {

constexpr int kPrefixBits = 10;

struct MaskSpace {
  int n = 0;
  int pairs = 0;
  int prefix_bits = 0;
  int required_size = -1;
  std::array<std::uint8_t, 64> lo{};  // bit -> smaller endpoint
  std::array<std::uint8_t, 64> hi{};  // bit -> larger endpoint

  explicit MaskSpace(const GraphClassSpec& cls)
      : n(cls.order), pairs(n * (n - 1) / 2), prefix_bits(std::min(pairs, kPrefixBits)),
        required_size(cls.required_size()) {
    int b = 0;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i, ++b) {
        lo[static_cast<std::size_t>(b)] = static_cast<std::uint8_t>(i);
        hi[static_cast<std::size_t>(b)] = static_cast<std::uint8_t>(j);
      }
    }
  }

  std::uint64_t prefixes() const { return std::uint64_t{1} << prefix_bits; }
  int low_bits() const { return pairs - prefix_bits; }

  // Calls fn(mask) for every mask under the prefix that meets the size
  // constraint, in increasing order.
  template <class Fn>
  void scan(std::uint64_t prefix, Fn&& fn) const {
    const int low = low_bits();
    const std::uint64_t base = prefix << low;
    const std::uint64_t end = std::uint64_t{1} << low;
    const int fixed = std::popcount(prefix);
    if (required_size >= 0) {
      const int need = required_size - fixed;
      if (need < 0 || need > low) return;
      if (need == 0) {
        fn(base);
        return;
      }
      std::uint64_t x = (std::uint64_t{1} << need) - 1;
      while (x < end) {
        fn(base | x);
        const std::uint64_t c = x & (~x + 1);
        const std::uint64_t r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
      }
    } else {
      const int min_edges = n - 1;
      for (std::uint64_t x = 0; x < end; ++x) {
        if (fixed + std::popcount(x) < min_edges) continue;
        fn(base | x);
      }
    }
  }

  bool connected(std::uint64_t mask, std::array<std::uint64_t, 8>& adj) const {
    adj.fill(0);
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
      const int b = std::countr_zero(rest);
      const int i = lo[static_cast<std::size_t>(b)];
      const int j = hi[static_cast<std::size_t>(b)];
      adj[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
      adj[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
    }
    const std::uint64_t all = (std::uint64_t{1} << n) - 1;
    std::uint64_t seen = 1;
    std::uint64_t frontier = 1;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
      frontier = next & ~seen;
      seen |= next;
    }
    return seen == all;
  }

  Graph build(const std::array<std::uint64_t, 8>& adj) const {
    return Graph::from_adjacency(std::vector<std::uint64_t>(adj.begin(), adj.begin() + n));
  }
};

// Labeled visit over the prefixes assigned to one worker.
template <class Fn>
void internal_worker(const MaskSpace& space, int worker, int workers, Fn&& fn) {
  std::array<std::uint64_t, 8> adj{};
  for (std::uint64_t p = static_cast<std::uint64_t>(worker); p < space.prefixes();
       p += static_cast<std::uint64_t>(workers)) {
    space.scan(p, [&](std::uint64_t mask) {
      if (space.connected(mask, adj)) fn(space.build(adj));
    });
  }
}

template <class Fn>
void external_worker(const EnumerationPlan& plan, int worker, int workers, Fn&& fn) {
  const auto& graphs = *plan.external;
  for (std::size_t i = static_cast<std::size_t>(worker); i < graphs.size(); i += static_cast<std::size_t>(workers)) {
    if (plan.graph_class.admits(graphs[i])) fn(graphs[i]);
  }
}

template <class Fn>
void labeled_worker(const EnumerationPlan& plan, int worker, int workers, Fn&& fn) {
  if (plan.external) {
    external_worker(plan, worker, workers, fn);
  } else {
    internal_worker(MaskSpace(plan.graph_class), worker, workers, fn);
  }
}

using CanonicalMap = std::map<std::vector<std::uint8_t>, Graph>;

void run_workers(int workers, const std::function<void(int)>& body) {
  if (workers == 1) {
    body(0);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          body(w);
        } catch (...) {
          const std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

CanonicalMap collect_classes(const EnumerationPlan& plan, int workers) {
  std::vector<CanonicalMap> partial(static_cast<std::size_t>(workers));
  run_workers(workers, [&](int w) {
    auto& mine = partial[static_cast<std::size_t>(w)];
    labeled_worker(plan, w, workers, [&](const Graph& g) {
      auto code = canonical_code(g);
      if (!mine.contains(code)) mine.emplace(std::move(code), canonical_form(g));
    });
  });
  CanonicalMap merged;
  for (auto& part : partial) merged.merge(part);
  return merged;
}

void check_workers(int workers) {
  if (workers < 1) throw EnumerationError("worker count must be at least 1");
}

}  // namespace

void enumerate(const EnumerationPlan& plan, const GraphVisitor& visit) {
  enumerate_parallel(plan, 1, [&](int, const Graph& g) { visit(g); });
}

void enumerate_parallel(const EnumerationPlan& plan, int workers, const WorkerVisitor& visit) {
  plan.validate();
  check_workers(workers);
  if (plan.dedup) {
    for (const auto& [code, g] : collect_classes(plan, workers)) visit(0, g);
    return;
  }
  run_workers(workers, [&](int w) { labeled_worker(plan, w, workers, [&](const Graph& g) { visit(w, g); }); });
}

std::vector<Graph> enumerate_all(const EnumerationPlan& plan, int workers) {
  plan.validate();
  check_workers(workers);
  if (plan.dedup) {
    std::vector<Graph> out;
    for (auto& [code, g] : collect_classes(plan, workers)) out.push_back(std::move(g));
    return out;
  }
  std::vector<std::vector<Graph>> partial(static_cast<std::size_t>(workers));
  run_workers(workers, [&](int w) {
    labeled_worker(plan, w, workers, [&](const Graph& g) { partial[static_cast<std::size_t>(w)].push_back(g); });
  });
  std::vector<Graph> out;
  for (auto& part : partial) out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  return out;
}

long long count(const EnumerationPlan& plan, int workers) {
  plan.validate();
  check_workers(workers);
  if (plan.dedup) return static_cast<long long>(collect_classes(plan, workers).size());
  std::vector<long long> partial(static_cast<std::size_t>(workers), 0);
  run_workers(workers, [&](int w) {
    auto& total = partial[static_cast<std::size_t>(w)];
    if (plan.external) {
      external_worker(plan, w, workers, [&](const Graph&) { ++total; });
      return;
    }
    const MaskSpace space(plan.graph_class);
    std::array<std::uint64_t, 8> adj{};
    for (std::uint64_t p = static_cast<std::uint64_t>(w); p < space.prefixes(); p += static_cast<std::uint64_t>(workers)) {
      space.scan(p, [&](std::uint64_t mask) {
        if (space.connected(mask, adj)) ++total;
      });
    }
  });
  long long sum = 0;
  for (const long long c : partial) sum += c;
  return sum;
}

}  // namespace hsolab
