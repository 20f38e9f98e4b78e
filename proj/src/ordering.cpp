#include "pathlayout/ordering.hpp"

#include <algorithm>
#include <numeric>

#include "pathlayout/error.hpp"

namespace pathlayout {

PathGraph build_path_graph(const Dag& g, const PathDecomposition& d, const EdgeClassification& cls) {
  PathGraph pg;
  pg.path_count = d.path_count();
  const auto k = static_cast<std::size_t>(pg.path_count);

  // Counting sort of cross-edge path pairs by b, then stably by a, gives
  // (a, b) order without a comparison sort.
  std::vector<std::pair<std::int32_t, std::int32_t>> raw;
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    if (cls.class_of[static_cast<std::size_t>(id)] != EdgeClass::kCross) continue;
    std::int32_t a = d.slot(g.edge(id).source).path;
    std::int32_t b = d.slot(g.edge(id).target).path;
    if (a > b) std::swap(a, b);
    raw.emplace_back(a, b);
  }
  auto counting_sort = [&](auto key) {
    std::vector<std::size_t> start(k + 1, 0);
    for (const auto& p : raw) ++start[static_cast<std::size_t>(key(p)) + 1];
    std::partial_sum(start.begin(), start.end(), start.begin());
    std::vector<std::pair<std::int32_t, std::int32_t>> sorted(raw.size());
    for (const auto& p : raw) sorted[start[static_cast<std::size_t>(key(p))]++] = p;
    raw.swap(sorted);
  };
  counting_sort([](const auto& p) { return p.second; });
  counting_sort([](const auto& p) { return p.first; });

  for (const auto& [a, b] : raw) {
    if (!pg.pairs.empty() && pg.pairs.back().a == a && pg.pairs.back().b == b) {
      ++pg.pairs.back().weight;
    } else {
      pg.pairs.push_back({a, b, 1});
    }
  }
  return pg;
}

PathOrder greedy_order(const PathGraph& pg) {
  const auto k = static_cast<std::size_t>(pg.path_count);

  // LSD radix sort: by b, by a, then by descending weight. Stable passes
  // make the result independent of the input order of pairs.
  std::int64_t max_weight = 0;
  for (const auto& p : pg.pairs) max_weight = std::max(max_weight, p.weight);
  std::vector<const WeightedPair*> by_weight;
  by_weight.reserve(pg.pairs.size());
  for (const auto& p : pg.pairs) by_weight.push_back(&p);
  auto stable_pass = [&](std::size_t buckets, auto key) {
    std::vector<std::size_t> start(buckets + 1, 0);
    for (const WeightedPair* p : by_weight) ++start[key(*p) + 1];
    std::partial_sum(start.begin(), start.end(), start.begin());
    std::vector<const WeightedPair*> out(by_weight.size());
    for (const WeightedPair* p : by_weight) out[start[key(*p)]++] = p;
    by_weight.swap(out);
  };
  stable_pass(k, [](const WeightedPair& p) { return static_cast<std::size_t>(p.b); });
  stable_pass(k, [](const WeightedPair& p) { return static_cast<std::size_t>(p.a); });
  stable_pass(static_cast<std::size_t>(max_weight) + 1,
              [&](const WeightedPair& p) { return static_cast<std::size_t>(max_weight - p.weight); });

  // Chains grow only at their ends, so a path's position is a fixed integer
  // offset and chain membership never changes once assigned.
  struct Chain {
    std::vector<std::int32_t> left;   // grows leftward, stored reversed
    std::vector<std::int32_t> right;  // grows rightward
    std::int64_t lo = 0;
    std::int64_t hi = 0;
  };
  std::vector<Chain> chains;
  std::vector<std::int32_t> chain_of(k, -1);
  std::vector<std::int64_t> position(k, 0);

  for (const WeightedPair* pair : by_weight) {
    std::int32_t a = pair->a;
    std::int32_t b = pair->b;
    bool a_placed = chain_of[static_cast<std::size_t>(a)] >= 0;
    bool b_placed = chain_of[static_cast<std::size_t>(b)] >= 0;
    if (a_placed && b_placed) continue;
    if (!a_placed && !b_placed) {
      auto id = static_cast<std::int32_t>(chains.size());
      Chain& chain = chains.emplace_back();
      chain.right = {a, b};
      chain.hi = 1;
      chain_of[static_cast<std::size_t>(a)] = chain_of[static_cast<std::size_t>(b)] = id;
      position[static_cast<std::size_t>(a)] = 0;
      position[static_cast<std::size_t>(b)] = 1;
      continue;
    }
    std::int32_t partner = a_placed ? a : b;
    std::int32_t fresh = a_placed ? b : a;
    std::int32_t id = chain_of[static_cast<std::size_t>(partner)];
    Chain& chain = chains[static_cast<std::size_t>(id)];
    std::int64_t pos = position[static_cast<std::size_t>(partner)];
    chain_of[static_cast<std::size_t>(fresh)] = id;
    if (pos - chain.lo < chain.hi - pos) {
      chain.left.push_back(fresh);
      position[static_cast<std::size_t>(fresh)] = --chain.lo;
    } else {
      chain.right.push_back(fresh);
      position[static_cast<std::size_t>(fresh)] = ++chain.hi;
    }
  }

  struct Flat {
    std::vector<std::int32_t> paths;
    std::int32_t smallest;
  };
  std::vector<Flat> flat;
  flat.reserve(chains.size());
  for (const Chain& chain : chains) {
    Flat f;
    f.paths.assign(chain.left.rbegin(), chain.left.rend());
    f.paths.insert(f.paths.end(), chain.right.begin(), chain.right.end());
    f.smallest = *std::min_element(f.paths.begin(), f.paths.end());
    flat.push_back(std::move(f));
  }
  std::sort(flat.begin(), flat.end(), [](const Flat& p, const Flat& q) {
    if (p.paths.size() != q.paths.size()) return p.paths.size() > q.paths.size();
    return p.smallest < q.smallest;
  });
  PathOrder order;
  order.reserve(k);
  for (const Flat& f : flat) order.insert(order.end(), f.paths.begin(), f.paths.end());
  for (std::size_t p = 0; p < k; ++p) {
    if (chain_of[p] < 0) order.push_back(static_cast<std::int32_t>(p));
  }
  return order;
}

PathOrder identity_order(std::int32_t k) {
  PathOrder order(static_cast<std::size_t>(std::max(k, 0)));
  std::iota(order.begin(), order.end(), 0);
  return order;
}

std::int64_t weighted_span(const PathGraph& pg, const PathOrder& order) {
  std::vector<std::int64_t> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<std::int64_t>(i);
  std::int64_t total = 0;
  for (const auto& p : pg.pairs) {
    total += p.weight * std::abs(pos[static_cast<std::size_t>(p.a)] - pos[static_cast<std::size_t>(p.b)]);
  }
  return total;
}

PathOrder brute_force_order(const PathGraph& pg) {
  if (pg.path_count > 6) {
    throw Error(ErrorCode::kInvalidArgument, {std::to_string(pg.path_count)},
                "exhaustive ordering is limited to 6 paths");
  }
  PathOrder order = identity_order(pg.path_count);
  PathOrder best = order;
  std::int64_t best_span = weighted_span(pg, order);
  while (std::next_permutation(order.begin(), order.end())) {
    std::int64_t span = weighted_span(pg, order);
    if (span < best_span) {
      best_span = span;
      best = order;
    }
  }
  return best;
}

}  // namespace pathlayout
