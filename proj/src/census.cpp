#include "lambda2/census.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "lambda2/graph6.hpp"
#include "lambda2/spectral.hpp"

namespace lambda2 {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::pair<int, int>> pair_order(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  return pairs;
}

struct MaskAdj {
  int n = 0;
  unsigned adj[8] = {};
};

MaskAdj mask_adjacency(int n, unsigned mask) {
  MaskAdj a;
  a.n = n;
  int e = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++e)
      if (mask & (1u << e)) {
        a.adj[i] |= 1u << j;
        a.adj[j] |= 1u << i;
      }
  return a;
}

bool subset_connected(const MaskAdj& a, unsigned subset) {
  if (subset == 0) return true;
  unsigned reach = subset & (~subset + 1u);
  while (true) {
    unsigned grow = reach;
    unsigned rem = reach;
    while (rem) {
      int v = std::countr_zero(rem);
      rem &= rem - 1;
      grow |= a.adj[v] & subset;
    }
    if (grow == reach) break;
    reach = grow;
  }
  return reach == subset;
}

int mask_cut_count(const MaskAdj& a) {
  unsigned full = (a.n >= 32) ? ~0u : ((1u << a.n) - 1);
  int cuts = 0;
  for (int u = 0; u < a.n; ++u) {
    unsigned rest = full & ~(1u << u);
    if (std::popcount(rest) >= 2 && !subset_connected(a, rest)) ++cuts;
  }
  return cuts;
}

void parallel_for(size_t count, int workers, const std::function<void(size_t)>& fn) {
  workers = std::max(1, workers);
  if (workers == 1 || count <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr err;
  std::mutex err_mutex;
  auto body = [&] {
    size_t i;
    while ((i = next.fetch_add(1)) < count) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(err_mutex);
        if (!err) err = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < workers; ++t) pool.emplace_back(body);
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

Outcome classification_outcome(const Graph& g, const BoundConstant& a) {
  try {
    switch (classify(g, a)) {
      case Classification::less_than: return Outcome::less_than;
      case Classification::equal_to: return Outcome::equal_to;
      case Classification::greater_than: return Outcome::greater_than;
      case Classification::inconclusive: return Outcome::inconclusive;
    }
  } catch (const NotApplicable&) {
  }
  return Outcome::not_applicable;
}

bool outcome_matches(Outcome c, Rel oracle) {
  return (c == Outcome::less_than && oracle == Rel::less) ||
         (c == Outcome::equal_to && oracle == Rel::equal) ||
         (c == Outcome::greater_than && oracle == Rel::greater);
}

CensusRecord make_record(const Graph& g, const BoundConstant& a, bool timing) {
  auto t0 = std::chrono::steady_clock::now();
  CensusRecord rec;
  rec.graph6 = graph6_encode(g);
  rec.n = g.vertex_count();
  rec.edges = g.edge_count();
  rec.cut_vertices =
      (is_connected(g) && g.vertex_count() >= 3) ? static_cast<int>(articulation_points(g).size()) : 0;
  rec.classification = classification_outcome(g, a);
  if (g.vertex_count() >= 2) rec.oracle = compare_eigenvalue(g, 2, a);
  bool determined = rec.classification == Outcome::less_than ||
                    rec.classification == Outcome::equal_to ||
                    rec.classification == Outcome::greater_than;
  rec.agree = determined ? (rec.oracle && outcome_matches(rec.classification, *rec.oracle)) : true;
  if (timing) {
    auto t1 = std::chrono::steady_clock::now();
    rec.micros = std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();
  }
  return rec;
}

CensusReport aggregate(std::vector<CensusRecord> records, const BoundConstant& a,
                       const CensusOptions& opt) {
  CensusReport rep;
  rep.bound = a.text;
  rep.total = records.size();
  for (const CensusRecord& r : records) {
    switch (r.classification) {
      case Outcome::less_than: ++rep.less; break;
      case Outcome::equal_to: ++rep.equal; break;
      case Outcome::greater_than: ++rep.greater; break;
      case Outcome::inconclusive: ++rep.inconclusive; break;
      case Outcome::not_applicable: ++rep.not_applicable; break;
    }
    if (!r.agree) ++rep.contradictions;
  }
  rep.inconclusive_fraction =
      rep.total ? static_cast<double>(rep.inconclusive) / static_cast<double>(rep.total) : 0.0;
  rep.records_emitted = opt.emit_records;
  if (opt.emit_records) rep.records = std::move(records);
  return rep;
}

}  // namespace

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::less_than: return "less_than";
    case Outcome::equal_to: return "equal";
    case Outcome::greater_than: return "greater_than";
    case Outcome::inconclusive: return "inconclusive";
    case Outcome::not_applicable: return "not_applicable";
  }
  return "?";
}

Graph graph_from_mask(int n, unsigned mask) {
  std::vector<std::pair<int, int>> pairs = pair_order(n);
  std::vector<std::pair<int, int>> edges;
  for (size_t e = 0; e < pairs.size(); ++e)
    if (mask & (1u << e)) edges.push_back(pairs[e]);
  return Graph::from_edges(n, edges);
}

std::vector<MaskItem> builtin_survivors(int max_n) {
  if (max_n < 1 || max_n > 7)
    throw std::invalid_argument("builtin enumeration supports 1 <= max_n <= 7");
  std::vector<MaskItem> out;
  for (int n = 3; n <= max_n; ++n) {
    unsigned total = 1u << (n * (n - 1) / 2);
    unsigned full = (1u << n) - 1;
    for (unsigned mask = 0; mask < total; ++mask) {
      MaskAdj a = mask_adjacency(n, mask);
      if (!subset_connected(a, full)) continue;
      if (mask_cut_count(a) == 0) continue;
      out.push_back({n, mask});
    }
  }
  return out;
}

size_t connected_labeled_count(int n) {
  if (n < 1 || n > 7) throw std::invalid_argument("connected_labeled_count: need 1 <= n <= 7");
  size_t count = 0;
  unsigned total = 1u << (n * (n - 1) / 2);
  unsigned full = (1u << n) - 1;
  for (unsigned mask = 0; mask < total; ++mask)
    if (subset_connected(mask_adjacency(n, mask), full)) ++count;
  return count;
}

CensusReport census_builtin(int max_n, const BoundConstant& a, const CensusOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<MaskItem> items = builtin_survivors(max_n);
  std::vector<CensusRecord> records(items.size());
  parallel_for(items.size(), opt.workers, [&](size_t i) {
    records[i] = make_record(graph_from_mask(items[i].n, items[i].mask), a, opt.timing);
  });
  CensusReport rep = aggregate(std::move(records), a, opt);
  rep.source = "builtin";
  rep.max_n = max_n;
  if (opt.timing) {
    auto t1 = std::chrono::steady_clock::now();
    rep.wall_micros = std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();
  }
  return rep;
}

CensusReport census_graphs(const std::vector<std::string>& graph6_lines, const BoundConstant& a,
                           const CensusOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<Graph> graphs;
  graphs.reserve(graph6_lines.size());
  for (const std::string& line : graph6_lines) graphs.push_back(graph6_decode(line));
  std::vector<CensusRecord> records(graphs.size());
  parallel_for(graphs.size(), opt.workers,
               [&](size_t i) { records[i] = make_record(graphs[i], a, opt.timing); });
  CensusReport rep = aggregate(std::move(records), a, opt);
  rep.source = "file";
  if (opt.timing) {
    auto t1 = std::chrono::steady_clock::now();
    rep.wall_micros = std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();
  }
  return rep;
}

namespace {

ordered_json record_json(const CensusRecord& r) {
  ordered_json j;
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  j["edges"] = r.edges;
  j["cut_vertices"] = r.cut_vertices;
  j["classification"] = to_string(r.classification);
  j["oracle"] = r.oracle ? to_string(*r.oracle) : "none";
  j["agree"] = r.agree;
  j["inconclusive"] = r.classification == Outcome::inconclusive;
  j["micros"] = r.micros;
  return j;
}

}  // namespace

std::string report_json(const CensusReport& rep) {
  ordered_json j;
  j["schema"] = 1;
  j["bound"] = rep.bound;
  j["source"] = rep.source;
  if (rep.source == "builtin") j["max_n"] = rep.max_n;
  j["graphs"] = rep.total;
  j["totals"] = {{"less_than", rep.less},
                 {"equal", rep.equal},
                 {"greater_than", rep.greater},
                 {"inconclusive", rep.inconclusive},
                 {"not_applicable", rep.not_applicable}};
  j["contradiction_count"] = rep.contradictions;
  j["inconclusive_fraction"] = rep.inconclusive_fraction;
  if (rep.wall_micros) j["wall_micros"] = *rep.wall_micros;
  if (rep.records_emitted) {
    ordered_json arr = ordered_json::array();
    for (const CensusRecord& r : rep.records) arr.push_back(record_json(r));
    j["records"] = arr;
  }
  return j.dump(2) + "\n";
}

std::string records_csv(const CensusReport& rep) {
  std::ostringstream os;
  os << "graph6,n,edges,cut_vertices,classification,oracle,agree,micros\n";
  for (const CensusRecord& r : rep.records) {
    os << r.graph6 << ',' << r.n << ',' << r.edges << ',' << r.cut_vertices << ','
       << to_string(r.classification) << ',' << (r.oracle ? to_string(*r.oracle) : "none") << ','
       << (r.agree ? "true" : "false") << ',' << r.micros << '\n';
  }
  return os.str();
}

namespace {

Witness witness_for(const Graph& g, int u, Rel oracle, const BoundConstant& a,
                    const char* origin) {
  SpectralPosition sp = spectral_position(g, a);
  return Witness{graph6_encode(g), u, oracle, sp.count_above, sp.multiplicity, origin};
}

// Joins of three small graphs whose index equals the bound realize the
// shape where the second and third eigenvalue both sit at the bound while
// one cut-vertex is left undecided.
std::optional<Witness> constructed_equal_witness(const BoundConstant& a) {
  std::vector<Graph> pool;
  auto consider = [&](const Graph& g) {
    if (pool.size() >= 3) return;
    SpectralPosition sp = spectral_position(g, a);
    if (sp.count_above == 0 && sp.multiplicity == 1) {
      for (const Graph& p : pool)
        if (p == g) return;
      pool.push_back(g);
    }
  };
  for (int n = 2; n <= 10; ++n) consider(path_graph(n));
  for (int k = 1; k <= 9; ++k) consider(star_graph(k));
  for (int n = 3; n <= 10; ++n) consider(cycle_graph(n));
  for (int n = 2; n <= 6; ++n) consider(complete_graph(n));
  for (int k = 1; k <= 6; ++k) consider(double_broom(k));
  for (int x = 1; x <= 3; ++x)
    for (int y = x; y <= 4; ++y)
      for (int z = y; z <= 5; ++z) consider(spider_graph(x, y, z));
  if (pool.empty()) return std::nullopt;

  for (size_t i = 0; i < pool.size(); ++i)
    for (size_t j = i; j < pool.size(); ++j)
      for (size_t k = j; k < pool.size(); ++k) {
        Graph g = join_at_new_vertex({{pool[i], {0}}, {pool[j], {0}}, {pool[k], {0}}});
        for (int u : articulation_points(g)) {
          if (classify_at(g, u, a) != Classification::inconclusive) continue;
          if (compare_eigenvalue(g, 2, a) != Rel::equal) continue;
          Witness w = witness_for(g, u, Rel::equal, a, "constructed");
          if (w.multiplicity >= 2) return w;
        }
      }
  return std::nullopt;
}

}  // namespace

WitnessSearch find_inconclusive(const BoundConstant& a, int max_n) {
  if (max_n < 3) throw std::invalid_argument("find_inconclusive: need max_n >= 3");
  if (!is_positive(a)) throw std::invalid_argument("find_inconclusive: bound must be positive");
  WitnessSearch ws;
  ws.enumerated_max_n = std::min(max_n, 7);

  bool done = false;
  for (int n = 3; n <= ws.enumerated_max_n && !done; ++n) {
    unsigned total = 1u << (n * (n - 1) / 2);
    unsigned full = (1u << n) - 1;
    for (unsigned mask = 0; mask < total && !done; ++mask) {
      MaskAdj adj = mask_adjacency(n, mask);
      if (!subset_connected(adj, full)) continue;
      if (mask_cut_count(adj) == 0) continue;
      Graph g = graph_from_mask(n, mask);
      for (int u : articulation_points(g)) {
        if (classify_at(g, u, a) != Classification::inconclusive) continue;
        Rel oracle = compare_eigenvalue(g, 2, a);
        auto& slot = oracle == Rel::less ? ws.less : oracle == Rel::greater ? ws.greater : ws.equal;
        if (!slot) slot = witness_for(g, u, oracle, a, "enumeration");
      }
      done = ws.less && ws.greater && ws.equal;
    }
  }

  if (!ws.equal || ws.equal->multiplicity < 2) {
    if (auto built = constructed_equal_witness(a)) ws.equal = built;
  }
  return ws;
}

std::string witnesses_json(const WitnessSearch& ws, const BoundConstant& a, int max_n) {
  auto wjson = [](const std::optional<Witness>& w) -> ordered_json {
    if (!w) return nullptr;
    ordered_json j;
    j["graph6"] = w->graph6;
    j["cut_vertex"] = w->cut_vertex;
    j["oracle"] = to_string(w->oracle);
    j["eigenvalues_above"] = w->eigenvalues_above;
    j["multiplicity"] = w->multiplicity;
    j["origin"] = w->origin;
    return j;
  };
  ordered_json j;
  j["schema"] = 1;
  j["bound"] = a.text;
  j["max_n"] = max_n;
  j["enumerated_max_n"] = ws.enumerated_max_n;
  j["witnesses"] = {{"less", wjson(ws.less)}, {"greater", wjson(ws.greater)}, {"equal", wjson(ws.equal)}};
  return j.dump(2) + "\n";
}

}  // namespace lambda2
