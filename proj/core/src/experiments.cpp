#include "simpdim/experiments.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "simpdim/barycentric.hpp"
#include "simpdim/dimension.hpp"
#include "simpdim/rng.hpp"

namespace simpdim {

namespace {

// floor(p * 2^64), with the p <= 0 / p >= 1 boundaries handled by flag
struct EdgeThreshold {
  std::uint64_t value = 0;
  int boundary = 0;  // -1 never, +1 always, 0 compare

  explicit EdgeThreshold(const Rat& p) {
    if (p >= 1) {
      boundary = 1;
    } else if (p <= 0) {
      boundary = -1;
    } else {
      Int t = (p.get_num() << 64) / p.get_den();
      mpz_export(&value, nullptr, -1, 8, 0, 0, t.get_mpz_t());
    }
  }
  bool present(std::uint64_t word) const {
    return boundary != 0 ? boundary > 0 : word < value;
  }
};

Int binom_int(int n, int k) {
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), (unsigned long)n, (unsigned long)k);
  return b;
}

}  // namespace

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
  std::vector<std::pair<int, int>> edges;
  int e = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++e)
      if (mask >> e & 1) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

Graph sample_er(const ErParams& params, std::uint64_t sample_index) {
  if (params.n < 0) throw std::invalid_argument("sample_er needs n >= 0");
  EdgeThreshold th(params.p);
  std::vector<std::pair<int, int>> edges;
  std::uint64_t e = 0;
  for (int j = 1; j < params.n; ++j)
    for (int i = 0; i < j; ++i, ++e)
      if (th.present(counter_rng(params.seed, sample_index, e)))
        edges.emplace_back(i, j);
  return Graph(params.n, std::move(edges));
}

void enumerate_labeled_graphs(int n,
                              const std::function<void(const Graph&)>& fn) {
  if (n < 0 || n > 7)
    throw std::invalid_argument("enumerate_labeled_graphs supports 0 <= n <= 7");
  int m = n * (n - 1) / 2;
  for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask)
    fn(graph_from_edge_mask(n, mask));
}

Rat er_dim_avg_expectation(int n, const Rat& p) {
  if (n < 1 || n > 7)
    throw std::invalid_argument("er_dim_avg_expectation supports 1 <= n <= 7");
  int m = n * (n - 1) / 2;
  std::vector<Rat> pp(m + 1), qq(m + 1);
  pp[0] = qq[0] = 1;
  for (int i = 1; i <= m; ++i) {
    pp[i] = pp[i - 1] * p;
    qq[i] = qq[i - 1] * (1 - p);
  }
  Rat acc = 0;
  enumerate_labeled_graphs(n, [&](const Graph& g) {
    int e = (int)g.edges().size();
    acc += pp[e] * qq[m - e] * dim_avg_plus(whitney_complex(g));
  });
  return acc;
}

std::vector<Rat> inductive_dim_polynomial(int n) {
  if (n < 0) throw std::invalid_argument("inductive_dim_polynomial needs n >= 0");
  // d_k as coefficient vectors, built up through the recursion
  std::vector<std::vector<Rat>> d(n + 1);
  d[0] = {Rat(-1)};
  for (int k = 0; k < n; ++k) {
    // d_{k+1} = 1 + sum_{j=0}^{k} C(k,j) p^j (1-p)^(k-j) d_j
    std::vector<Rat> acc{Rat(1)};
    for (int j = 0; j <= k; ++j) {
      Int c = binom_int(k, j);
      // expand C(k,j) p^j (1-p)^(k-j) * d_j
      for (int i = 0; i <= k - j; ++i) {
        Rat coef = Rat(c * binom_int(k - j, i));
        if (i % 2 == 1) coef = -coef;
        for (std::size_t deg = 0; deg < d[j].size(); ++deg) {
          std::size_t target = deg + j + i;
          if (acc.size() <= target) acc.resize(target + 1, Rat(0));
          acc[target] += coef * d[j][deg];
        }
      }
    }
    while (!acc.empty() && acc.back() == 0) acc.pop_back();
    d[k + 1] = std::move(acc);
  }
  return d[n];
}

Rat delta(const Complex& G) {
  return dim_avg_plus(G) - (dim_inductive(G) + 1) / 2;
}

DeltaMaxResult delta_max(int n, int threads) {
  if (n < 1 || n > 6) throw std::invalid_argument("delta_max supports 1 <= n <= 6");
  if (threads < 1) threads = 1;
  int m = n * (n - 1) / 2;
  std::uint64_t total = 1ULL << m;
  struct Partial {
    Rat best;
    std::vector<std::uint64_t> masks;
    bool any = false;
  };
  std::vector<Partial> parts(threads);
  auto work = [&](int t) {
    Partial& pt = parts[t];
    for (std::uint64_t mask = t; mask < total; mask += (std::uint64_t)threads) {
      Rat d = delta(whitney_complex(graph_from_edge_mask(n, mask)));
      if (!pt.any || d > pt.best) {
        pt.best = d;
        pt.masks.assign(1, mask);
        pt.any = true;
      } else if (d == pt.best) {
        pt.masks.push_back(mask);
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  DeltaMaxResult res{Rat(0), {}, Graph(0)};
  bool any = false;
  for (const Partial& pt : parts) {
    if (!pt.any) continue;
    if (!any || pt.best > res.value) {
      res.value = pt.best;
      res.maximizer_masks = pt.masks;
      any = true;
    } else if (pt.best == res.value) {
      res.maximizer_masks.insert(res.maximizer_masks.end(), pt.masks.begin(),
                                 pt.masks.end());
    }
  }
  std::sort(res.maximizer_masks.begin(), res.maximizer_masks.end());
  res.first_maximizer = graph_from_edge_mask(n, res.maximizer_masks.at(0));
  return res;
}

std::vector<Rat> refinement_trajectory(const FVector& fv, int steps) {
  if (steps < 0) throw std::invalid_argument("steps must be >= 0");
  std::vector<Rat> out;
  out.reserve(steps + 1);
  FVector cur = fv;
  out.push_back(dim_avg_plus(cur));
  for (int s = 0; s < steps; ++s) {
    cur = refine_fvector(cur);
    out.push_back(dim_avg_plus(cur));
  }
  return out;
}

std::vector<SurveyRow> er_survey(int n, const Rat& p_from, const Rat& p_to,
                                 int steps, int samples, std::uint64_t seed,
                                 int threads) {
  if (steps < 0 || samples < 1)
    throw std::invalid_argument("er_survey needs steps >= 0, samples >= 1");
  if (steps == 0 && !(p_from == p_to))
    throw std::invalid_argument("zero steps needs p_from == p_to");
  if (threads < 1) threads = 1;
  std::vector<SurveyRow> rows;
  for (int i = 0; i <= steps; ++i) {
    Rat p = steps == 0 ? p_from
                       : p_from + (p_to - p_from) * Rat(i) / Rat(steps);
    ErParams params{n, p, seed};
    // global sample index keyed to the grid point: deterministic under
    // any thread partitioning
    std::uint64_t base = (std::uint64_t)i * (std::uint64_t)samples;
    std::vector<Rat> vals(samples);
    auto work = [&](int t) {
      for (int s = t; s < samples; s += threads)
        vals[s] = delta(whitney_complex(sample_er(params, base + s)));
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
      for (auto& th : pool) th.join();
    }
    Rat sum = 0;
    for (const Rat& v : vals) sum += v;  // fixed order: exact and stable
    rows.push_back(SurveyRow{p, sum / Rat(samples), samples});
  }
  return rows;
}

}  // namespace simpdim
