#include "random_systems.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace toradd::test {

namespace {

long gcd_row(const std::vector<long>& row) {
  long g = 0;
  for (long a : row) g = std::gcd(g, a);
  return g;
}

}  // namespace

std::vector<LatticeVector> random_unimodular(std::mt19937_64& rng, std::size_t n, int steps) {
  std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  if (n < 2) {
    if (rng() % 2) m[0][0] = -1;
  } else {
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<long> mult(-2, 2);
    for (int s = 0; s < steps; ++s) {
      const std::size_t a = pick(rng);
      std::size_t b = pick(rng);
      if (a == b) b = (b + 1) % n;
      switch (rng() % 3) {
        case 0: {  // row a += k row b
          const long k = mult(rng);
          for (std::size_t c = 0; c < n; ++c) m[a][c] += k * m[b][c];
          break;
        }
        case 1:
          std::swap(m[a], m[b]);
          break;
        default:
          for (auto& x : m[a]) x = -x;
      }
    }
  }
  std::vector<LatticeVector> out;
  for (const auto& row : m) out.emplace_back(std::vector<Integer>(row.begin(), row.end()));
  return out;
}

StructuredSample random_structured(std::mt19937_64& rng, const GeneratorLimits& lim) {
  std::uniform_int_distribution<std::size_t> pick_n(1, lim.max_n);
  std::uniform_int_distribution<std::size_t> pick_k(1, lim.max_extra);
  std::uniform_int_distribution<long> entry(0, lim.max_alpha);

  StructuredSample out;
  out.n = pick_n(rng);
  const std::size_t n = out.n;
  // In dimension 1 only one extra ray, -1, is available.
  const std::size_t k = n == 1 ? 1 : pick_k(rng);

  std::set<std::vector<long>> seen;
  for (int tries = 0; out.alpha.size() < k && tries < 1000; ++tries) {
    std::vector<long> row(n);
    for (auto& a : row) a = entry(rng);
    if (gcd_row(row) != 1 || !seen.insert(row).second) continue;
    out.alpha.push_back(row);
  }
  if (lim.positive_columns) {
    for (std::size_t c = 0; c < n; ++c) {
      bool positive = false;
      for (const auto& row : out.alpha) positive = positive || row[c] > 0;
      if (positive) continue;
      // Raise the entry in a random row; keep rows primitive and distinct.
      for (int tries = 0; tries < 100 && !positive; ++tries) {
        auto& row = out.alpha[rng() % out.alpha.size()];
        auto cand = row;
        cand[c] = 1 + static_cast<long>(rng() % static_cast<unsigned long>(lim.max_alpha));
        if (gcd_row(cand) != 1 || seen.count(cand)) continue;
        seen.erase(row);
        row = cand;
        seen.insert(row);
        positive = true;
      }
      if (!positive) return random_structured(rng, lim);
    }
  }

  std::vector<LatticeVector> generated;
  for (std::size_t i = 0; i < n; ++i) generated.push_back(LatticeVector::unit(n, i));
  for (const auto& row : out.alpha) {
    std::vector<Integer> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = -row[i];
    generated.emplace_back(v);
  }

  const auto u = random_unimodular(rng, n);
  for (auto& v : generated) {
    std::vector<Integer> w(n, Integer(0));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) w[r] += u[r][c] * v[c];
    }
    v = LatticeVector(w);
  }

  std::vector<std::size_t> perm(generated.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  out.rays.resize(generated.size());
  out.basis_at.resize(n);
  out.extra_at.resize(out.alpha.size());
  for (std::size_t g = 0; g < generated.size(); ++g) {
    out.rays[perm[g]] = generated[g];
    if (g < n) {
      out.basis_at[g] = perm[g];
    } else {
      out.extra_at[g - n] = perm[g];
    }
  }
  return out;
}

std::vector<LatticeVector> random_rays(std::mt19937_64& rng, std::size_t n, std::size_t m,
                                       long bound) {
  std::uniform_int_distribution<long> entry(-bound, bound);
  std::vector<LatticeVector> out;
  while (out.size() < m) {
    std::vector<Integer> v(n);
    for (auto& x : v) x = entry(rng);
    LatticeVector lv(v);
    if (lv.is_zero()) continue;
    lv = primitive(lv);
    if (std::find(out.begin(), out.end(), lv) == out.end()) out.push_back(lv);
  }
  return out;
}

}  // namespace toradd::test
