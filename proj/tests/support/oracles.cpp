#include "oracles.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>

namespace toradd::test {

Integer cofactor_det(const Matrix& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  Integer det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c] == 0) continue;
    Matrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(a[r][k]);
      }
      minor.push_back(row);
    }
    const Integer term = a[0][c] * cofactor_det(minor);
    det += (c % 2 == 0) ? term : Integer(-term);
  }
  return det;
}

namespace {

// Columns are the given vectors.
Matrix columns(const std::vector<LatticeVector>& vs) {
  const std::size_t n = vs.front().dim();
  Matrix a(n, std::vector<Integer>(vs.size()));
  for (std::size_t c = 0; c < vs.size(); ++c) {
    for (std::size_t r = 0; r < n; ++r) a[r][c] = vs[c][r];
  }
  return a;
}

void for_each_subset(std::size_t m, std::size_t n,
                     const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(n);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == n) {
      f(idx);
      return;
    }
    for (std::size_t i = start; i + (n - pos) <= m; ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
}

}  // namespace

std::vector<std::vector<std::size_t>> collections_by_subset_scan(
    const std::vector<LatticeVector>& rays) {
  const std::size_t n = rays.front().dim();
  std::vector<std::vector<std::size_t>> out;
  for_each_subset(rays.size(), n, [&](const std::vector<std::size_t>& idx) {
    std::vector<LatticeVector> b;
    for (auto i : idx) b.push_back(rays[i]);
    const Matrix a = columns(b);
    const Integer det = cofactor_det(a);
    if (det != 1 && det != -1) return;
    for (std::size_t j = 0; j < rays.size(); ++j) {
      if (std::find(idx.begin(), idx.end(), j) != idx.end()) continue;
      for (std::size_t c = 0; c < n; ++c) {
        Matrix r = a;
        for (std::size_t k = 0; k < n; ++k) r[k][c] = rays[j][k];
        // coordinate c of p_j is det(r) / det; nonpositive required
        if (cofactor_det(r) * det > 0) return;
      }
    }
    out.push_back(idx);
  });
  return out;
}

std::vector<std::vector<LatticeVector>> roots_by_box_scan(const std::vector<LatticeVector>& rays,
                                                          long radius) {
  const std::size_t n = rays.front().dim();
  std::vector<std::vector<LatticeVector>> out(rays.size());
  std::vector<long> e(n, -radius);
  while (true) {
    std::vector<Integer> coords(e.begin(), e.end());
    const LatticeVector w(coords);
    std::size_t minus = rays.size();
    bool ok = true;
    for (std::size_t j = 0; j < rays.size() && ok; ++j) {
      Integer p = 0;
      for (std::size_t k = 0; k < n; ++k) p += rays[j][k] * coords[k];
      if (p == -1 && minus == rays.size()) {
        minus = j;
      } else if (p < 0) {
        ok = false;
      }
    }
    if (ok && minus < rays.size()) out[minus].push_back(w);
    std::size_t k = 0;
    while (k < n && e[k] == radius) e[k++] = -radius;
    if (k == n) break;
    ++e[k];
  }
  for (auto& s : out) std::sort(s.begin(), s.end());
  return out;
}

bool in_character_image(const std::vector<LatticeVector>& rays, const std::vector<long>& target) {
  const std::size_t n = rays.front().dim();
  bool found = false;
  bool member = false;
  for_each_subset(rays.size(), n, [&](const std::vector<std::size_t>& idx) {
    if (found) return;
    // rows p_j for j in idx
    Matrix a;
    for (auto j : idx) a.push_back(rays[j].coords());
    const Integer det = cofactor_det(a);
    if (det == 0) return;
    found = true;
    std::vector<Integer> w(n);
    for (std::size_t c = 0; c < n; ++c) {
      Matrix r = a;
      for (std::size_t k = 0; k < n; ++k) r[k][c] = target[idx[k]];
      const Integer num = cofactor_det(r);
      if (num % det != 0) return;
      w[c] = num / det;
    }
    for (std::size_t j = 0; j < rays.size(); ++j) {
      Integer p = 0;
      for (std::size_t k = 0; k < n; ++k) p += rays[j][k] * w[k];
      if (p != target[j]) return;
    }
    member = true;
  });
  return member;
}

std::vector<std::vector<unsigned>> class_of_variable(const std::vector<LatticeVector>& rays,
                                                     std::size_t i, unsigned max_degree) {
  const std::size_t m = rays.size();
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> d(m, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t pos, unsigned left) {
    if (pos == m) {
      std::vector<long> t(d.begin(), d.end());
      t[i] -= 1;
      if (in_character_image(rays, t)) out.push_back(d);
      return;
    }
    for (unsigned a = 0; a <= left; ++a) {
      d[pos] = a;
      rec(pos + 1, left - a);
    }
    d[pos] = 0;
  };
  rec(0, max_degree);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::string fixture_path(const std::string& name) {
  return std::string(TORADD_FIXTURE_DIR) + "/" + name + ".json";
}

FanFile load_fixture(const std::string& name) { return load_fan_file(fixture_path(name)); }

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& entry : std::filesystem::directory_iterator(TORADD_FIXTURE_DIR)) {
    if (entry.path().extension() == ".json") out.push_back(entry.path().stem().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace toradd::test
