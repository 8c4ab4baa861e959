#include "root_system.hpp"

#include <algorithm>
#include <set>

#include "error.hpp"

namespace hkl::lattice {

namespace {

bool lex_positive(const Vec& v) {
  for (const auto& c : v)
    if (c != 0) return c > 0;
  return false;
}

Vec subtract(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

}  // namespace

RootLabel identify_dynkin(const IntMatrix& g) {
  const std::size_t n = g.rows();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (g(i, i) != -2) fail(ErrorCode::Internal, "simple root of norm other than -2");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (g(i, j) == 0) continue;
      if (g(i, j) != 1) fail(ErrorCode::Internal, "simple roots with inner product " + g(i, j).get_str());
      adj[i].push_back(j);
      adj[j].push_back(i);
    }
  }
  std::vector<bool> seen(n, false);
  std::vector<Component> comps;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> nodes{s};
    seen[s] = true;
    for (std::size_t k = 0; k < nodes.size(); ++k)
      for (auto w : adj[nodes[k]])
        if (!seen[w]) {
          seen[w] = true;
          nodes.push_back(w);
        }
    std::size_t edges = 0, branch = n, branches = 0;
    for (auto v : nodes) {
      edges += adj[v].size();
      if (adj[v].size() > 3) fail(ErrorCode::Internal, "Dynkin node of degree > 3");
      if (adj[v].size() == 3) {
        branch = v;
        ++branches;
      }
    }
    edges /= 2;
    if (edges + 1 != nodes.size()) fail(ErrorCode::Internal, "Dynkin component is not a tree");
    const int k = static_cast<int>(nodes.size());
    if (branches == 0) {
      comps.push_back({'A', k});
      continue;
    }
    if (branches > 1) fail(ErrorCode::Internal, "Dynkin component with several branch nodes");
    std::vector<int> legs;
    for (auto start : adj[branch]) {
      int len = 1;
      std::size_t prev = branch, cur = start;
      while (adj[cur].size() == 2) {
        std::size_t nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = nxt;
        ++len;
      }
      legs.push_back(len);
    }
    std::sort(legs.begin(), legs.end());
    if (legs[0] == 1 && legs[1] == 1) comps.push_back({'D', k});
    else if (legs == std::vector<int>{1, 2, 2}) comps.push_back({'E', 6});
    else if (legs == std::vector<int>{1, 2, 3}) comps.push_back({'E', 7});
    else if (legs == std::vector<int>{1, 2, 4}) comps.push_back({'E', 8});
    else fail(ErrorCode::Internal, "Dynkin component is not of ADE type");
  }
  return RootLabel(std::move(comps));
}

IntegralLattice lll_reduced(const IntegralLattice& lattice) {
  auto t = lll_reduce_gram(to_rational(-lattice.gram()));
  return IntegralLattice(t * lattice.gram() * t.transpose());
}

RootSystemInfo classify_root_sublattice(const IntegralLattice& lattice, bool extended) {
  RootSystemInfo info;
  auto roots = vectors_of_norm(lattice, -2);
  info.root_count = roots.size();
  std::vector<Vec> positive;
  for (auto& r : roots)
    if (lex_positive(r)) positive.push_back(r);
  std::set<Vec> pos_set(positive.begin(), positive.end());
  for (const auto& a : positive) {
    bool decomposable = false;
    for (const auto& b : positive) {
      if (&a == &b) continue;
      if (pos_set.count(subtract(a, b))) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) info.simple_roots.push_back(a);
  }
  const std::size_t k = info.simple_roots.size();
  IntMatrix sg(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) sg(i, j) = lattice.inner(info.simple_roots[i], info.simple_roots[j]);
  info.label = identify_dynkin(sg);
  if (static_cast<long>(info.root_count) != info.label.root_count())
    fail(ErrorCode::Internal, "root count disagrees with the identified Dynkin type");

  if (extended) {
    const std::size_t n = lattice.rank();
    IntMatrix sgm(k, n);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t c = 0; c < n; ++c) {
        Integer s = 0;
        for (std::size_t j = 0; j < n; ++j) s += info.simple_roots[i][j] * lattice.gram()(j, c);
        sgm(i, c) = s;
      }
    IntMatrix kernel = k ? integer_kernel(sgm) : IntMatrix::identity(n);
    if (kernel.rows() > 0) {
      IntegralLattice perp = lll_reduced(IntegralLattice(kernel * lattice.gram() * kernel.transpose()));
      std::vector<Vec> kept;
      for (const auto& v : vectors_of_norm(perp, -4)) {
        bool orth = true;
        for (const auto& w : kept)
          if (perp.inner(v, w) != 0) {
            orth = false;
            break;
          }
        if (orth) kept.push_back(v);
      }
      info.d1_count = kept.size();
      std::vector<Component> comps = info.label.display_components();
      for (std::size_t i = 0; i < kept.size(); ++i) comps.push_back({'D', 1});
      info.label = RootLabel(std::move(comps));
    }
  }
  return info;
}

}  // namespace hkl::lattice
