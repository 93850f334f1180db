#include "subcount/oracle.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace subcount {

u64 FiniteAbelianGroup::order() const {
  u64 n = 1;
  for (u64 m : moduli) {
    if (m == 0) throw std::invalid_argument("FiniteAbelianGroup: zero modulus");
    n *= m;
  }
  return n;
}

namespace {

// Elements are mixed-radix indices over the moduli; add_table[a][b] is a+b.
std::vector<std::vector<u64>> build_add_table(
    const std::vector<u64>& moduli, u64 order) {
  std::vector<std::vector<u64>> residues(order,
                                         std::vector<u64>(moduli.size()));
  for (u64 idx = 0; idx < order; ++idx) {
    u64 rest = idx;
    for (std::size_t i = 0; i < moduli.size(); ++i) {
      residues[idx][i] = rest % moduli[i];
      rest /= moduli[i];
    }
  }
  std::vector<std::vector<u64>> add(order, std::vector<u64>(order));
  for (u64 a = 0; a < order; ++a) {
    for (u64 b = 0; b < order; ++b) {
      u64 idx = 0;
      u64 radix = 1;
      for (std::size_t i = 0; i < moduli.size(); ++i) {
        idx += (residues[a][i] + residues[b][i]) % moduli[i] * radix;
        radix *= moduli[i];
      }
      add[a][b] = idx;
    }
  }
  return add;
}

bool is_closed(const std::vector<u64>& elems,
               const std::vector<std::vector<u64>>& add,
               const std::vector<char>& member) {
  for (u64 a : elems)
    for (u64 b : elems)
      if (!member[add[a][b]]) return false;
  return true;
}

}  // namespace

SubgroupCensus enumerate_subgroups(const FiniteAbelianGroup& group,
                                   u64 order_bound) {
  const u64 order = group.order();
  if (order > order_bound)
    throw resource_limit_error("enumerate_subgroups: group order " +
                               std::to_string(order) + " exceeds bound " +
                               std::to_string(order_bound));
  const auto add = build_add_table(group.moduli, order);

  std::set<std::vector<u64>> seen;
  std::deque<std::vector<u64>> frontier;
  seen.insert({0});
  frontier.push_back({0});

  SubgroupCensus census;
  while (!frontier.empty()) {
    const std::vector<u64> sub = std::move(frontier.front());
    frontier.pop_front();

    std::vector<char> member(order, 0);
    for (u64 e : sub) member[e] = 1;
    if (!is_closed(sub, add, member))
      throw std::logic_error("enumerate_subgroups: produced a non-closed set");
    census.total += 1;
    census.by_order[sub.size()] += 1;

    for (u64 g = 0; g < order; ++g) {
      if (member[g]) continue;
      // <sub, g> is the union of the cosets sub + t*g until t*g lands in sub.
      std::vector<char> jmember = member;
      std::vector<u64> join = sub;
      for (u64 t = g; !member[t]; t = add[t][g]) {
        for (u64 h : sub) {
          const u64 e = add[h][t];
          if (!jmember[e]) {
            jmember[e] = 1;
            join.push_back(e);
          }
        }
      }
      std::sort(join.begin(), join.end());
      if (seen.insert(join).second) frontier.push_back(std::move(join));
    }
  }
  return census;
}

std::vector<std::int64_t> smith_normal_form(
    std::vector<std::vector<std::int64_t>> mat) {
  using i64 = std::int64_t;
  const std::size_t rows = mat.size();
  if (rows == 0 || mat[0].empty())
    throw std::invalid_argument("smith_normal_form: matrix must be nonempty");
  const std::size_t cols = mat[0].size();
  for (const auto& row : mat)
    if (row.size() != cols)
      throw std::invalid_argument("smith_normal_form: ragged matrix");

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // Pivot: smallest nonzero absolute value in the trailing submatrix.
      std::size_t pr = t, pc = t;
      i64 best = 0;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (mat[i][j] != 0 &&
              (best == 0 || std::abs(mat[i][j]) < std::abs(best))) {
            best = mat[i][j];
            pr = i;
            pc = j;
          }
      if (best == 0) break;  // trailing submatrix is zero
      std::swap(mat[t], mat[pr]);
      for (std::size_t i = 0; i < rows; ++i) std::swap(mat[i][t], mat[i][pc]);

      bool reduced = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const i64 q = mat[i][t] / mat[t][t];
        if (q != 0)
          for (std::size_t j = t; j < cols; ++j) mat[i][j] -= q * mat[t][j];
        if (mat[i][t] != 0) reduced = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const i64 q = mat[t][j] / mat[t][t];
        if (q != 0)
          for (std::size_t i = t; i < rows; ++i) mat[i][j] -= q * mat[i][t];
        if (mat[t][j] != 0) reduced = false;
      }
      if (reduced) break;
    }
  }

  std::vector<i64> diag(steps);
  for (std::size_t t = 0; t < steps; ++t) diag[t] = std::abs(mat[t][t]);
  // Repair the divisibility chain: diag(a,b) ~ diag(gcd(a,b), lcm(a,b)).
  for (std::size_t i = 0; i < diag.size(); ++i) {
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      if (diag[j] % std::max<i64>(diag[i], 1) == 0) continue;
      const i64 g = std::gcd(diag[i], diag[j]);
      diag[j] = g == 0 ? 0 : diag[i] / g * diag[j];
      diag[i] = g;
    }
  }
  // Zeros (free ranks) sort to the end.
  std::stable_partition(diag.begin(), diag.end(),
                        [](i64 x) { return x != 0; });
  return diag;
}

namespace {

AbelianPair pair_from_diag(const std::vector<std::int64_t>& diag) {
  std::vector<u64> factors;
  for (std::int64_t d : diag)
    if (d != 0) factors.push_back(static_cast<u64>(d));
  if (factors.size() != 2)
    throw std::logic_error("oracle: expected a rank <= 2 presentation");
  return {factors[0], factors[1]};
}

}  // namespace

AbelianPair quotient_structure_oracle(const SubgroupDescriptor& desc) {
  if (!desc.valid())
    throw std::invalid_argument("quotient_structure_oracle: invalid descriptor");
  using i64 = std::int64_t;
  const i64 m = static_cast<i64>(desc.m), n = static_cast<i64>(desc.n);
  const std::vector<std::vector<i64>> relations = {
      {m / static_cast<i64>(desc.a),
       static_cast<i64>(desc.ell) * (n / static_cast<i64>(desc.c))},
      {0, n / static_cast<i64>(desc.d)},
      {m, 0},
      {0, n},
  };
  return pair_from_diag(smith_normal_form(relations));
}

AbelianPair subgroup_structure_oracle(const SubgroupDescriptor& desc,
                                      u64 lcm_bound) {
  if (!desc.valid())
    throw std::invalid_argument("subgroup_structure_oracle: invalid descriptor");
  const u64 box = std::lcm(desc.m, desc.n);
  if (box > lcm_bound)
    throw resource_limit_error("subgroup_structure_oracle: lcm " +
                               std::to_string(box) + " exceeds bound " +
                               std::to_string(lcm_bound));
  // Generators of K.
  const u64 g1x = desc.m / desc.a;
  const u64 g1y = desc.ell * (desc.n / desc.c) % desc.n;
  const u64 g2y = desc.n / desc.d;

  using i64 = std::int64_t;
  std::vector<std::vector<i64>> relations = {
      {static_cast<i64>(box), 0},
      {0, static_cast<i64>(box)},
  };
  // box * k1 = box * k2 = 0, so every relation reduces into [0,box)^2.
  for (u64 i = 0; i < box; ++i) {
    for (u64 j = 0; j < box; ++j) {
      const bool zero_x = (i * g1x) % desc.m == 0;
      const bool zero_y = (i * g1y + j * g2y) % desc.n == 0;
      if (zero_x && zero_y && (i != 0 || j != 0))
        relations.push_back({static_cast<i64>(i), static_cast<i64>(j)});
    }
  }
  return pair_from_diag(smith_normal_form(relations));
}

}  // namespace subcount
