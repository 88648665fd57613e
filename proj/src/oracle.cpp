#include "gorconf/oracle.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace gorconf::oracle {

namespace {

void require_same_context(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.nvars() != b.nvars())
    throw Error(ErrorCode::ContextMismatch, "ideals live in rings with different variable counts");
}

void count_standard(const MonomialIdeal& ideal, Monomial& cur, std::size_t first_var, int deg, int cutoff,
                    std::vector<std::int64_t>& dims) {
  ++dims[static_cast<std::size_t>(deg)];
  if (deg == cutoff) return;
  for (std::size_t v = first_var; v < cur.nvars(); ++v) {
    ++cur.exps[v];
    if (!ideal.contains(cur)) count_standard(ideal, cur, v, deg + 1, cutoff, dims);
    --cur.exps[v];
  }
}

std::vector<std::uint64_t> minimal_masks(std::vector<std::uint64_t> masks) {
  std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<std::uint64_t> kept;
  for (auto m : masks) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [m](std::uint64_t k) { return (k & m) == k; });
    if (!redundant) kept.push_back(m);
  }
  return kept;
}

// Row echelon rank over Q with integer rows kept primitive.
std::size_t integer_rank(std::vector<std::vector<mpz_class>> rows) {
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  const std::size_t ncols = rows.front().size();
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t pivot = rows.size();
    for (std::size_t r = rank; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      if (pivot == rows.size() || abs(rows[r][col]) < abs(rows[pivot][col])) pivot = r;
    }
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const auto& prow = rows[rank];
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      mpz_class a = rows[r][col], p = prow[col];
      mpz_class content = 0;
      for (std::size_t k = col; k < ncols; ++k) {
        rows[r][k] = rows[r][k] * p - prow[k] * a;
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), rows[r][k].get_mpz_t());
      }
      if (content > 1)
        for (std::size_t k = col; k < ncols; ++k) mpz_divexact(rows[r][k].get_mpz_t(), rows[r][k].get_mpz_t(), content.get_mpz_t());
    }
    ++rank;
  }
  return rank;
}

// Reduced homology ranks of the complex generated by `facets` (vertex bitsets).
// Returns true iff H~_k vanishes for all k < dim.
bool acyclic_below_top(const std::vector<VertexSet>& facets) {
  std::set<VertexSet> face_set;
  int top = 0;
  for (auto f : facets) {
    top = std::max(top, std::popcount(f));
    for (VertexSet sub = f;; sub = (sub - 1) & f) {
      face_set.insert(sub);
      if (sub == 0) break;
    }
  }
  // faces_by_size[k] = faces with k vertices (dimension k-1)
  std::vector<std::vector<VertexSet>> by_size(static_cast<std::size_t>(top) + 2);
  for (auto f : face_set) by_size[static_cast<std::size_t>(std::popcount(f))].push_back(f);

  auto boundary_rank = [&](std::size_t k) -> std::size_t {  // map from size-k faces to size-(k-1) faces
    if (k == 0 || k >= by_size.size() || by_size[k].empty() || by_size[k - 1].empty()) return 0;
    const auto& lower = by_size[k - 1];
    std::vector<std::vector<mpz_class>> rows;
    for (auto f : by_size[k]) {
      std::vector<mpz_class> row(lower.size(), 0);
      int sign = 1;
      for (VertexSet rest = f; rest; rest &= rest - 1) {
        const VertexSet bit = rest & (~rest + 1);
        const auto pos = std::lower_bound(lower.begin(), lower.end(), f & ~bit) - lower.begin();
        row[static_cast<std::size_t>(pos)] = sign;
        sign = -sign;
      }
      rows.push_back(std::move(row));
    }
    return integer_rank(std::move(rows));
  };

  std::vector<std::size_t> ranks(by_size.size() + 1, 0);
  for (std::size_t k = 1; k < by_size.size(); ++k) ranks[k] = boundary_rank(k);
  // H~ in dimension k-1 lives on size-k faces; need vanishing for sizes 0..top-1
  for (std::size_t k = 0; k + 1 <= static_cast<std::size_t>(top); ++k) {
    const std::int64_t h = static_cast<std::int64_t>(by_size[k].size()) - static_cast<std::int64_t>(ranks[k]) -
                           static_cast<std::int64_t>(ranks[k + 1]);
    if (h != 0) return false;
  }
  return true;
}

}  // namespace

std::vector<std::int64_t> standard_monomials(const MonomialIdeal& ideal, int cutoff) {
  if (cutoff < 0) throw Error(ErrorCode::InvalidArgument, "cutoff must be >= 0");
  std::vector<std::int64_t> dims(static_cast<std::size_t>(cutoff) + 1, 0);
  Monomial cur(ideal.nvars());
  if (ideal.contains(cur)) return dims;
  count_standard(ideal, cur, 0, 0, cutoff, dims);
  return dims;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_context(a, b);
  std::vector<Monomial> gens;
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) gens.push_back(lcm(x, y));
  return MonomialIdeal(a.nvars(), std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_context(a, b);
  std::vector<Monomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.nvars(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& a, std::size_t var) {
  if (var >= a.nvars()) throw Error(ErrorCode::ContextMismatch, "colon variable out of range");
  std::vector<Monomial> gens = a.generators();
  for (auto& g : gens)
    if (g.exps[var] > 0) --g.exps[var];
  return MonomialIdeal(a.nvars(), std::move(gens));
}

bool equals(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_context(a, b);
  return a == b;
}

MonomialIdeal prime_ideal(std::size_t nvars, const std::vector<int>& vars) {
  std::vector<Monomial> gens;
  for (int v : vars) gens.push_back(variable(nvars, static_cast<std::size_t>(v)));
  return MonomialIdeal(nvars, std::move(gens));
}

MonomialIdeal intersect_primes(std::size_t nvars, const std::vector<std::vector<int>>& primes) {
  if (nvars > 64) throw Error(ErrorCode::ScaleExceeded, "more than 64 variables");
  std::vector<std::uint64_t> cur{0};  // unit ideal
  for (const auto& p : primes) {
    std::uint64_t pmask = 0;
    for (int v : p) pmask |= std::uint64_t{1} << v;
    std::vector<std::uint64_t> next;
    for (auto g : cur) {
      if (g & pmask) {
        next.push_back(g);
        continue;
      }
      for (int v : p) next.push_back(g | (std::uint64_t{1} << v));
    }
    cur = minimal_masks(std::move(next));
  }
  std::vector<Monomial> gens;
  for (auto g : cur) {
    Monomial m(nvars);
    for (std::size_t v = 0; v < nvars; ++v) m.exps[v] = static_cast<int>((g >> v) & 1);
    gens.push_back(std::move(m));
  }
  return MonomialIdeal(nvars, std::move(gens));
}

std::size_t rational_rank(const std::vector<std::vector<std::int64_t>>& rows) {
  std::vector<std::vector<mpz_class>> z;
  for (const auto& r : rows) {
    std::vector<mpz_class> zr;
    for (auto v : r) zr.emplace_back(static_cast<long>(v));
    z.push_back(std::move(zr));
  }
  return integer_rank(std::move(z));
}

BettiTable koszul_betti(const MonomialIdeal& ideal, std::optional<int> cutoff) {
  const std::size_t n = ideal.nvars();
  if (n > kMaxKoszulVariables)
    throw Error(ErrorCode::ScaleExceeded, "Koszul oracle limited to " + std::to_string(kMaxKoszulVariables) +
                                              " variables, got " + std::to_string(n));
  BettiTable table;
  if (ideal.is_unit()) return table;
  Monomial top(n);
  for (const auto& g : ideal.generators()) top = lcm(top, g);
  const int max_deg = cutoff.value_or(top.degree());
  if (max_deg > kMaxKoszulDegree)
    throw Error(ErrorCode::ScaleExceeded, "Koszul oracle limited to internal degree " +
                                              std::to_string(kMaxKoszulDegree) + ", need " + std::to_string(max_deg));

  Monomial a(n);
  // odometer over the box 0 <= a <= top
  while (true) {
    const int deg = a.degree();
    if (deg <= max_deg) {
      std::uint64_t supp = 0;
      for (std::size_t v = 0; v < n; ++v)
        if (a.exps[v] > 0) supp |= std::uint64_t{1} << v;
      const int k = std::popcount(supp);
      // basis[i] = subsets S of supp with |S| = i and x^{a - 1_S} standard
      std::vector<std::vector<std::uint64_t>> basis(static_cast<std::size_t>(k) + 1);
      for (std::uint64_t s = supp;; s = (s - 1) & supp) {
        Monomial m = a;
        for (std::size_t v = 0; v < n; ++v)
          if ((s >> v) & 1) --m.exps[v];
        if (!ideal.contains(m)) basis[static_cast<std::size_t>(std::popcount(s))].push_back(s);
        if (s == 0) break;
      }
      for (auto& b : basis) std::sort(b.begin(), b.end());
      auto rank_of = [&](std::size_t i) -> std::size_t {  // d_i : C_i -> C_{i-1}
        if (i == 0 || i > static_cast<std::size_t>(k) || basis[i].empty() || basis[i - 1].empty()) return 0;
        const auto& lower = basis[i - 1];
        std::vector<std::vector<mpz_class>> rows;
        for (auto s : basis[i]) {
          std::vector<mpz_class> row(lower.size(), 0);
          int sign = 1;
          for (std::uint64_t rest = s; rest; rest &= rest - 1) {
            const std::uint64_t bit = rest & (~rest + 1);
            auto it = std::lower_bound(lower.begin(), lower.end(), s & ~bit);
            if (it != lower.end() && *it == (s & ~bit)) row[static_cast<std::size_t>(it - lower.begin())] = sign;
            sign = -sign;
          }
          rows.push_back(std::move(row));
        }
        return integer_rank(std::move(rows));
      };
      std::vector<std::size_t> ranks(static_cast<std::size_t>(k) + 2, 0);
      for (std::size_t i = 1; i <= static_cast<std::size_t>(k); ++i) ranks[i] = rank_of(i);
      for (std::size_t i = 0; i <= static_cast<std::size_t>(k); ++i) {
        const auto h = static_cast<std::int64_t>(basis[i].size()) - static_cast<std::int64_t>(ranks[i]) -
                       static_cast<std::int64_t>(ranks[i + 1]);
        if (h > 0) table.add(static_cast<int>(i), deg, h);
      }
    }
    std::size_t v = 0;
    while (v < n && a.exps[v] == top.exps[v]) a.exps[v++] = 0;
    if (v == n) break;
    ++a.exps[v];
  }
  return table;
}

bool reisner_cm(const SimplicialComplex& delta) {
  if (delta.vertex_count() > kMaxReisnerVertices)
    throw Error(ErrorCode::ScaleExceeded, "Reisner check limited to " + std::to_string(kMaxReisnerVertices) + " vertices");
  for (auto face : all_faces(delta)) {
    std::vector<VertexSet> link;
    for (auto f : delta.facets())
      if ((f & face) == face) link.push_back(f & ~face);
    if (!acyclic_below_top(link)) return false;
  }
  return true;
}

}  // namespace gorconf::oracle
