#include "gorconf/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <unordered_set>

namespace gorconf {

int popcount(VertexSet v) { return std::popcount(v); }

std::vector<int> vertices_of(VertexSet v) {
  std::vector<int> out;
  for (int i = 0; v; ++i, v >>= 1)
    if (v & 1) out.push_back(i);
  return out;
}

VertexSet vertex_set(const std::vector<int>& vs) {
  VertexSet out = 0;
  for (int v : vs) {
    if (v < 0 || v >= 64) throw Error(ErrorCode::ScaleExceeded, "vertex index out of range 0..63");
    out |= VertexSet{1} << v;
  }
  return out;
}

SimplicialComplex::SimplicialComplex(int n, std::vector<VertexSet> facets) : n_(n) {
  if (n < 0 || n > 64) throw Error(ErrorCode::ScaleExceeded, "vertex count must be in 0..64");
  const VertexSet all = n == 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
  for (auto f : facets) {
    if (f & ~all) throw Error(ErrorCode::InvalidArgument, "facet uses a vertex beyond n");
    const bool covered = std::any_of(facets.begin(), facets.end(), [f](VertexSet g) { return g != f && (f & g) == f; });
    if (covered) continue;
    if (std::find(facets_.begin(), facets_.end(), f) == facets_.end()) facets_.push_back(f);
  }
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](VertexSet f) { return std::popcount(f) == std::popcount(facets_.front()); });
}

int SimplicialComplex::facet_size() const {
  int d = 0;
  for (auto f : facets_) d = std::max(d, std::popcount(f));
  return d;
}

bool SimplicialComplex::contains_face(VertexSet f) const {
  return std::any_of(facets_.begin(), facets_.end(), [f](VertexSet g) { return (f & g) == f; });
}

std::vector<VertexSet> all_faces(const SimplicialComplex& delta) {
  std::unordered_set<VertexSet> seen;
  for (auto f : delta.facets()) {
    for (VertexSet sub = f;; sub = (sub - 1) & f) {
      seen.insert(sub);
      if (sub == 0) break;
    }
  }
  std::vector<VertexSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::int64_t> faces(const SimplicialComplex& delta) {
  if (delta.facets().empty()) return {};
  std::vector<std::int64_t> f(static_cast<std::size_t>(delta.facet_size()) + 1, 0);
  for (auto face : all_faces(delta)) ++f[static_cast<std::size_t>(std::popcount(face))];
  return f;
}

HVector f_to_h(const std::vector<std::int64_t>& f) {
  if (f.empty()) return HVector::zero();
  const auto d = static_cast<std::int64_t>(f.size()) - 1;
  std::vector<HVector::value_type> h;
  for (std::int64_t k = 0; k <= d; ++k) {
    std::int64_t v = 0;
    for (std::int64_t j = 0; j <= k; ++j) {
      const std::int64_t term = binomial(d - j, k - j) * f[static_cast<std::size_t>(j)];
      v += ((k - j) % 2 == 0) ? term : -term;
    }
    h.push_back(v);
  }
  return HVector(std::move(h));
}

std::vector<std::int64_t> h_to_f(const HVector& h, int d) {
  if (d < 0 || h.last_index() > d) throw Error(ErrorCode::InvalidArgument, "h-vector longer than d + 1");
  std::vector<std::int64_t> f;
  for (int j = 0; j <= d; ++j) {
    std::int64_t v = 0;
    for (int i = 0; i <= j; ++i) v += binomial(d - i, j - i) * h[i];
    f.push_back(v);
  }
  return f;
}

SimplicialComplex complex_of(const Configuration& x) {
  const int n = static_cast<int>(x.universe().size());
  if (n > 64) throw Error(ErrorCode::ScaleExceeded, "universe larger than 64 labels");
  const VertexSet all = n == 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
  std::vector<VertexSet> facets;
  for (const auto& vars : component_variables(x)) facets.push_back(all & ~vertex_set(vars));
  return SimplicialComplex(n, std::move(facets));
}

std::vector<std::vector<int>> sr_primes(const SimplicialComplex& delta) {
  const int n = delta.vertex_count();
  const VertexSet all = n == 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
  std::vector<std::vector<int>> out;
  for (auto f : delta.facets()) out.push_back(vertices_of(all & ~f));
  return out;
}

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& delta) {
  const int n = delta.vertex_count();
  const auto face_list = all_faces(delta);
  const std::unordered_set<VertexSet> face_set(face_list.begin(), face_list.end());
  std::set<VertexSet> minimal;
  // a minimal non-face is a face plus one vertex, all of whose one-vertex deletions are faces
  for (auto f : face_list) {
    for (int v = 0; v < n; ++v) {
      const VertexSet bit = VertexSet{1} << v;
      if (f & bit) continue;
      const VertexSet cand = f | bit;
      if (face_set.count(cand)) continue;
      bool all_faces_below = true;
      for (VertexSet rest = cand; rest && all_faces_below; rest &= rest - 1)
        all_faces_below = face_set.count(cand & ~(rest & (~rest + 1))) > 0;
      if (all_faces_below) minimal.insert(cand);
    }
  }
  std::vector<Monomial> gens;
  for (auto m : minimal) {
    Monomial x(static_cast<std::size_t>(n));
    for (int v : vertices_of(m)) x.exps[static_cast<std::size_t>(v)] = 1;
    gens.push_back(std::move(x));
  }
  if (delta.facets().empty()) gens.push_back(Monomial(static_cast<std::size_t>(n)));
  return MonomialIdeal(static_cast<std::size_t>(n), std::move(gens));
}

bool is_shelling(const SimplicialComplex& delta, const std::vector<VertexSet>& order) {
  if (!delta.is_pure()) throw Error(ErrorCode::NotPure, "shelling test needs a pure complex");
  std::vector<VertexSet> a = order, b = delta.facets();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw Error(ErrorCode::InvalidArgument, "order is not a permutation of the facets");
  for (std::size_t i = 1; i < order.size(); ++i) {
    const int ridge = std::popcount(order[i]) - 1;
    std::vector<VertexSet> meets;
    for (std::size_t j = 0; j < i; ++j) meets.push_back(order[i] & order[j]);
    // every maximal intersection must be a ridge of F_i
    for (auto m : meets) {
      if (std::popcount(m) == ridge) continue;
      const bool below_ridge =
          std::any_of(meets.begin(), meets.end(), [m, ridge](VertexSet k) { return std::popcount(k) == ridge && (m & k) == m; });
      if (!below_ridge) return false;
    }
  }
  return true;
}

SimplicialComplex boundary_complex(const SimplicialComplex& delta) {
  if (!delta.is_pure()) throw Error(ErrorCode::NotPure, "boundary needs a pure complex");
  std::map<VertexSet, int> count;
  std::vector<VertexSet> order;
  for (auto f : delta.facets()) {
    for (VertexSet rest = f; rest; rest &= rest - 1) {
      const VertexSet ridge = f & ~(rest & (~rest + 1));
      if (count[ridge]++ == 0) order.push_back(ridge);
    }
  }
  std::vector<VertexSet> out;
  for (auto r : order)
    if (count[r] == 1) out.push_back(r);
  return SimplicialComplex(delta.vertex_count(), std::move(out));
}

Ball billera_lee_ball(const HVector& h) {
  return billera_lee_ball(h, static_cast<int>(std::max<std::int64_t>(h[1], 1)), static_cast<int>(h.last_index()));
}

Ball billera_lee_ball(const HVector& h, int c, int t) {
  Ball ball;
  for (const auto& m : loim(h, static_cast<std::size_t>(c))) {
    VertexSet f = 0;
    for (int k : beta_bar(m, c, t)) f |= VertexSet{1} << (k - 1);
    ball.order.push_back(f);
  }
  ball.complex = SimplicialComplex(c + 2 * t, ball.order);
  return ball;
}

Ball billera_lee_polytope_ball(const HVector& h) {
  const SIParams p = si_params(h);
  if (p.c < 1) throw Error(ErrorCode::CodimTooSmall, "polytope mode needs h_1 >= 1");
  const int c = static_cast<int>(p.c), s = static_cast<int>(p.s), t = static_cast<int>(p.t);
  VertexSet outer = 0;  // V''
  for (int v = c - 1 + 2 * t; v <= s + c - 1; ++v) outer |= VertexSet{1} << v;
  Ball ball;
  for (const auto& m : loim(p.g, static_cast<std::size_t>(c - 1))) {
    VertexSet f = outer;
    if (c > 1)
      for (int k : beta_bar(m, c - 1, t)) f |= VertexSet{1} << (k - 1);
    ball.order.push_back(f);
  }
  ball.complex = SimplicialComplex(s + c, ball.order);
  return ball;
}

int polytope_vertex(const Label& x, int c, int s, int t) {
  if (c < 2) throw Error(ErrorCode::InvalidArgument, "label map needs c >= 2");
  if (x.kind == LabelKind::M) return 2 * x.index;
  const int low_top = t + (c - 3 >= 0 ? (c - 3) / 2 : -1);
  if (x.index <= low_top) return 2 * x.index + 1;
  return s + c - 1 - (x.index - t - (c - 1) / 2);
}

bool g_theorem_validate(const HVector& h) { return is_si_sequence(h); }

}  // namespace gorconf
