#pragma once

#include <cstdint>
#include <vector>

#include "gorconf/configurations.hpp"
#include "gorconf/sequences.hpp"

namespace gorconf {

using VertexSet = std::uint64_t;

/// Complex on vertices 0..n-1 stored by its facets (bitsets).
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Drops non-maximal and duplicate faces; facet order of first occurrence is kept.
  SimplicialComplex(int n, std::vector<VertexSet> facets);

  int vertex_count() const noexcept { return n_; }
  const std::vector<VertexSet>& facets() const noexcept { return facets_; }
  bool is_pure() const;
  /// Largest facet size (the Krull dimension of the face ring).
  int facet_size() const;
  bool contains_face(VertexSet f) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> facets_;
};

int popcount(VertexSet v);
std::vector<int> vertices_of(VertexSet v);
VertexSet vertex_set(const std::vector<int>& vs);

/// f_{-1}, f_0, ..., f_{d-1}.
std::vector<std::int64_t> faces(const SimplicialComplex& delta);
/// All faces, including the empty face, in increasing numeric order.
std::vector<VertexSet> all_faces(const SimplicialComplex& delta);
HVector f_to_h(const std::vector<std::int64_t>& f);
std::vector<std::int64_t> h_to_f(const HVector& h, int d);

/// Facets are the complements of the component label sets within the universe.
SimplicialComplex complex_of(const Configuration& x);
/// Minimal primes of the Stanley-Reisner ideal: the facet complements, as variable-index sets.
std::vector<std::vector<int>> sr_primes(const SimplicialComplex& delta);

/// Ideal generated by the minimal non-faces (squarefree monomials in n variables).
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& delta);

bool is_shelling(const SimplicialComplex& delta, const std::vector<VertexSet>& order);
SimplicialComplex boundary_complex(const SimplicialComplex& delta);

struct Ball {
  SimplicialComplex complex;
  std::vector<VertexSet> order;  // shelling order F_1, ..., F_p
};

/// c = h_1, t = last index of h; facets beta_bar_{c,t}(m_i) over loim(h, c).
Ball billera_lee_ball(const HVector& h);
Ball billera_lee_ball(const HVector& h, int c, int t);
/// F_i = beta_bar_{c-1,t}(m_i) u V'' over loim(g, c-1), on s + c vertices.
Ball billera_lee_polytope_ball(const HVector& h);

/// Variable index of each label of build_gorenstein(h)'s universe in the boundary complex
/// of the polytope ball.
int polytope_vertex(const Label& x, int c, int s, int t);

bool g_theorem_validate(const HVector& h);

}  // namespace gorconf
