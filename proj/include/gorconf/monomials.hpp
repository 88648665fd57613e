#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gorconf/sequences.hpp"

namespace gorconf {

/// Exponent-vector monomial in a fixed, ordered variable context.
struct Monomial {
  std::vector<int> exps;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps(nvars, 0) {}
  Monomial(std::initializer_list<int> e) : exps(e) {}
  explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}

  std::size_t nvars() const noexcept { return exps.size(); }
  int degree() const noexcept;
  bool is_unit() const noexcept { return degree() == 0; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

Monomial variable(std::size_t nvars, std::size_t index);
bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial product(const Monomial& a, const Monomial& b);

/// Degree-lexicographic order with z_1 > z_2 > ... > z_c.
bool lex_greater(const Monomial& a, const Monomial& b);

/// Reverse-lexicographic order: a <_r b iff the last nonzero coordinate of a - b
/// is negative. No degree comparison is applied.
bool revlex_less(const Monomial& a, const Monomial& b);

/// All monomials of `degree` in `nvars` variables, in decreasing lex order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree);

/// "z1^2*z3" style rendering; "1" for the unit monomial.
std::string render(const Monomial& m, char var = 'z');

/// Monomial ideal stored by its minimal generators.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t nvars = 0) : nvars_(nvars) {}
  MonomialIdeal(std::size_t nvars, std::vector<Monomial> generators);

  static MonomialIdeal unit(std::size_t nvars);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }

  bool contains(const Monomial& m) const;
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept;

  /// Initial degree; -1 for the zero ideal.
  int initial_degree() const noexcept;
  int max_generator_degree() const noexcept;

  /// True iff some power of every variable lies in the ideal.
  bool is_artinian() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t nvars_;
  std::vector<Monomial> gens_;
};

std::string render(const MonomialIdeal& ideal, char var = 'z');

/// h-vector (standard-monomial counts) of T/I for an Artinian monomial ideal.
HVector artinian_hvector(const MonomialIdeal& ideal);

/// True iff within every degree the ideal's monomials form an initial lex segment.
bool is_lex_segment(const MonomialIdeal& ideal);

MonomialIdeal lex_segment_ideal(const HVector& h, std::size_t c);

/// J = sum_j z_1^j I_j for a lex-segment ideal J; parts live in z_2..z_c.
struct Decomposition {
  int alpha = 0;
  std::vector<MonomialIdeal> parts;
  std::vector<HVector> hparts;
};

Decomposition decompose(const MonomialIdeal& lex_ideal);

/// h(s) = sum_j hparts[j](s - j) for every s.
bool decomposition_hvector_check(const HVector& h, const Decomposition& d);

/// Nesting, regularity gap and length-drop properties of the parts.
bool decomposition_invariants_hold(const HVector& h, const Decomposition& d);

/// z_1^{a_1}...z_c^{a_c} -> y_1^{a_c}...y_c^{a_1}
Monomial phi(const Monomial& m);

/// The LOIM of h in c variables, sorted ascending by revlex_less.
std::vector<Monomial> loim(const HVector& h, std::size_t c);

}  // namespace gorconf
