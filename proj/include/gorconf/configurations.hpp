#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gorconf/monomials.hpp"
#include "gorconf/sequences.hpp"

namespace gorconf {

enum class LabelKind { M, L };

/// Symbolic linear form M_i or L_i. Ordered by u-position: M_i <-> u_{2i+1}, L_i <-> u_{2i+2}.
struct Label {
  LabelKind kind = LabelKind::M;
  int index = 0;

  /// Zero-based u-position (u_{k} has position k-1); also the x-variable index of the
  /// default realization M_i -> x_{2i}, L_i -> x_{2i+1}.
  int position() const noexcept { return kind == LabelKind::M ? 2 * index : 2 * index + 1; }

  std::string to_string() const;
  static Label parse(const std::string& text);
  /// mu(u_k) for a one-based u-index k.
  static Label from_u(int k);

  friend bool operator==(const Label&, const Label&) = default;
  friend std::strong_ordering operator<=>(const Label& a, const Label& b) {
    return a.position() <=> b.position();
  }
};

using PrimeComponent = std::vector<Label>;  // sorted, distinct

/// Ambient label set: M_0..M_{m_count-1}, L_0..L_{l_count-1}.
struct Universe {
  int m_count = 0;
  int l_count = 0;

  bool contains(const Label& x) const noexcept {
    return x.index >= 0 && x.index < (x.kind == LabelKind::M ? m_count : l_count);
  }
  /// All labels, sorted by u-position.
  std::vector<Label> labels() const;
  std::size_t size() const noexcept { return static_cast<std::size_t>(m_count + l_count); }

  friend bool operator==(const Universe&, const Universe&) = default;
};

/// The universe of the maximal ACM configuration in codimension c with parameter t.
Universe acm_universe(int c, int t);
/// The universe of the maximal Gorenstein configuration G_{c,s,t}.
Universe gorenstein_universe(int c, int s, int t);

struct ConfigParams {
  int c = 0;
  std::optional<int> s;
  int t = 0;
  friend bool operator==(const ConfigParams&, const ConfigParams&) = default;
};

/// Finite union of linear subvarieties, each cut out by a set of labels.
class Configuration {
 public:
  Configuration() = default;
  Configuration(ConfigParams params, Universe universe, std::vector<PrimeComponent> components);

  const ConfigParams& params() const noexcept { return params_; }
  const Universe& universe() const noexcept { return universe_; }
  const std::vector<PrimeComponent>& components() const noexcept { return components_; }
  /// Common component size; 0 for the empty configuration.
  int codim() const noexcept;
  bool empty() const noexcept { return components_.empty(); }
  bool contains(const PrimeComponent& p) const;

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  ConfigParams params_;
  Universe universe_;
  std::vector<PrimeComponent> components_;  // canonical: sorted, deduplicated
};

/// Normalize a label set: sort by u-position and check distinctness.
PrimeComponent make_component(std::vector<Label> labels);
std::string to_string(const PrimeComponent& p);

/// One-based u-indices of beta_bar_{c,t}(m); size 2t.
std::vector<int> beta_bar(const Monomial& m, int c, int t);
PrimeComponent prime_component(const Monomial& m, int c, int t);

Configuration build_z(const HVector& h, int c, int t);
Configuration build_z_max(int c, int t);
Configuration build_g_max(int c, int s, int t);
/// For odd c, M_{t+(c-1)/2} is renamed L_{s-t+(c-1)/2}; even c is unchanged.
Configuration relabel_g_max(int c, int s, int t);
Configuration build_gorenstein(const HVector& h);

/// Components of G not in Z.
Configuration residual(const Configuration& g, const Configuration& z);

/// No three components lie in a common set of codim+1 labels.
bool is_generalized_stick_figure(const Configuration& x);

/// Components that do not contain `label` (colon of the realized ideal by that variable).
Configuration colon_by_label(const Configuration& x, const Label& label);

/// Shift u_k -> u_{k+1}, i.e. M_i -> L_i and L_i -> M_{i+1}.
Configuration tau(const Configuration& x);

/// Realization by distinct variables: universe labels sorted by u-position become
/// x_0..x_{n-1}. Returns, per component, the variable indices.
std::vector<std::vector<int>> component_variables(const Configuration& x);

struct SubspaceReport {
  int c = 0, s = 0, t = 0;
  Label g_label;
  bool colon_identity = false;
  int initial_degree = -1;  // a((J:g)/J); -1 if none found
  int regularity = 0;       // s + 1
  bool bound_holds = false;  // 2a >= reg - 1
  bool matches_s_minus_t = false;
  bool passed() const noexcept { return colon_identity && bound_holds && matches_s_minus_t; }
};

SubspaceReport check_subspace_property(const HVector& h);

}  // namespace gorconf
