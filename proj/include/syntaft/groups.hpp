#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "syntaft/algebra.hpp"

namespace syntaft {

/// Finite group by Cayley table: table[i * order + j] = index of g_i * g_j.
class FiniteGroup {
 public:
  FiniteGroup(std::vector<std::string> names, std::vector<std::size_t> table, std::size_t identity);

  std::size_t order() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<std::size_t>& table() const noexcept { return table_; }
  std::size_t identity() const noexcept { return identity_; }
  std::size_t product(std::size_t a, std::size_t b) const { return table_[a * order() + b]; }
  /// Requires a valid group.
  std::size_t inverse(std::size_t a) const;

  friend bool operator==(const FiniteGroup&, const FiniteGroup&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<std::size_t> table_;
  std::size_t identity_;
};

enum class Normalization { Delta, DijkgraafWitten };

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

Verdict validate_group(const FiniteGroup& g);

/// "cyclic" (n >= 1), "symmetric" (1 <= n <= 4), "klein" (parameter ignored).
FiniteGroup catalog(const std::string& name, std::size_t parameter);

/// Basis = group elements; functional picks the identity coefficient,
/// divided by |G| for the Dijkgraaf-Witten normalization.
std::pair<FinAlgebra, LinearFunctional> group_algebra(const FiniteGroup& g, Normalization norm);

/// |{(a_1, b_1, ..., a_g, b_g) : prod [a_i, b_i] = e}| by direct enumeration.
std::uint64_t count_surface_homs(const FiniteGroup& g, std::size_t genus,
                                 std::uint64_t budget = kDefaultEnumerationBudget);

std::size_t conjugacy_class_count(const FiniteGroup& g);
bool is_abelian(const FiniteGroup& g);

}  // namespace syntaft
