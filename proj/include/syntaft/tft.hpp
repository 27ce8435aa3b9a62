#pragma once

// Two-dimensional lattice and closed TFT computations on triangulated
// closed oriented surfaces.

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "syntaft/algebra.hpp"

namespace syntaft {

/// Delta-complex surface. Slot 3t+k is the edge from corner k to corner k+1
/// of triangle t, corners counterclockwise. Paired slots are glued
/// head-to-tail unless marked twisted (which breaks the orientation).
class Triangulation {
 public:
  static constexpr std::size_t kUnpaired = std::numeric_limits<std::size_t>::max();

  Triangulation(std::size_t triangle_count, std::vector<std::size_t> pairing,
                std::vector<bool> twisted = {});

  std::size_t triangle_count() const noexcept { return triangles_; }
  std::size_t slot_count() const noexcept { return pairing_.size(); }
  std::size_t partner(std::size_t slot) const { return pairing_[slot]; }
  bool twisted(std::size_t slot) const { return twisted_[slot]; }
  const std::vector<std::size_t>& pairing() const noexcept { return pairing_; }
  const std::vector<bool>& twist_flags() const noexcept { return twisted_; }

  friend bool operator==(const Triangulation&, const Triangulation&) = default;

 private:
  std::size_t triangles_;
  std::vector<std::size_t> pairing_;
  std::vector<bool> twisted_;
};

struct SurfaceInvariantReport {
  long euler_characteristic = 0;
  std::size_t genus = 0;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::size_t face_count = 0;
};

/// Throws NotClosed, NotOriented or NotConnected.
SurfaceInvariantReport analyze(const Triangulation& t);

/// Glues faces given by counterclockwise vertex labels along matching edges
/// u->v / v->u. Every directed edge must have exactly one reverse partner.
Triangulation from_oriented_faces(const std::vector<std::array<std::size_t, 3>>& faces);

/// Tetrahedron for genus 0, fan of the 4g-gon a1 b1 a1^-1 b1^-1 ... otherwise.
Triangulation standard_triangulation(std::size_t genus);

/// Splits a triangle around a new vertex; the original index keeps the piece
/// on slot 0 and the two new triangles are appended.
Triangulation pachner_13(const Triangulation& t, std::size_t triangle);
/// Flips the edge through `slot`; it must border two distinct triangles.
Triangulation pachner_22(const Triangulation& t, std::size_t slot);

enum class MoveKind { OneThree, TwoTwo };
struct Move {
  MoveKind kind;
  std::size_t site;

  friend bool operator==(const Move&, const Move&) = default;
};
Triangulation apply_moves(Triangulation t, const std::vector<Move>& moves);
/// `count` moves with sites drawn from a seeded generator; 2-2 moves on
/// self-glued sites are skipped in favour of the next candidate.
std::vector<Move> random_moves(const Triangulation& t, std::size_t count, std::uint64_t seed);

inline constexpr std::uint64_t kDefaultContractionBudget = 10'000'000;

/// Contraction of triangle tensors C_abc = lambda(e_a e_b e_c) with the
/// inverse metric on every edge, lambda the canonical trace form.
/// Throws NotSemisimple and BudgetExceeded.
Rational state_sum(const FinAlgebra& alg, const Triangulation& t,
                   std::uint64_t budget = kDefaultContractionBudget);

/// h = sum g^ij e_i e_j for g_ij = f(e_i e_j). Throws DegenerateForm.
Vector handle_element(const FinAlgebra& alg, const LinearFunctional& f);

/// f(h^genus). Throws NotCommutative and DegenerateForm.
Rational closed_invariant(const FinAlgebra& alg, const LinearFunctional& f, std::size_t genus);

/// Center with the restricted canonical form. Throws NotSemisimple.
std::pair<FinAlgebra, LinearFunctional> closed_sector(const FinAlgebra& alg);

}  // namespace syntaft
