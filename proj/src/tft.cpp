#include "syntaft/tft.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "syntaft/error.hpp"

namespace syntaft {

Triangulation::Triangulation(std::size_t triangle_count, std::vector<std::size_t> pairing,
                             std::vector<bool> twisted)
    : triangles_(triangle_count), pairing_(std::move(pairing)), twisted_(std::move(twisted)) {
  if (pairing_.size() != 3 * triangles_) {
    fail(ErrorCode::NotClosed, "pairing must list a partner for each of the 3F slots");
  }
  if (twisted_.empty()) twisted_.assign(pairing_.size(), false);
  if (twisted_.size() != pairing_.size()) {
    fail(ErrorCode::NotClosed, "twist flags must cover every slot");
  }
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }
  std::size_t classes() {
    std::size_t count = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i) count += find(i) == i ? 1 : 0;
    return count;
  }

 private:
  std::vector<std::size_t> parent_;
};

void check_closed(const Triangulation& t) {
  const std::size_t slots = t.slot_count();
  if (t.triangle_count() == 0) fail(ErrorCode::NotClosed, "no triangles");
  for (std::size_t s = 0; s < slots; ++s) {
    const std::size_t p = t.partner(s);
    if (p == Triangulation::kUnpaired || p >= slots) {
      fail(ErrorCode::NotClosed, "slot " + std::to_string(s) + " is a boundary edge");
    }
    if (p == s) fail(ErrorCode::NotClosed, "slot " + std::to_string(s) + " is paired with itself");
    if (t.partner(p) != s) {
      fail(ErrorCode::NotClosed, "pairing is not an involution at slot " + std::to_string(s));
    }
    if (t.twisted(s) != t.twisted(p)) {
      fail(ErrorCode::NotClosed, "twist flags disagree on slots " + std::to_string(s) + " and " +
                                     std::to_string(p));
    }
  }
}

std::size_t next_corner(std::size_t slot) { return 3 * (slot / 3) + (slot % 3 + 1) % 3; }

}  // namespace

SurfaceInvariantReport analyze(const Triangulation& t) {
  check_closed(t);
  const std::size_t slots = t.slot_count();
  for (std::size_t s = 0; s < slots; ++s) {
    if (t.twisted(s)) {
      fail(ErrorCode::NotOriented, "slots " + std::to_string(s) + " and " +
                                       std::to_string(t.partner(s)) +
                                       " are glued with matching directions");
    }
  }
  UnionFind triangles(t.triangle_count());
  // Corner 3t+k is the tail of slot 3t+k.
  UnionFind corners(slots);
  for (std::size_t s = 0; s < slots; ++s) {
    const std::size_t p = t.partner(s);
    triangles.unite(s / 3, p / 3);
    corners.unite(s, next_corner(p));
    corners.unite(next_corner(s), p);
  }
  if (triangles.classes() != 1) fail(ErrorCode::NotConnected, "surface has several components");
  SurfaceInvariantReport r;
  r.face_count = t.triangle_count();
  r.edge_count = slots / 2;
  r.vertex_count = corners.classes();
  r.euler_characteristic = static_cast<long>(r.vertex_count) - static_cast<long>(r.edge_count) +
                           static_cast<long>(r.face_count);
  r.genus = static_cast<std::size_t>((2 - r.euler_characteristic) / 2);
  return r;
}

Triangulation from_oriented_faces(const std::vector<std::array<std::size_t, 3>>& faces) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> slot_of;
  for (std::size_t t = 0; t < faces.size(); ++t) {
    for (std::size_t k = 0; k < 3; ++k) {
      auto [it, inserted] = slot_of.emplace(std::pair{faces[t][k], faces[t][(k + 1) % 3]}, 3 * t + k);
      if (!inserted) fail(ErrorCode::NotOriented, "a directed edge occurs twice");
    }
  }
  std::vector<std::size_t> pairing(3 * faces.size(), Triangulation::kUnpaired);
  for (const auto& [edge, slot] : slot_of) {
    auto it = slot_of.find({edge.second, edge.first});
    if (it == slot_of.end()) fail(ErrorCode::NotClosed, "an edge has no reverse partner");
    pairing[slot] = it->second;
  }
  return Triangulation(faces.size(), std::move(pairing));
}

Triangulation standard_triangulation(std::size_t genus) {
  if (genus == 0) return from_oriented_faces({{{0, 2, 1}}, {{0, 1, 3}}, {{0, 3, 2}}, {{1, 2, 3}}});
  // Fan from polygon vertex P0: triangle m = (P0, P_{m+1}, P_{m+2}).
  const std::size_t sides = 4 * genus;
  const std::size_t faces = sides - 2;
  std::vector<std::size_t> pairing(3 * faces, Triangulation::kUnpaired);
  auto link = [&](std::size_t a, std::size_t b) {
    pairing[a] = b;
    pairing[b] = a;
  };
  for (std::size_t m = 0; m + 1 < faces; ++m) link(3 * m + 2, 3 * (m + 1));
  auto side_slot = [&](std::size_t i) -> std::size_t {
    if (i == 0) return 0;
    if (i == sides - 1) return 3 * (faces - 1) + 2;
    return 3 * (i - 1) + 1;
  };
  // Side 4j is a_j, 4j+2 is a_j^-1, 4j+1 is b_j, 4j+3 is b_j^-1.
  for (std::size_t j = 0; j < genus; ++j) {
    link(side_slot(4 * j), side_slot(4 * j + 2));
    link(side_slot(4 * j + 1), side_slot(4 * j + 3));
  }
  return Triangulation(faces, std::move(pairing));
}

namespace {

// Rebuilds a pairing after slots were renamed by `rename`; renamed slots
// equal to kUnpaired are dropped.
void carry_pairs(const Triangulation& t, const std::vector<std::size_t>& rename,
                 std::vector<std::size_t>& pairing, std::vector<bool>& twisted) {
  for (std::size_t s = 0; s < t.slot_count(); ++s) {
    const std::size_t from = rename[s];
    const std::size_t to = rename[t.partner(s)];
    if (from == Triangulation::kUnpaired || to == Triangulation::kUnpaired) continue;
    pairing[from] = to;
    twisted[from] = t.twisted(s);
  }
}

}  // namespace

Triangulation pachner_13(const Triangulation& t, std::size_t triangle) {
  check_closed(t);
  const std::size_t f = t.triangle_count();
  if (triangle >= f) fail(ErrorCode::InvalidMoveSite, "no triangle " + std::to_string(triangle));
  std::vector<std::size_t> rename(t.slot_count());
  std::iota(rename.begin(), rename.end(), 0);
  rename[3 * triangle + 1] = 3 * f;
  rename[3 * triangle + 2] = 3 * (f + 1);
  std::vector<std::size_t> pairing(3 * (f + 2), Triangulation::kUnpaired);
  std::vector<bool> twisted(pairing.size(), false);
  carry_pairs(t, rename, pairing, twisted);
  // Triangles (A,B,O), (B,C,O), (C,A,O) around the new vertex O.
  auto link = [&](std::size_t a, std::size_t b) {
    pairing[a] = b;
    pairing[b] = a;
  };
  link(3 * triangle + 1, 3 * f + 2);
  link(3 * f + 1, 3 * (f + 1) + 2);
  link(3 * (f + 1) + 1, 3 * triangle + 2);
  return Triangulation(f + 2, std::move(pairing), std::move(twisted));
}

Triangulation pachner_22(const Triangulation& t, std::size_t slot) {
  check_closed(t);
  if (slot >= t.slot_count()) fail(ErrorCode::InvalidMoveSite, "no slot " + std::to_string(slot));
  const std::size_t other = t.partner(slot);
  const std::size_t t1 = slot / 3;
  const std::size_t t2 = other / 3;
  if (t1 == t2) fail(ErrorCode::InvalidMoveSite, "edge borders a single triangle");
  if (t.twisted(slot)) fail(ErrorCode::InvalidMoveSite, "edge is glued with a twist");
  const std::size_t k = slot % 3;
  const std::size_t l = other % 3;
  // t1 = (X, Y, Z) with slot X->Y; t2 = (Y, X, W) with slot Y->X.
  const std::size_t y_to_z = 3 * t1 + (k + 1) % 3;
  const std::size_t z_to_x = 3 * t1 + (k + 2) % 3;
  const std::size_t x_to_w = 3 * t2 + (l + 1) % 3;
  const std::size_t w_to_y = 3 * t2 + (l + 2) % 3;
  std::vector<std::size_t> rename(t.slot_count());
  std::iota(rename.begin(), rename.end(), 0);
  // New t1 = (X, W, Z), new t2 = (Y, Z, W); slot 1 of each is the new edge.
  rename[x_to_w] = 3 * t1 + 0;
  rename[z_to_x] = 3 * t1 + 2;
  rename[y_to_z] = 3 * t2 + 0;
  rename[w_to_y] = 3 * t2 + 2;
  rename[slot] = Triangulation::kUnpaired;
  rename[other] = Triangulation::kUnpaired;
  std::vector<std::size_t> pairing(t.slot_count(), Triangulation::kUnpaired);
  std::vector<bool> twisted(t.slot_count(), false);
  carry_pairs(t, rename, pairing, twisted);
  pairing[3 * t1 + 1] = 3 * t2 + 1;
  pairing[3 * t2 + 1] = 3 * t1 + 1;
  return Triangulation(t.triangle_count(), std::move(pairing), std::move(twisted));
}

Triangulation apply_moves(Triangulation t, const std::vector<Move>& moves) {
  for (const auto& m : moves) {
    t = m.kind == MoveKind::OneThree ? pachner_13(t, m.site) : pachner_22(t, m.site);
  }
  return t;
}

std::vector<Move> random_moves(const Triangulation& start, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Triangulation t = start;
  std::vector<Move> moves;
  for (std::size_t i = 0; i < count; ++i) {
    Move m{MoveKind::OneThree, static_cast<std::size_t>(rng() % t.triangle_count())};
    if (rng() % 2 == 1) {
      const std::size_t first = static_cast<std::size_t>(rng() % t.slot_count());
      for (std::size_t offset = 0; offset < t.slot_count(); ++offset) {
        const std::size_t s = (first + offset) % t.slot_count();
        if (s / 3 != t.partner(s) / 3) {
          m = {MoveKind::TwoTwo, s};
          break;
        }
      }
    }
    t = apply_moves(t, {m});
    moves.push_back(m);
  }
  return moves;
}

namespace {

// Dense tensor over edge labels, each index ranging over the algebra basis.
struct Tensor {
  std::vector<std::size_t> labels;
  std::vector<Rational> data;
};

std::uint64_t power(std::size_t base, std::size_t exponent) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / std::max<std::size_t>(base, 1)) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    r *= base;
  }
  return r;
}

std::vector<std::size_t> strides_for(std::size_t rank, std::size_t n) {
  std::vector<std::size_t> strides(rank, 1);
  for (std::size_t i = rank; i-- > 1;) strides[i - 1] = strides[i] * n;
  return strides;
}

class Contractor {
 public:
  Contractor(std::size_t n, std::uint64_t budget) : n_(n), budget_(budget) {}

  void charge(std::uint64_t cost) {
    if (cost > budget_ - spent_) {
      fail(ErrorCode::BudgetExceeded, "state-sum contraction needs more than " +
                                          std::to_string(budget_) + " multiplications");
    }
    spent_ += cost;
  }

  // Sums over the diagonal of a label occurring twice in one tensor.
  Tensor self_trace(const Tensor& t, std::size_t p, std::size_t q) {
    Tensor out;
    for (std::size_t i = 0; i < t.labels.size(); ++i)
      if (i != p && i != q) out.labels.push_back(t.labels[i]);
    const auto in_strides = strides_for(t.labels.size(), n_);
    charge(power(n_, out.labels.size() + 1));
    out.data.assign(power(n_, out.labels.size()), Rational(0));
    std::vector<std::size_t> index(out.labels.size(), 0);
    for (std::size_t flat = 0; flat < out.data.size(); ++flat) {
      std::size_t base = 0;
      for (std::size_t i = 0, j = 0; i < t.labels.size(); ++i) {
        if (i == p || i == q) continue;
        base += index[j++] * in_strides[i];
      }
      for (std::size_t d = 0; d < n_; ++d) {
        out.data[flat] += t.data[base + d * (in_strides[p] + in_strides[q])];
      }
      for (std::size_t j = index.size(); j-- > 0;) {
        if (++index[j] < n_) break;
        index[j] = 0;
      }
    }
    return out;
  }

  Tensor contract(const Tensor& a, const Tensor& b) {
    std::vector<std::size_t> shared;
    Tensor out;
    for (std::size_t la : a.labels) {
      if (std::find(b.labels.begin(), b.labels.end(), la) != b.labels.end()) {
        shared.push_back(la);
      } else {
        out.labels.push_back(la);
      }
    }
    for (std::size_t lb : b.labels) {
      if (std::find(shared.begin(), shared.end(), lb) == shared.end()) out.labels.push_back(lb);
    }
    // Odometer over (free labels of out, shared labels).
    std::vector<std::size_t> walk = out.labels;
    walk.insert(walk.end(), shared.begin(), shared.end());
    const auto sa = strides_for(a.labels.size(), n_);
    const auto sb = strides_for(b.labels.size(), n_);
    std::vector<std::size_t> step_a(walk.size(), 0);
    std::vector<std::size_t> step_b(walk.size(), 0);
    for (std::size_t w = 0; w < walk.size(); ++w) {
      for (std::size_t i = 0; i < a.labels.size(); ++i)
        if (a.labels[i] == walk[w]) step_a[w] = sa[i];
      for (std::size_t i = 0; i < b.labels.size(); ++i)
        if (b.labels[i] == walk[w]) step_b[w] = sb[i];
    }
    const std::uint64_t total = power(n_, walk.size());
    charge(total);
    const std::uint64_t inner = power(n_, shared.size());
    out.data.assign(power(n_, out.labels.size()), Rational(0));
    std::vector<std::size_t> index(walk.size(), 0);
    std::size_t off_a = 0;
    std::size_t off_b = 0;
    for (std::uint64_t step = 0; step < total; ++step) {
      const Rational& x = a.data[off_a];
      const Rational& y = b.data[off_b];
      if (x != 0 && y != 0) out.data[step / inner] += x * y;
      for (std::size_t j = walk.size(); j-- > 0;) {
        off_a += step_a[j];
        off_b += step_b[j];
        if (++index[j] < n_) break;
        off_a -= step_a[j] * n_;
        off_b -= step_b[j] * n_;
        index[j] = 0;
      }
    }
    return out;
  }

 private:
  std::size_t n_;
  std::uint64_t budget_;
  std::uint64_t spent_ = 0;
};

}  // namespace

Rational state_sum(const FinAlgebra& alg, const Triangulation& t, std::uint64_t budget) {
  if (!is_semisimple(alg)) fail(ErrorCode::NotSemisimple, "metric of the trace form is degenerate");
  analyze(t);
  const std::size_t n = alg.dim();
  const LinearFunctional lambda = canonical_form(alg);
  const Matrix metric = gram_matrix(alg, lambda);
  const Matrix inverse_metric = *inverse(metric);

  // C[a][b][c] = lambda((e_a e_b) e_c) = sum_k c[a][b][k] g[k][c]
  std::vector<Rational> triple(n * n * n, Rational(0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& c = alg.constant(a, b, k);
        if (c == 0) continue;
        for (std::size_t d = 0; d < n; ++d) triple[(a * n + b) * n + d] += c * metric(k, d);
      }

  Contractor contractor(n, budget);
  // Each edge carries one index; the higher slot of each pair raises its
  // index with the inverse metric.
  std::vector<Tensor> tensors;
  for (std::size_t tri = 0; tri < t.triangle_count(); ++tri) {
    Tensor tensor;
    tensor.data = triple;
    for (std::size_t k = 0; k < 3; ++k) {
      const std::size_t s = 3 * tri + k;
      tensor.labels.push_back(std::min(s, t.partner(s)));
    }
    for (std::size_t k = 0; k < 3; ++k) {
      const std::size_t s = 3 * tri + k;
      if (s < t.partner(s)) continue;
      Tensor raise{{tensor.labels[k], t.slot_count() + s}, inverse_metric.entries()};
      Tensor raised = contractor.contract(tensor, raise);
      // Restore slot order with the raised index under the edge label.
      std::vector<std::size_t> order;
      for (std::size_t j = 0; j < 3; ++j) {
        const std::size_t want = j == k ? t.slot_count() + s : tensor.labels[j];
        order.push_back(static_cast<std::size_t>(
            std::find(raised.labels.begin(), raised.labels.end(), want) - raised.labels.begin()));
      }
      const auto src = strides_for(3, n);
      Tensor reordered{tensor.labels, std::vector<Rational>(n * n * n)};
      for (std::size_t i0 = 0; i0 < n; ++i0)
        for (std::size_t i1 = 0; i1 < n; ++i1)
          for (std::size_t i2 = 0; i2 < n; ++i2) {
            const std::size_t idx[3] = {i0, i1, i2};
            std::size_t from = 0;
            for (std::size_t j = 0; j < 3; ++j) from += idx[j] * src[order[j]];
            reordered.data[(i0 * n + i1) * n + i2] = raised.data[from];
          }
      tensor = std::move(reordered);
    }
    tensors.push_back(std::move(tensor));
  }

  // Self-glued triangles carry a label twice.
  for (auto& tensor : tensors) {
    for (bool again = true; again;) {
      again = false;
      for (std::size_t p = 0; p < tensor.labels.size() && !again; ++p)
        for (std::size_t q = p + 1; q < tensor.labels.size() && !again; ++q)
          if (tensor.labels[p] == tensor.labels[q]) {
            tensor = contractor.self_trace(tensor, p, q);
            again = true;
          }
    }
  }

  while (tensors.size() > 1) {
    // Pick the pair giving the smallest intermediate, earliest on ties.
    std::size_t best_i = 0, best_j = 1, best_rank = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < tensors.size(); ++i) {
      for (std::size_t j = i + 1; j < tensors.size(); ++j) {
        std::size_t shared = 0;
        for (std::size_t l : tensors[i].labels)
          shared += std::count(tensors[j].labels.begin(), tensors[j].labels.end(), l);
        if (shared == 0) continue;
        const std::size_t r = tensors[i].labels.size() + tensors[j].labels.size() - 2 * shared;
        if (r < best_rank) {
          best_rank = r;
          best_i = i;
          best_j = j;
        }
      }
    }
    Tensor merged = contractor.contract(tensors[best_i], tensors[best_j]);
    tensors.erase(tensors.begin() + static_cast<std::ptrdiff_t>(best_j));
    tensors[best_i] = std::move(merged);
  }
  return tensors.front().data.front();
}

Vector handle_element(const FinAlgebra& alg, const LinearFunctional& f) {
  const Matrix g = gram_matrix(alg, f);
  const auto ginv = inverse(g);
  if (!ginv) fail(ErrorCode::DegenerateForm, "Gram matrix of the functional is singular");
  const std::size_t n = alg.dim();
  Vector h = zero_vector(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if ((*ginv)(i, j) != 0) axpy((*ginv)(i, j), alg.basis_product(i, j), h);
  return h;
}

Rational closed_invariant(const FinAlgebra& alg, const LinearFunctional& f, std::size_t genus) {
  if (!is_commutative(alg)) {
    fail(ErrorCode::NotCommutative, "closed invariants need a commutative algebra; use the "
                                    "closed sector of a noncommutative one");
  }
  const Vector h = handle_element(alg, f);
  Vector power = alg.unit();
  for (std::size_t i = 0; i < genus; ++i) power = multiply(alg, power, h);
  return f(power);
}

std::pair<FinAlgebra, LinearFunctional> closed_sector(const FinAlgebra& alg) {
  if (!is_semisimple(alg)) fail(ErrorCode::NotSemisimple, "trace form is degenerate");
  CenterData z = center(alg);
  LinearFunctional f = restrict_functional(canonical_form(alg), z.subspace);
  return {std::move(z.algebra), std::move(f)};
}

}  // namespace syntaft
