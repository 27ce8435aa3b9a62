#include "syntaft/wfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <utility>

#include "syntaft/error.hpp"

namespace syntaft {

LinearRepresentation::LinearRepresentation(std::vector<Symbol> alphabet, Vector initial,
                                           std::vector<Matrix> transitions, Vector final_weights)
    : alphabet_(std::move(alphabet)),
      initial_(std::move(initial)),
      transitions_(std::move(transitions)),
      final_(std::move(final_weights)) {
  if (alphabet_.empty() || !is_valid_alphabet(alphabet_)) {
    fail(ErrorCode::InvalidRepresentation, "alphabet must be nonempty with distinct symbols");
  }
  if (transitions_.size() != alphabet_.size()) {
    fail(ErrorCode::InvalidRepresentation, "need one transition matrix per symbol");
  }
  const std::size_t n = initial_.size();
  if (final_.size() != n) {
    fail(ErrorCode::InvalidRepresentation, "initial and final weights differ in length");
  }
  for (const auto& m : transitions_) {
    if (m.rows() != n || m.cols() != n) {
      fail(ErrorCode::InvalidRepresentation, "transition matrix is not dim x dim");
    }
  }
}

std::size_t LinearRepresentation::symbol_index(const Symbol& s) const {
  auto it = std::find(alphabet_.begin(), alphabet_.end(), s);
  if (it == alphabet_.end()) fail(ErrorCode::UnknownSymbol, "symbol '" + s + "' not in alphabet");
  return static_cast<std::size_t>(it - alphabet_.begin());
}

Rational evaluate(const LinearRepresentation& rep, const Word& word) {
  Vector state = rep.initial();
  for (const auto& s : word) state = state * rep.transition(rep.symbol_index(s));
  return dot(state, rep.final_weights());
}

namespace {

// Restricts to the span of {initial * mu(w)}.
LinearRepresentation reduce_reachable(const LinearRepresentation& rep) {
  const std::size_t n = rep.dim();
  const std::size_t letters = rep.alphabet().size();
  SpanBuilder span(n);
  std::deque<std::size_t> queue;
  if (span.try_add(rep.initial())) queue.push_back(0);
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t a = 0; a < letters; ++a) {
      if (span.try_add(span.vector(i) * rep.transition(a))) queue.push_back(span.size() - 1);
    }
  }
  const std::size_t k = span.size();
  Vector initial = zero_vector(k);
  if (k > 0) initial[0] = 1;
  std::vector<Matrix> transitions;
  for (std::size_t a = 0; a < letters; ++a) {
    Matrix m(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      Vector coords = *span.coordinates(span.vector(i) * rep.transition(a));
      for (std::size_t j = 0; j < k; ++j) m(i, j) = coords[j];
    }
    transitions.push_back(std::move(m));
  }
  Vector final_weights(k);
  for (std::size_t i = 0; i < k; ++i) final_weights[i] = dot(span.vector(i), rep.final_weights());
  return LinearRepresentation(rep.alphabet(), std::move(initial), std::move(transitions),
                              std::move(final_weights));
}

LinearRepresentation transpose_rep(const LinearRepresentation& rep) {
  std::vector<Matrix> transposed;
  for (const auto& m : rep.transitions()) transposed.push_back(m.transpose());
  return LinearRepresentation(rep.alphabet(), rep.final_weights(), std::move(transposed),
                              rep.initial());
}

std::string basis_name(const Word& w) { return w.empty() ? "1" : word_to_string(w); }

Vector flatten(const Matrix& m) { return m.entries(); }

}  // namespace

LinearRepresentation minimize(const LinearRepresentation& rep) {
  // Reducing the transpose keeps only the observable part; transposing back
  // restores the original reading direction.
  return transpose_rep(reduce_reachable(transpose_rep(reduce_reachable(rep))));
}

bool equivalent(const LinearRepresentation& a, const LinearRepresentation& b) {
  std::vector<Symbol> sa = a.alphabet();
  std::vector<Symbol> sb = b.alphabet();
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) fail(ErrorCode::AlphabetMismatch, "series are over different alphabets");
  Vector initial = a.initial();
  for (const auto& x : b.initial()) initial.push_back(-x);
  Vector final_weights = a.final_weights();
  final_weights.insert(final_weights.end(), b.final_weights().begin(), b.final_weights().end());
  std::vector<Matrix> transitions;
  for (std::size_t i = 0; i < a.alphabet().size(); ++i) {
    transitions.push_back(
        direct_sum(a.transition(i), b.transition(b.symbol_index(a.alphabet()[i]))));
  }
  LinearRepresentation difference(a.alphabet(), std::move(initial), std::move(transitions),
                                  std::move(final_weights));
  return minimize(difference).dim() == 0;
}

Vector SyntacticPresentation::image(const Word& word) const {
  Vector v = algebra.unit();
  for (const auto& s : word) v = multiply(algebra, v, letter_images[minimal.symbol_index(s)]);
  return v;
}

SyntacticPresentation syntactic_algebra(const LinearRepresentation& rep) {
  LinearRepresentation minimal = minimize(rep);
  const std::size_t n = minimal.dim();
  const std::size_t letters = minimal.alphabet().size();

  // Breadth-first closure of {mu(w)} starting at the identity; a product is
  // kept only when it enlarges the span.
  SpanBuilder span(n * n);
  std::vector<Matrix> basis;
  std::vector<Word> words;
  if (n > 0) {
    span.try_add(flatten(Matrix::identity(n)));
    basis.push_back(Matrix::identity(n));
    words.emplace_back();
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t a = 0; a < letters; ++a) {
      Matrix product = basis[i] * minimal.transition(a);
      if (span.try_add(flatten(product))) {
        basis.push_back(std::move(product));
        Word w = words[i];
        w.push_back(minimal.alphabet()[a]);
        words.push_back(std::move(w));
      }
    }
  }

  const std::size_t d = basis.size();
  std::vector<Rational> constants(d * d * d, Rational(0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Vector coords = *span.coordinates(flatten(basis[i] * basis[j]));
      for (std::size_t k = 0; k < d; ++k) constants[(i * d + j) * d + k] = coords[k];
    }
  }
  std::vector<std::string> names;
  for (const auto& w : words) names.push_back(basis_name(w));
  Vector unit = zero_vector(d);
  if (d > 0) unit[0] = 1;

  std::vector<Vector> letter_images;
  for (std::size_t a = 0; a < letters; ++a) {
    letter_images.push_back(d > 0 ? *span.coordinates(flatten(minimal.transition(a)))
                                  : Vector{});
  }
  Vector functional(d);
  for (std::size_t i = 0; i < d; ++i) {
    functional[i] = dot(minimal.initial() * basis[i], minimal.final_weights());
  }
  return SyntacticPresentation{FinAlgebra(std::move(names), std::move(constants), std::move(unit)),
                               std::move(letter_images), LinearFunctional(std::move(functional)),
                               std::move(words), std::move(minimal)};
}

bool is_exchangeable(const LinearRepresentation& rep) {
  const SyntacticPresentation pres = syntactic_algebra(rep);
  const auto& images = pres.letter_images;
  for (std::size_t a = 0; a < images.size(); ++a) {
    for (std::size_t b = a + 1; b < images.size(); ++b) {
      if (multiply(pres.algebra, images[a], images[b]) !=
          multiply(pres.algebra, images[b], images[a])) {
        return false;
      }
    }
  }
  return true;
}

bool exchangeable_up_to(const LinearRepresentation& rep, std::size_t max_length) {
  // Words with equal letter counts share a sorted representative.
  std::map<Word, Rational> by_content;
  for (const auto& w : words_up_to(rep.alphabet(), max_length)) {
    Word key = w;
    std::sort(key.begin(), key.end());
    Rational value = evaluate(rep, w);
    auto [it, inserted] = by_content.emplace(std::move(key), value);
    if (!inserted && it->second != value) return false;
  }
  return true;
}

LinearRepresentation series_from_algebra(const FinAlgebra& alg, const LinearFunctional& f) {
  if (Verdict v = validate(alg); !v) fail(ErrorCode::InvalidAlgebra, v.message);
  if (alg.dim() == 0) fail(ErrorCode::InvalidAlgebra, "the zero algebra has no generators");
  if (f.size() != alg.dim()) fail(ErrorCode::DimensionMismatch, "functional length differs from dim");
  const std::size_t n = alg.dim();
  std::vector<Symbol> alphabet = alg.basis_names();
  if (!is_valid_alphabet(alphabet)) {
    alphabet.clear();
    for (std::size_t i = 0; i < n; ++i) alphabet.push_back("x" + std::to_string(i));
  }
  std::vector<Matrix> transitions;
  for (std::size_t i = 0; i < n; ++i) {
    // Row j holds the coordinates of e_j * e_i.
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m(j, k) = alg.constant(j, i, k);
    transitions.push_back(std::move(m));
  }
  return LinearRepresentation(std::move(alphabet), alg.unit(), std::move(transitions),
                              f.coefficients());
}

LinearRepresentation char_series(const Dfa& dfa) {
  if (!dfa.is_complete()) fail(ErrorCode::IncompleteAutomaton, "some transition is missing");
  const std::size_t n = dfa.states();
  std::vector<Matrix> transitions;
  for (std::size_t a = 0; a < dfa.alphabet().size(); ++a) {
    Matrix m(n, n);
    for (std::size_t q = 0; q < n; ++q) m(q, dfa.next(q, a)) = 1;
    transitions.push_back(std::move(m));
  }
  Vector final_weights = zero_vector(n);
  for (std::size_t q : dfa.accepting()) final_weights[q] = 1;
  return LinearRepresentation(dfa.alphabet(), unit_vector(n, dfa.start()), std::move(transitions),
                              std::move(final_weights));
}

}  // namespace syntaft
