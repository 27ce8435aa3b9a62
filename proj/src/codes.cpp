#include "syntaft/codes.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "syntaft/error.hpp"
#include "syntaft/wfa.hpp"

namespace syntaft {

FiniteLanguage::FiniteLanguage(std::vector<Symbol> alphabet, std::vector<Word> words)
    : alphabet_(std::move(alphabet)), words_(std::move(words)) {
  if (!is_valid_alphabet(alphabet_)) {
    fail(ErrorCode::InvalidLanguage, "alphabet symbols must be distinct and nonempty");
  }
  for (const auto& w : words_) {
    if (w.empty()) fail(ErrorCode::InvalidLanguage, "the empty word is not allowed");
    for (const auto& s : w) {
      if (std::find(alphabet_.begin(), alphabet_.end(), s) == alphabet_.end()) {
        fail(ErrorCode::InvalidLanguage, "symbol '" + s + "' not in alphabet");
      }
    }
  }
  std::sort(words_.begin(), words_.end());
  if (std::adjacent_find(words_.begin(), words_.end()) != words_.end()) {
    fail(ErrorCode::InvalidLanguage, "duplicate word");
  }
}

std::size_t FiniteLanguage::max_length() const {
  std::size_t m = 0;
  for (const auto& w : words_) m = std::max(m, w.size());
  return m;
}

namespace {

bool is_proper_prefix(const Word& u, const Word& v) {
  return u.size() < v.size() && std::equal(u.begin(), u.end(), v.begin());
}

bool is_proper_suffix(const Word& u, const Word& v) {
  return u.size() < v.size() && std::equal(u.rbegin(), u.rend(), v.rbegin());
}

// U^-1 V = {w : u w in V for some u in U}.
std::set<Word> left_quotient(const std::set<Word>& u_set, const std::set<Word>& v_set) {
  std::set<Word> out;
  for (const auto& u : u_set) {
    for (const auto& v : v_set) {
      if (u.size() <= v.size() && std::equal(u.begin(), u.end(), v.begin())) {
        out.emplace(v.begin() + static_cast<std::ptrdiff_t>(u.size()), v.end());
      }
    }
  }
  return out;
}

}  // namespace

bool is_code(const FiniteLanguage& lang) {
  const std::set<Word> code(lang.words().begin(), lang.words().end());
  std::set<Word> dangling;
  for (const auto& u : code)
    for (const auto& v : code)
      if (is_proper_prefix(u, v)) dangling.emplace(v.begin() + static_cast<std::ptrdiff_t>(u.size()), v.end());
  std::set<std::set<Word>> seen;
  while (!dangling.empty() && seen.insert(dangling).second) {
    if (dangling.count(Word{}) > 0) return false;
    std::set<Word> next = left_quotient(code, dangling);
    std::set<Word> more = left_quotient(dangling, code);
    next.insert(more.begin(), more.end());
    dangling = std::move(next);
  }
  return true;
}

bool is_prefix_finite(const FiniteLanguage& lang) {
  for (const auto& u : lang.words())
    for (const auto& v : lang.words())
      if (is_proper_prefix(u, v)) return false;
  return true;
}

bool is_suffix_finite(const FiniteLanguage& lang) {
  for (const auto& u : lang.words())
    for (const auto& v : lang.words())
      if (is_proper_suffix(u, v)) return false;
  return true;
}

bool is_biprefix_finite(const FiniteLanguage& lang) {
  return is_prefix_finite(lang) && is_suffix_finite(lang);
}

namespace {

std::vector<bool> reachable_from(const Dfa& dfa, const std::vector<std::size_t>& sources) {
  std::vector<bool> seen(dfa.states(), false);
  std::deque<std::size_t> queue;
  for (std::size_t s : sources) {
    if (s != Dfa::kMissing && !seen[s]) {
      seen[s] = true;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const std::size_t q = queue.front();
    queue.pop_front();
    for (std::size_t a = 0; a < dfa.alphabet().size(); ++a) {
      const std::size_t r = dfa.next(q, a);
      if (r != Dfa::kMissing && !seen[r]) {
        seen[r] = true;
        queue.push_back(r);
      }
    }
  }
  return seen;
}

}  // namespace

bool is_prefix_rational(const Dfa& dfa) {
  const std::vector<bool> reachable = reachable_from(dfa, {dfa.start()});
  for (std::size_t q : dfa.accepting()) {
    if (!reachable[q]) continue;
    std::vector<std::size_t> successors;
    for (std::size_t a = 0; a < dfa.alphabet().size(); ++a) successors.push_back(dfa.next(q, a));
    const std::vector<bool> after = reachable_from(dfa, successors);
    for (std::size_t r : dfa.accepting()) {
      if (after[r]) return false;
    }
  }
  return true;
}

Dfa reverse_dfa(const Dfa& dfa) {
  const std::size_t letters = dfa.alphabet().size();
  // predecessors[a][q] = {p : p --a--> q}
  std::vector<std::vector<std::vector<std::size_t>>> predecessors(
      letters, std::vector<std::vector<std::size_t>>(dfa.states()));
  for (std::size_t p = 0; p < dfa.states(); ++p) {
    for (std::size_t a = 0; a < letters; ++a) {
      const std::size_t q = dfa.next(p, a);
      if (q != Dfa::kMissing) predecessors[a][q].push_back(p);
    }
  }
  using Subset = std::vector<bool>;
  std::map<Subset, std::size_t> index;
  std::vector<Subset> subsets;
  auto intern = [&](const Subset& s) {
    auto [it, inserted] = index.emplace(s, subsets.size());
    if (inserted) subsets.push_back(s);
    return it->second;
  };
  Subset initial(dfa.states(), false);
  for (std::size_t q : dfa.accepting()) initial[q] = true;
  intern(initial);
  std::vector<std::size_t> transitions;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::size_t a = 0; a < letters; ++a) {
      Subset next(dfa.states(), false);
      for (std::size_t q = 0; q < dfa.states(); ++q) {
        if (!subsets[i][q]) continue;
        for (std::size_t p : predecessors[a][q]) next[p] = true;
      }
      transitions.push_back(intern(next));
    }
  }
  std::vector<std::size_t> accepting;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    if (subsets[i][dfa.start()]) accepting.push_back(i);
  }
  return Dfa(subsets.size(), dfa.alphabet(), std::move(transitions), 0, std::move(accepting));
}

bool is_suffix_rational(const Dfa& dfa) { return is_prefix_rational(reverse_dfa(dfa)); }

Dfa group_code_dfa(const FiniteGroup& g) {
  if (Verdict v = validate_group(g); !v) fail(ErrorCode::InvalidGroup, v.message);
  const std::size_t n = g.order();
  const std::size_t accept = n;
  const std::size_t dead = n + 1;
  // Non-identity elements take states 1..n-1 in table order.
  std::vector<std::size_t> state_of(n, 0);
  std::size_t next_state = 1;
  for (std::size_t x = 0; x < n; ++x) {
    if (x != g.identity()) state_of[x] = next_state++;
  }
  auto target = [&](std::size_t element) {
    return element == g.identity() ? accept : state_of[element];
  };
  std::vector<std::size_t> transitions((n + 2) * n);
  for (std::size_t h = 0; h < n; ++h) {
    transitions[0 * n + h] = target(h);
    transitions[accept * n + h] = dead;
    transitions[dead * n + h] = dead;
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (x == g.identity()) continue;
    for (std::size_t h = 0; h < n; ++h) transitions[state_of[x] * n + h] = target(g.product(x, h));
  }
  return Dfa(n + 2, g.names(), std::move(transitions), 0, {accept});
}

Dfa group_star_dfa(const FiniteGroup& g) {
  if (Verdict v = validate_group(g); !v) fail(ErrorCode::InvalidGroup, v.message);
  const std::size_t n = g.order();
  std::vector<std::size_t> transitions(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t h = 0; h < n; ++h) transitions[x * n + h] = g.product(x, h);
  return Dfa(n, g.names(), std::move(transitions), g.identity(), {g.identity()});
}

GroupCodeReport verify_group_code(const FiniteGroup& g) {
  GroupCodeReport report;
  report.group_order = g.order();
  const Dfa code = group_code_dfa(g);
  report.biprefix = is_prefix_rational(code) && is_suffix_rational(code);

  const SyntacticPresentation pres = syntactic_algebra(char_series(group_star_dfa(g)));
  report.algebra_dim = pres.algebra.dim();
  report.dimension_matches = report.algebra_dim == g.order();

  const auto [group_alg, delta] = group_algebra(g, Normalization::Delta);
  // The basis element read off from word w maps to the group element j_G(w).
  auto group_index = [&](const Symbol& s) {
    return static_cast<std::size_t>(std::find(g.names().begin(), g.names().end(), s) -
                                    g.names().begin());
  };
  std::vector<Vector> images;
  for (const auto& w : pres.basis_words) {
    std::size_t x = g.identity();
    for (const auto& s : w) x = g.product(x, group_index(s));
    images.push_back(unit_vector(g.order(), x));
  }
  bool letters_ok = true;
  if (report.dimension_matches) {
    for (std::size_t a = 0; a < pres.minimal.alphabet().size(); ++a) {
      Vector mapped = zero_vector(g.order());
      for (std::size_t i = 0; i < images.size(); ++i) axpy(pres.letter_images[a][i], images[i], mapped);
      letters_ok = letters_ok && mapped == unit_vector(g.order(), group_index(pres.minimal.alphabet()[a]));
    }
  }
  report.letter_isomorphism =
      report.dimension_matches && letters_ok && letter_isomorphism_check(pres.algebra, group_alg, images);
  report.semisimple = is_semisimple(pres.algebra);
  return report;
}

}  // namespace syntaft
