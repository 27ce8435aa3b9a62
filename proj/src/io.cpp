#include "syntaft/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "syntaft/error.hpp"

namespace syntaft {

namespace {

struct Token {
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
};

struct Line {
  std::size_t number = 0;
  std::vector<Token> tokens;
};

[[noreturn]] void parse_fail(std::size_t line, std::size_t column, const std::string& what) {
  throw ParseError(ErrorCode::ParseError, line, column, what);
}

[[noreturn]] void parse_fail(const Token& t, const std::string& what) {
  parse_fail(t.line, t.column, what);
}

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(start, end - start);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      const std::size_t j0 = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      line.tokens.push_back({std::string(raw.substr(j0, i - j0)), number, j0 + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

std::string header_for(FileKind kind) { return "syntaft-" + std::string(file_kind_name(kind)) + " v1"; }

class Reader {
 public:
  Reader(std::string_view text, FileKind kind) : lines_(split_lines(text)) {
    const std::string want = header_for(kind);
    if (lines_.empty()) parse_fail(1, 1, "empty file, expected header '" + want + "'");
    const Line& h = lines_.front();
    if (h.tokens.size() != 2 || h.tokens[0].text + " " + h.tokens[1].text != want) {
      parse_fail(h.tokens[0], "expected header '" + want + "'");
    }
    i_ = 1;
  }

  bool done() const { return i_ >= lines_.size(); }
  const Line& peek() const { return lines_[i_]; }

  const Line& next(const std::string& what) {
    if (done()) {
      const std::size_t last = lines_.back().number;
      parse_fail(last + 1, 1, "unexpected end of file, expected " + what);
    }
    return lines_[i_++];
  }

  /// Line "keyword args..." with `args` arguments (any number if negative).
  const Line& keyword(const std::string& kw, long args = -1) {
    const Line& l = next("'" + kw + "'");
    if (l.tokens[0].text != kw) parse_fail(l.tokens[0], "expected '" + kw + "', found '" + l.tokens[0].text + "'");
    if (args >= 0 && l.tokens.size() != static_cast<std::size_t>(args) + 1) {
      parse_fail(l.tokens[0], "'" + kw + "' takes " + std::to_string(args) + " value(s)");
    }
    return l;
  }

  void finish() {
    if (!done()) parse_fail(peek().tokens[0], "unexpected trailing content");
  }

 private:
  std::vector<Line> lines_;
  std::size_t i_ = 0;
};

std::size_t to_index(const Token& t) {
  if (t.text.empty() || !std::all_of(t.text.begin(), t.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    parse_fail(t, "expected a nonnegative integer, found '" + t.text + "'");
  }
  if (t.text.size() > 9) parse_fail(t, "integer too large");
  return static_cast<std::size_t>(std::stoul(t.text));
}

std::size_t to_index_below(const Token& t, std::size_t bound) {
  const std::size_t v = to_index(t);
  if (v >= bound) parse_fail(t, "index " + t.text + " out of range 0.." + std::to_string(bound) + "-1");
  return v;
}

Rational to_rational(const Token& t) {
  try {
    return parse_rational(t.text);
  } catch (const Error& e) {
    parse_fail(t, "malformed rational '" + t.text + "'");
  }
}

Vector values(const Line& l, std::size_t first, std::size_t expected) {
  if (l.tokens.size() - first != expected) {
    parse_fail(l.tokens[0], "expected " + std::to_string(expected) + " value(s), found " +
                                std::to_string(l.tokens.size() - first));
  }
  Vector v;
  for (std::size_t i = first; i < l.tokens.size(); ++i) v.push_back(to_rational(l.tokens[i]));
  return v;
}

std::vector<std::string> names(const Line& l) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i < l.tokens.size(); ++i) out.push_back(l.tokens[i].text);
  return out;
}

std::vector<std::string> distinct_names(const Line& l) {
  std::vector<std::string> out = names(l);
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (out[i] == out[j]) parse_fail(l.tokens[i + 1], "duplicate name '" + out[i] + "'");
  return out;
}

std::string join(const Vector& v) {
  std::string s;
  for (const auto& x : v) s += " " + to_string(x);
  return s;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += " " + x;
  return s;
}

Word word_from(const Line& l, std::size_t first, const std::vector<Symbol>& alphabet) {
  std::string text;
  for (std::size_t i = first; i < l.tokens.size(); ++i) text += (i > first ? " " : "") + l.tokens[i].text;
  try {
    return parse_word(text, alphabet);
  } catch (const Error& e) {
    parse_fail(l.tokens[first], e.what());
  }
}

}  // namespace

std::string_view file_kind_name(FileKind kind) {
  switch (kind) {
    case FileKind::Algebra: return "alg";
    case FileKind::Functional: return "functional";
    case FileKind::Group: return "group";
    case FileKind::Wfa: return "wfa";
    case FileKind::Dfa: return "dfa";
    case FileKind::Language: return "lang";
    case FileKind::Triangulation: return "tri";
    case FileKind::Formula: return "formula";
    case FileKind::Moves: return "moves";
  }
  return "unknown";
}

FileKind detect_kind(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) parse_fail(1, 1, "empty file");
  const Line& h = lines.front();
  for (FileKind k : {FileKind::Algebra, FileKind::Functional, FileKind::Group, FileKind::Wfa, FileKind::Dfa,
                     FileKind::Language, FileKind::Triangulation, FileKind::Formula, FileKind::Moves}) {
    if (h.tokens.size() == 2 && h.tokens[0].text + " " + h.tokens[1].text == header_for(k)) return k;
  }
  parse_fail(h.tokens[0], "unrecognized header '" + h.tokens[0].text + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(ErrorCode::ParseError, 0, 0, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(ErrorCode::ParseError, 0, 0, "cannot write '" + path + "'");
  out << contents;
}

// ---- algebra / functional ----

FinAlgebra read_algebra(std::string_view text) {
  Reader r(text, FileKind::Algebra);
  const std::size_t n = to_index(r.keyword("dim", 1).tokens[1]);
  const Line& basis = r.keyword("basis", static_cast<long>(n));
  std::vector<std::string> basis_names = distinct_names(basis);
  const Vector unit = values(r.keyword("unit"), 1, n);
  const std::size_t m = to_index(r.keyword("constants", 1).tokens[1]);
  std::vector<Rational> constants(n * n * n, Rational(0));
  std::vector<bool> seen(n * n * n, false);
  for (std::size_t t = 0; t < m; ++t) {
    const Line& l = r.next("structure constant 'i j k p/q'");
    if (l.tokens.size() != 4) parse_fail(l.tokens[0], "expected 'i j k p/q'");
    const std::size_t i = to_index_below(l.tokens[0], n);
    const std::size_t j = to_index_below(l.tokens[1], n);
    const std::size_t k = to_index_below(l.tokens[2], n);
    const std::size_t at = (i * n + j) * n + k;
    if (seen[at]) parse_fail(l.tokens[0], "structure constant listed twice");
    seen[at] = true;
    constants[at] = to_rational(l.tokens[3]);
  }
  r.finish();
  return FinAlgebra(std::move(basis_names), std::move(constants), unit);
}

std::string write_algebra(const FinAlgebra& alg) {
  const std::size_t n = alg.dim();
  std::ostringstream out;
  out << header_for(FileKind::Algebra) << "\n";
  out << "dim " << n << "\n";
  out << "basis" << join(alg.basis_names()) << "\n";
  out << "unit" << join(alg.unit()) << "\n";
  std::ostringstream body;
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (alg.constant(i, j, k) == 0) continue;
        ++count;
        body << i << " " << j << " " << k << " " << to_string(alg.constant(i, j, k)) << "\n";
      }
  out << "constants " << count << "\n" << body.str();
  return out.str();
}

LinearFunctional read_functional(std::string_view text) {
  Reader r(text, FileKind::Functional);
  const std::size_t n = to_index(r.keyword("dim", 1).tokens[1]);
  Vector v = values(r.keyword("coeffs"), 1, n);
  r.finish();
  return LinearFunctional(std::move(v));
}

std::string write_functional(const LinearFunctional& f) {
  return header_for(FileKind::Functional) + "\ndim " + std::to_string(f.size()) + "\ncoeffs" +
         join(f.coefficients()) + "\n";
}

// ---- group ----

FiniteGroup read_group(std::string_view text) {
  Reader r(text, FileKind::Group);
  const Line& order_line = r.keyword("order", 1);
  const std::size_t n = to_index(order_line.tokens[1]);
  if (n == 0) parse_fail(order_line.tokens[1], "order must be positive");
  const Line& names_line = r.keyword("names", static_cast<long>(n));
  std::vector<std::string> element_names = distinct_names(names_line);
  r.keyword("table", 0);
  std::vector<std::size_t> table;
  for (std::size_t i = 0; i < n; ++i) {
    const Line& row = r.next("table row " + std::to_string(i + 1));
    if (row.tokens.size() != n) parse_fail(row.tokens[0], "table row needs " + std::to_string(n) + " entries");
    for (const auto& t : row.tokens) {
      auto it = std::find(element_names.begin(), element_names.end(), t.text);
      if (it == element_names.end()) parse_fail(t, "unknown element '" + t.text + "'");
      table.push_back(static_cast<std::size_t>(it - element_names.begin()));
    }
  }
  r.finish();
  std::size_t identity = 0;
  for (std::size_t e = 0; e < n; ++e) {
    bool left_identity = true;
    for (std::size_t x = 0; x < n && left_identity; ++x) left_identity = table[e * n + x] == x;
    if (left_identity) {
      identity = e;
      break;
    }
  }
  return FiniteGroup(std::move(element_names), std::move(table), identity);
}

std::string write_group(const FiniteGroup& g) {
  std::ostringstream out;
  out << header_for(FileKind::Group) << "\norder " << g.order() << "\nnames" << join(g.names()) << "\ntable\n";
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (std::size_t j = 0; j < g.order(); ++j) out << (j ? " " : "") << g.names()[g.product(i, j)];
    out << "\n";
  }
  return out.str();
}

// ---- wfa ----

LinearRepresentation read_wfa(std::string_view text) {
  Reader r(text, FileKind::Wfa);
  const Line& alpha = r.keyword("alphabet");
  std::vector<Symbol> alphabet = distinct_names(alpha);
  if (alphabet.empty()) parse_fail(alpha.tokens[0], "alphabet must not be empty");
  const std::size_t n = to_index(r.keyword("dim", 1).tokens[1]);
  Vector initial = values(r.keyword("initial"), 1, n);
  std::vector<Matrix> transitions(alphabet.size());
  std::vector<bool> seen(alphabet.size(), false);
  for (std::size_t a = 0; a < alphabet.size(); ++a) {
    const Line& head = r.keyword("matrix", 1);
    auto it = std::find(alphabet.begin(), alphabet.end(), head.tokens[1].text);
    if (it == alphabet.end()) parse_fail(head.tokens[1], "unknown symbol '" + head.tokens[1].text + "'");
    const std::size_t letter = static_cast<std::size_t>(it - alphabet.begin());
    if (seen[letter]) parse_fail(head.tokens[1], "matrix for '" + head.tokens[1].text + "' given twice");
    seen[letter] = true;
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < n; ++i) rows.push_back(values(r.next("matrix row"), 0, n));
    transitions[letter] = Matrix::from_rows(rows, n);
  }
  Vector final_weights = values(r.keyword("final"), 1, n);
  r.finish();
  return LinearRepresentation(std::move(alphabet), std::move(initial), std::move(transitions),
                              std::move(final_weights));
}

std::string write_wfa(const LinearRepresentation& rep) {
  std::ostringstream out;
  out << header_for(FileKind::Wfa) << "\nalphabet" << join(rep.alphabet()) << "\ndim " << rep.dim()
      << "\ninitial" << join(rep.initial()) << "\n";
  for (std::size_t a = 0; a < rep.alphabet().size(); ++a) {
    out << "matrix " << rep.alphabet()[a] << "\n";
    const Matrix& m = rep.transition(a);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      const Vector row = m.row(i);
      std::string line = join(row);
      out << (line.empty() ? line : line.substr(1)) << "\n";
    }
  }
  out << "final" << join(rep.final_weights()) << "\n";
  return out.str();
}

// ---- dfa ----

Dfa read_dfa(std::string_view text) {
  Reader r(text, FileKind::Dfa);
  const Line& states_line = r.keyword("states", 1);
  const std::size_t n = to_index(states_line.tokens[1]);
  if (n == 0) parse_fail(states_line.tokens[1], "an automaton needs a state");
  std::vector<Symbol> alphabet = distinct_names(r.keyword("alphabet"));
  const std::size_t start = to_index_below(r.keyword("start", 1).tokens[1], n);
  const Line& acc = r.keyword("accepting");
  std::vector<std::size_t> accepting;
  for (std::size_t i = 1; i < acc.tokens.size(); ++i) accepting.push_back(to_index_below(acc.tokens[i], n));
  r.keyword("transitions", 0);
  std::vector<std::size_t> transitions;
  for (std::size_t q = 0; q < n; ++q) {
    const Line& row = r.next("transition row for state " + std::to_string(q));
    if (row.tokens.size() != alphabet.size()) {
      parse_fail(row.tokens[0], "transition row needs " + std::to_string(alphabet.size()) + " entries");
    }
    for (const auto& t : row.tokens) transitions.push_back(t.text == "-" ? Dfa::kMissing : to_index_below(t, n));
  }
  r.finish();
  try {
    return Dfa(n, std::move(alphabet), std::move(transitions), start, std::move(accepting));
  } catch (const Error& e) {
    parse_fail(acc.tokens[0], e.what());
  }
}

std::string write_dfa(const Dfa& dfa) {
  std::ostringstream out;
  out << header_for(FileKind::Dfa) << "\nstates " << dfa.states() << "\nalphabet" << join(dfa.alphabet())
      << "\nstart " << dfa.start() << "\naccepting";
  for (std::size_t q : dfa.accepting()) out << " " << q;
  out << "\ntransitions\n";
  for (std::size_t q = 0; q < dfa.states(); ++q) {
    for (std::size_t a = 0; a < dfa.alphabet().size(); ++a) {
      const std::size_t t = dfa.next(q, a);
      out << (a ? " " : "") << (t == Dfa::kMissing ? std::string("-") : std::to_string(t));
    }
    out << "\n";
  }
  return out.str();
}

// ---- language ----

FiniteLanguage read_language(std::string_view text) {
  Reader r(text, FileKind::Language);
  const Line& alpha = r.keyword("alphabet");
  std::vector<Symbol> alphabet = distinct_names(alpha);
  const Line& count_line = r.keyword("words", 1);
  const std::size_t m = to_index(count_line.tokens[1]);
  std::vector<Word> words;
  for (std::size_t i = 0; i < m; ++i) words.push_back(word_from(r.next("a word"), 0, alphabet));
  r.finish();
  try {
    return FiniteLanguage(std::move(alphabet), std::move(words));
  } catch (const Error& e) {
    parse_fail(count_line.tokens[0], e.what());
  }
}

std::string write_language(const FiniteLanguage& lang) {
  std::ostringstream out;
  out << header_for(FileKind::Language) << "\nalphabet" << join(lang.alphabet()) << "\nwords "
      << lang.words().size() << "\n";
  for (const auto& w : lang.words()) out << word_to_string(w) << "\n";
  return out.str();
}

// ---- triangulation ----

Triangulation read_triangulation(std::string_view text) {
  Reader r(text, FileKind::Triangulation);
  const std::size_t f = to_index(r.keyword("triangles", 1).tokens[1]);
  std::vector<std::size_t> pairing(3 * f, Triangulation::kUnpaired);
  std::vector<bool> twisted(3 * f, false);
  while (!r.done()) {
    const Line& l = r.keyword("pair");
    if (l.tokens.size() != 3 && !(l.tokens.size() == 4 && l.tokens[3].text == "twisted")) {
      parse_fail(l.tokens[0], "expected 'pair s t' or 'pair s t twisted'");
    }
    const std::size_t s = to_index_below(l.tokens[1], 3 * f);
    const std::size_t t = to_index_below(l.tokens[2], 3 * f);
    for (const auto& [slot, tok] : {std::pair{s, l.tokens[1]}, std::pair{t, l.tokens[2]}}) {
      if (pairing[slot] != Triangulation::kUnpaired) parse_fail(tok, "slot " + tok.text + " is paired twice");
    }
    if (s == t) parse_fail(l.tokens[2], "a slot cannot be paired with itself");
    pairing[s] = t;
    pairing[t] = s;
    twisted[s] = twisted[t] = l.tokens.size() == 4;
  }
  return Triangulation(f, std::move(pairing), std::move(twisted));
}

std::string write_triangulation(const Triangulation& t) {
  std::ostringstream out;
  out << header_for(FileKind::Triangulation) << "\ntriangles " << t.triangle_count() << "\n";
  for (std::size_t s = 0; s < t.slot_count(); ++s) {
    const std::size_t p = t.partner(s);
    if (p == Triangulation::kUnpaired || p < s) continue;
    out << "pair " << s << " " << p << (t.twisted(s) ? " twisted" : "") << "\n";
  }
  return out.str();
}

// ---- formula ----

FormulaFile read_formula_file(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty() || lines.front().tokens.size() != 2 ||
      lines.front().tokens[0].text + " " + lines.front().tokens[1].text != header_for(FileKind::Formula)) {
    parse_fail(lines.empty() ? 1 : lines.front().number, 1,
               "expected header '" + header_for(FileKind::Formula) + "'");
  }
  FormulaFile file;
  // Blank out the header and alphabet lines so formula positions stay exact.
  std::string body(text);
  auto blank_line = [&](std::size_t number) {
    std::size_t pos = 0;
    for (std::size_t l = 1; l < number; ++l) pos = body.find('\n', pos) + 1;
    for (; pos < body.size() && body[pos] != '\n'; ++pos) body[pos] = ' ';
  };
  blank_line(lines.front().number);
  if (lines.size() > 1 && lines[1].tokens[0].text == "alphabet") {
    const Line& alpha = lines[1];
    file.alphabet = distinct_names(alpha);
    if (!is_valid_alphabet(file.alphabet) || file.alphabet.empty()) parse_fail(alpha.tokens[0], "invalid alphabet");
    blank_line(alpha.number);
  }
  file.formula = parse_formula(body);
  return file;
}

std::string write_formula_file(const FormulaFile& file) {
  std::string out = header_for(FileKind::Formula) + "\n";
  if (!file.alphabet.empty()) out += "alphabet" + join(file.alphabet) + "\n";
  return out + to_string(file.formula) + "\n";
}

// ---- moves ----

std::vector<Move> read_moves(std::string_view text, const Triangulation& start) {
  Reader r(text, FileKind::Moves);
  Triangulation current = start;
  std::vector<Move> moves;
  while (!r.done()) {
    const Line& l = r.next("a move");
    const std::string& op = l.tokens[0].text;
    std::vector<Move> step;
    if (op == "13" || op == "22") {
      if (l.tokens.size() != 2) parse_fail(l.tokens[0], "expected '" + op + " <site>'");
      step.push_back({op == "13" ? MoveKind::OneThree : MoveKind::TwoTwo, to_index(l.tokens[1])});
    } else if (op == "random") {
      if (l.tokens.size() != 3) parse_fail(l.tokens[0], "expected 'random <count> <seed>'");
      step = random_moves(current, to_index(l.tokens[1]), to_index(l.tokens[2]));
    } else {
      parse_fail(l.tokens[0], "unknown move '" + op + "'");
    }
    try {
      current = apply_moves(current, step);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InvalidMoveSite) throw;
      parse_fail(l.tokens[0], e.what());
    }
    moves.insert(moves.end(), step.begin(), step.end());
  }
  return moves;
}

std::string write_moves(const std::vector<Move>& moves) {
  std::string out = header_for(FileKind::Moves) + "\n";
  for (const auto& m : moves) out += (m.kind == MoveKind::OneThree ? "13 " : "22 ") + std::to_string(m.site) + "\n";
  return out;
}

}  // namespace syntaft
