#include "syntaft/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "syntaft/error.hpp"

namespace syntaft {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Report {
  Json json = Json::object();
  std::string text;
  bool ok = true;
};

struct Options {
  std::string family;
  std::string action;
  std::vector<std::string> files;
  std::string word;
  bool has_word = false;
  std::string functional;
  std::string name;
  std::size_t param = 0;
  std::string form = "delta";
  std::size_t genus = 0;
  bool has_genus = false;
  std::string moves;
  std::size_t length = kDefaultReportLength;
  bool sector = false;
  std::string functional_output;
  std::uint64_t budget = 0;
};

std::uint64_t budget_or(const Options& o, std::uint64_t fallback) { return o.budget ? o.budget : fallback; }

const std::string& file_arg(const Options& o, std::size_t count) {
  if (o.files.size() != count) {
    throw UsageError(o.family + " " + o.action + " expects " + std::to_string(count) + " file argument(s)");
  }
  return o.files.front();
}

std::size_t need_genus(const Options& o) {
  if (!o.has_genus) throw UsageError(o.family + " " + o.action + " needs --genus");
  return o.genus;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string comment_block(const std::vector<std::string>& lines) {
  std::string s;
  for (const auto& l : lines) s += "# " + l + "\n";
  return s;
}

Json vector_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

void require_valid(const FinAlgebra& alg) {
  if (Verdict v = validate(alg); !v) fail(ErrorCode::InvalidAlgebra, v.message);
}

LinearFunctional functional_for(Workspace& ws, const Options& o, const FinAlgebra& alg) {
  if (o.functional.empty()) return canonical_form(alg);
  const LinearFunctional& f = ws.functional(o.functional);
  if (f.size() != alg.dim()) {
    fail(ErrorCode::DimensionMismatch, "functional has " + std::to_string(f.size()) +
                                           " coefficients but the algebra has dimension " +
                                           std::to_string(alg.dim()));
  }
  return f;
}

void verdict(Report& r, const std::string& key, bool value) {
  r.json[key] = value;
  r.text += yes_no(value) + "\n";
  r.ok = value;
}

// ---- wfa ----

Report wfa_command(Workspace& ws, const Options& o) {
  const LinearRepresentation& rep = ws.wfa(file_arg(o, 1));
  Report r;
  if (o.action == "eval") {
    if (!o.has_word) throw UsageError("wfa eval needs --word");
    const Rational v = evaluate(rep, parse_word(o.word, rep.alphabet()));
    r.json["word"] = o.word;
    r.json["value"] = to_string(v);
    r.text = to_string(v) + "\n";
  } else if (o.action == "min") {
    const LinearRepresentation m = minimize(rep);
    r.json["dim_before"] = rep.dim();
    r.json["dim"] = m.dim();
    r.json["wfa"] = write_wfa(m);
    r.text = comment_block({"dim " + std::to_string(rep.dim()) + " -> " + std::to_string(m.dim())}) + write_wfa(m);
  } else if (o.action == "syntactic") {
    const SyntacticPresentation p = syntactic_algebra(rep);
    Json words = Json::array();
    std::string listed;
    for (const auto& w : p.basis_words) {
      const std::string s = w.empty() ? "1" : word_to_string(w);
      words.push_back(s);
      listed += " " + s;
    }
    const bool comm = is_commutative(p.algebra);
    r.json["dim"] = p.algebra.dim();
    r.json["basis_words"] = words;
    r.json["commutative"] = comm;
    r.json["algebra"] = write_algebra(p.algebra);
    r.json["functional"] = vector_json(p.functional.coefficients());
    r.text = comment_block({"dim " + std::to_string(p.algebra.dim()), "basis words" + listed,
                            "commutative " + yes_no(comm)}) +
             write_algebra(p.algebra);
  } else if (o.action == "exchangeable") {
    verdict(r, "exchangeable", is_exchangeable(rep));
  }
  return r;
}

// ---- alg ----

Report alg_command(Workspace& ws, const Options& o) {
  const FinAlgebra& alg = ws.algebra(file_arg(o, 1));
  Report r;
  if (o.action == "check") {
    const Verdict v = validate(alg);
    r.json["valid"] = v.ok;
    if (!v.ok) r.json["message"] = v.message;
    r.text = v.ok ? "ok\n" : "invalid: " + v.message + "\n";
    r.ok = v.ok;
    return r;
  }
  require_valid(alg);
  if (o.action == "semisimple") {
    verdict(r, "semisimple", is_semisimple(alg));
  } else if (o.action == "frobenius" || o.action == "symmetric" || o.action == "hyperplane") {
    const LinearFunctional f = functional_for(ws, o, alg);
    r.json["functional"] = vector_json(f.coefficients());
    if (o.action == "frobenius") verdict(r, "frobenius", is_frobenius(alg, f));
    if (o.action == "symmetric") verdict(r, "symmetric", is_symmetric(alg, f));
    if (o.action == "hyperplane") verdict(r, "syntactic_hyperplane", is_syntactic_hyperplane(alg, f));
  } else if (o.action == "center") {
    const CenterData z = center(alg);
    r.json["dim"] = z.algebra.dim();
    Json basis = Json::array();
    std::vector<std::string> lines{"dim " + std::to_string(z.algebra.dim())};
    for (std::size_t i = 0; i < z.subspace.dim(); ++i) {
      basis.push_back(vector_json(z.subspace.basis_vector(i)));
      std::string coords;
      for (const auto& x : z.subspace.basis_vector(i)) coords += " " + to_string(x);
      lines.push_back(z.algebra.basis_names()[i] + " =" + coords);
    }
    r.json["basis"] = basis;
    r.json["algebra"] = write_algebra(z.algebra);
    r.text = comment_block(lines) + write_algebra(z.algebra);
  } else if (o.action == "blocks") {
    const BlockData b = split_blocks(alg);
    Json blocks = Json::array();
    for (std::size_t i = 0; i < b.idempotents.size(); ++i) {
      blocks.push_back({{"matrix_size", b.matrix_sizes[i]},
                        {"dim", b.block_dims[i]},
                        {"idempotent", vector_json(b.idempotents[i])}});
      std::string coords;
      for (const auto& x : b.idempotents[i]) coords += " " + to_string(x);
      r.text += "block " + std::to_string(i) + " n=" + std::to_string(b.matrix_sizes[i]) +
                " dim=" + std::to_string(b.block_dims[i]) + " idempotent" + coords + "\n";
    }
    r.json["blocks"] = blocks;
  } else if (o.action == "canonical") {
    const LinearFunctional f = canonical_form(alg);
    r.json["functional"] = vector_json(f.coefficients());
    r.text = write_functional(f);
  }
  return r;
}

// ---- group ----

Report group_command(Workspace& ws, const Options& o) {
  Report r;
  if (o.action == "make") {
    if (!o.files.empty()) throw UsageError("group make takes no file argument");
    if (o.name.empty()) throw UsageError("group make needs --name");
    const FiniteGroup g = catalog(o.name, o.param);
    r.json["order"] = g.order();
    r.json["group"] = write_group(g);
    r.text = write_group(g);
    return r;
  }
  const FiniteGroup& g = ws.group(file_arg(o, 1));
  if (Verdict v = validate_group(g); !v) fail(ErrorCode::InvalidGroup, v.message);
  if (o.action == "algebra") {
    if (o.form != "delta" && o.form != "dw") throw UsageError("--form must be delta or dw");
    const auto [alg, f] =
        group_algebra(g, o.form == "dw" ? Normalization::DijkgraafWitten : Normalization::Delta);
    if (!o.functional_output.empty()) write_file(o.functional_output, write_functional(f));
    r.json["algebra"] = write_algebra(alg);
    r.json["functional"] = write_functional(f);
    r.text = write_algebra(alg);
  } else if (o.action == "homcount") {
    const std::uint64_t n = count_surface_homs(g, need_genus(o), budget_or(o, kDefaultEnumerationBudget));
    r.json["genus"] = o.genus;
    r.json["count"] = n;
    r.text = std::to_string(n) + "\n";
  }
  return r;
}

// ---- code ----

Report code_command(Workspace& ws, const Options& o) {
  Report r;
  const std::string& file = file_arg(o, 1);
  if (o.action == "test") {
    verdict(r, "code", is_code(ws.language(file)));
  } else if (o.action == "prefix" || o.action == "suffix") {
    const bool prefix = o.action == "prefix";
    if (detect_kind(read_file(file)) == FileKind::Dfa) {
      const Dfa& d = ws.dfa(file);
      verdict(r, o.action, prefix ? is_prefix_rational(d) : is_suffix_rational(d));
    } else {
      const FiniteLanguage& l = ws.language(file);
      verdict(r, o.action, prefix ? is_prefix_finite(l) : is_suffix_finite(l));
    }
  } else if (o.action == "groupcode") {
    const Dfa d = group_code_dfa(ws.group(file));
    r.json["dfa"] = write_dfa(d);
    r.text = write_dfa(d);
  } else if (o.action == "verify-group") {
    const GroupCodeReport g = verify_group_code(ws.group(file));
    r.json["group_order"] = g.group_order;
    r.json["biprefix"] = g.biprefix;
    r.json["algebra_dim"] = g.algebra_dim;
    r.json["dimension_matches"] = g.dimension_matches;
    r.json["letter_isomorphism"] = g.letter_isomorphism;
    r.json["semisimple"] = g.semisimple;
    r.text = "biprefix " + yes_no(g.biprefix) + "\n" + "dimension " + std::to_string(g.algebra_dim) +
             " = |G| " + std::to_string(g.group_order) + " " + yes_no(g.dimension_matches) + "\n" +
             "letter isomorphism " + yes_no(g.letter_isomorphism) + "\n" + "semisimple " +
             yes_no(g.semisimple) + "\n" + (g.all_pass() ? "PASS\n" : "FAIL\n");
    r.ok = g.all_pass();
  }
  return r;
}

// ---- tft ----

struct TftInputs {
  const FinAlgebra* alg = nullptr;
  const Triangulation* tri = nullptr;
};

TftInputs classify(Workspace& ws, const Options& o) {
  TftInputs in;
  for (const auto& f : o.files) {
    switch (detect_kind(read_file(f))) {
      case FileKind::Algebra:
        if (in.alg) throw UsageError("more than one algebra file given");
        in.alg = &ws.algebra(f);
        break;
      case FileKind::Triangulation:
        if (in.tri) throw UsageError("more than one triangulation file given");
        in.tri = &ws.triangulation(f);
        break;
      default:
        throw UsageError("'" + f + "' is neither an algebra nor a triangulation");
    }
  }
  return in;
}

Json surface_json(const SurfaceInvariantReport& s) {
  return {{"euler_characteristic", s.euler_characteristic},
          {"genus", s.genus},
          {"vertices", s.vertex_count},
          {"edges", s.edge_count},
          {"faces", s.face_count}};
}

Report tft_command(Workspace& ws, const Options& o) {
  Report r;
  const TftInputs in = classify(ws, o);
  const std::uint64_t budget = budget_or(o, kDefaultContractionBudget);
  if (o.action == "analyze") {
    if (!in.tri || in.alg) throw UsageError("tft analyze takes one triangulation file");
    const SurfaceInvariantReport s = analyze(*in.tri);
    r.json["surface"] = surface_json(s);
    r.text = "euler_characteristic " + std::to_string(s.euler_characteristic) + "\ngenus " +
             std::to_string(s.genus) + "\nvertices " + std::to_string(s.vertex_count) + "\nedges " +
             std::to_string(s.edge_count) + "\nfaces " + std::to_string(s.face_count) + "\n";
  } else if (o.action == "statesum") {
    if (!in.alg) throw UsageError("tft statesum needs an algebra file");
    if (!in.tri && !o.has_genus) throw UsageError("tft statesum needs a triangulation file or --genus");
    require_valid(*in.alg);
    const Triangulation t = in.tri ? *in.tri : standard_triangulation(o.genus);
    const Rational z = state_sum(*in.alg, t, budget);
    r.json["genus"] = analyze(t).genus;
    r.json["state_sum"] = to_string(z);
    r.text = to_string(z) + "\n";
  } else if (o.action == "pachner") {
    if (!in.tri) throw UsageError("tft pachner needs a triangulation file");
    if (o.moves.empty()) throw UsageError("tft pachner needs --moves");
    const std::vector<Move> moves = read_moves(read_file(o.moves), *in.tri);
    const Triangulation after = apply_moves(*in.tri, moves);
    const SurfaceInvariantReport before_s = analyze(*in.tri);
    const SurfaceInvariantReport after_s = analyze(after);
    std::vector<std::string> notes{"moves " + std::to_string(moves.size()),
                                   "genus " + std::to_string(before_s.genus) + " -> " + std::to_string(after_s.genus)};
    r.ok = before_s.genus == after_s.genus;
    r.json["moves"] = moves.size();
    r.json["before"] = surface_json(before_s);
    r.json["after"] = surface_json(after_s);
    if (in.alg) {
      require_valid(*in.alg);
      const Rational z0 = state_sum(*in.alg, *in.tri, budget);
      const Rational z1 = state_sum(*in.alg, after, budget);
      r.json["state_sum_before"] = to_string(z0);
      r.json["state_sum_after"] = to_string(z1);
      notes.push_back("state_sum " + to_string(z0) + " -> " + to_string(z1) + (z0 == z1 ? " MATCH" : " MISMATCH"));
      r.ok = r.ok && z0 == z1;
    }
    r.json["invariant"] = r.ok;
    r.json["triangulation"] = write_triangulation(after);
    r.text = comment_block(notes) + write_triangulation(after);
  } else if (o.action == "closed") {
    if (!in.alg || in.tri) throw UsageError("tft closed takes one algebra file");
    require_valid(*in.alg);
    const std::size_t genus = need_genus(o);
    Rational value;
    if (o.sector) {
      const CenterData z = center(*in.alg);
      const LinearFunctional f = o.functional.empty()
                                     ? closed_sector(*in.alg).second
                                     : restrict_functional(functional_for(ws, o, *in.alg), z.subspace);
      value = closed_invariant(z.algebra, f, genus);
      r.json["center_dim"] = z.algebra.dim();
    } else {
      value = closed_invariant(*in.alg, functional_for(ws, o, *in.alg), genus);
    }
    r.json["genus"] = genus;
    r.json["closed_invariant"] = to_string(value);
    r.text = to_string(value) + "\n";
  }
  return r;
}

// ---- mso ----

Report mso_command(Workspace& ws, const Options& o) {
  Report r;
  const std::string& file = file_arg(o, 1);
  if (o.action == "eval") {
    if (!o.has_word) throw UsageError("mso eval needs --word");
    const FormulaFile& ff = ws.formula(file);
    const std::vector<Symbol> alphabet = ff.alphabet.empty() ? mentioned_symbols(ff.formula) : ff.alphabet;
    const Word w = parse_word(o.word, alphabet);
    const Rational v = evaluate_formula(ff.formula, w, {}, budget_or(o, kDefaultEvaluationBudget));
    r.json["word"] = o.word;
    r.json["value"] = to_string(v);
    r.text = to_string(v) + "\n";
  } else if (o.action == "from-wfa") {
    const LinearRepresentation& rep = ws.wfa(file);
    const FormulaFile ff{wfa_to_formula(rep), rep.alphabet()};
    r.json["size"] = formula_size(ff.formula);
    r.json["restricted"] = is_restricted(ff.formula);
    r.json["formula"] = to_string(ff.formula);
    r.text = write_formula_file(ff);
  } else if (o.action == "ltft-report") {
    const FinAlgebra& alg = ws.algebra(file);
    require_valid(alg);
    const LtftDefinabilityReport rep =
        ltft_definability_report(alg, o.length, budget_or(o, kDefaultEvaluationBudget));
    r.json["algebra_dim"] = rep.algebra_dim;
    r.json["minimal_dim"] = rep.minimal_dim;
    r.json["alphabet_size"] = rep.alphabet_size;
    r.json["formula_size"] = rep.formula_size;
    r.json["restricted"] = rep.restricted;
    r.json["max_length"] = rep.max_length;
    r.json["words_checked"] = rep.words_checked;
    r.json["round_trip"] = rep.round_trip;
    if (!rep.round_trip) r.json["counterexample"] = word_to_string(rep.counterexample);
    r.text = "algebra_dim " + std::to_string(rep.algebra_dim) + "\nminimal_dim " +
             std::to_string(rep.minimal_dim) + "\nformula_size " + std::to_string(rep.formula_size) +
             "\nrestricted " + yes_no(rep.restricted) + "\nround_trip " + yes_no(rep.round_trip) + " (" +
             std::to_string(rep.words_checked) + " words, length <= " + std::to_string(rep.max_length) +
             ")\n" + (rep.passes() ? "PASS\n" : "FAIL\n");
    r.ok = rep.passes();
  }
  return r;
}

// ---- pipeline ----

Report pipeline_command(Workspace& ws, const Options& o) {
  Report r;
  const FiniteGroup& g = ws.group(file_arg(o, 1));
  const std::size_t genus = need_genus(o);
  Json steps = Json::array();
  std::string table;
  auto row = [&](const std::string& step, bool pass, const std::string& detail) {
    steps.push_back({{"step", step}, {"pass", pass}, {"detail", detail}});
    std::string padded = step;
    padded.resize(std::max<std::size_t>(padded.size() + 1, 34), ' ');
    table += padded + (pass ? "PASS" : "FAIL") + (detail.empty() ? "" : "  " + detail) + "\n";
    r.ok = r.ok && pass;
  };

  const Verdict valid = validate_group(g);
  row("group axioms", valid.ok, "|G| = " + std::to_string(g.order()));
  if (!valid.ok) fail(ErrorCode::InvalidGroup, valid.message);

  const GroupCodeReport code = verify_group_code(g);
  row("group code is biprefix", code.biprefix, "");
  row("syntactic algebra dim = |G|", code.dimension_matches, std::to_string(code.algebra_dim));
  row("letter map extends to Q[G]", code.letter_isomorphism, "");
  row("syntactic algebra semisimple", code.semisimple, "");

  const auto [alg, delta] = group_algebra(g, Normalization::Delta);
  const Triangulation surface = standard_triangulation(genus);
  const Rational z = state_sum(alg, surface, budget_or(o, kDefaultContractionBudget));
  const CenterData center_data = center(alg);
  const std::size_t classes = conjugacy_class_count(g);
  row("center dim = conjugacy classes", center_data.algebra.dim() == classes,
      std::to_string(center_data.algebra.dim()) + " = " + std::to_string(classes));
  const Rational sector =
      closed_invariant(center_data.algebra, restrict_functional(canonical_form(alg), center_data.subspace), genus);
  row("state sum genus " + std::to_string(genus) + " = closed sector", z == sector,
      "state_sum=" + to_string(z) + " closed_sector=" + to_string(sector));

  const auto dw = group_algebra(g, Normalization::DijkgraafWitten).second;
  const Rational closed =
      closed_invariant(center_data.algebra, restrict_functional(dw, center_data.subspace), genus);
  const std::uint64_t homs = count_surface_homs(g, genus, budget_or(o, kDefaultEnumerationBudget));
  Rational oracle(static_cast<long>(homs), static_cast<long>(g.order()));
  oracle.canonicalize();
  const bool match = closed == oracle;
  const std::string last = "closed_invariant=" + to_string(closed) + " oracle=" + std::to_string(homs) +
                           "/|G|=" + to_string(oracle) + (match ? " MATCH" : " MISMATCH");
  row("closed invariant vs hom count", match, "");
  r.json["genus"] = genus;
  r.json["steps"] = steps;
  r.json["state_sum"] = to_string(z);
  r.json["closed_invariant"] = to_string(closed);
  r.json["hom_count"] = homs;
  r.json["match"] = match;
  r.text = table + last + "\n";
  return r;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::BudgetExceeded:
      return 3;
    case ErrorCode::ParseError:
    case ErrorCode::SyntaxError:
    case ErrorCode::UnknownSymbol:
    case ErrorCode::UnknownCatalogEntry:
    case ErrorCode::ParameterTooLarge:
      return 2;
    default:
      return 1;
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations linking rational series, syntactic algebras, codes, 2D TFTs and weighted MSO",
               "syntaft"};
  Options o;
  bool json = false;
  app.add_flag("--json", json, "Machine-readable output");
  app.add_option("--budget", o.budget, "Cap on enumeration / contraction steps (0 = module default)");
  app.require_subcommand(1);
  app.fallthrough();

  auto family = [&](const std::string& name, const std::string& help,
                    const std::vector<std::string>& actions) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("action", o.action, "One of: " + CLI::detail::join(actions, ", "))
        ->required()
        ->check(CLI::IsMember(actions));
    sub->add_option("files", o.files, "Input files");
    sub->callback([&o, name] { o.family = name; });
    return sub;
  };

  CLI::App* wfa = family("wfa", "Weighted automata", {"eval", "min", "syntactic", "exchangeable"});
  wfa->add_option("--word", o.word, "Input word");

  CLI::App* alg = family("alg", "Finite-dimensional algebras",
                         {"check", "frobenius", "symmetric", "hyperplane", "semisimple", "center", "blocks",
                          "canonical"});
  alg->add_option("--functional", o.functional, "Functional file (default: canonical form)");

  CLI::App* group = family("group", "Finite groups", {"make", "algebra", "homcount"});
  group->add_option("--name", o.name, "cyclic, symmetric or klein");
  group->add_option("--param", o.param, "Catalog parameter");
  group->add_option("--form", o.form, "delta or dw")->check(CLI::IsMember({"delta", "dw"}));
  group->add_option("--genus", o.genus, "Surface genus");
  group->add_option("--functional-output", o.functional_output, "Write the group algebra functional here");

  family("code", "Codes and group codes", {"test", "prefix", "suffix", "groupcode", "verify-group"});

  CLI::App* tft = family("tft", "Lattice and closed TFT", {"analyze", "statesum", "pachner", "closed"});
  tft->add_option("--genus", o.genus, "Surface genus");
  tft->add_option("--moves", o.moves, "Move script file");
  tft->add_option("--functional", o.functional, "Functional file (default: canonical form)");
  tft->add_flag("--sector", o.sector, "Evaluate on the center (closed sector)");

  CLI::App* mso = family("mso", "Restricted weighted MSO", {"eval", "from-wfa", "ltft-report"});
  mso->add_option("--word", o.word, "Input word");
  mso->add_option("--length", o.length, "Round-trip word length for ltft-report");

  CLI::App* pipeline = family("pipeline", "End-to-end group pipeline", {"diagram"});
  pipeline->add_option("--genus", o.genus, "Surface genus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  for (CLI::App* sub : {wfa, mso}) o.has_word = o.has_word || sub->count("--word") > 0;
  for (CLI::App* sub : {group, tft, pipeline}) o.has_genus = o.has_genus || sub->count("--genus") > 0;

  Workspace ws;
  Report report;
  try {
    if (o.family == "wfa") report = wfa_command(ws, o);
    if (o.family == "alg") report = alg_command(ws, o);
    if (o.family == "group") report = group_command(ws, o);
    if (o.family == "code") report = code_command(ws, o);
    if (o.family == "tft") report = tft_command(ws, o);
    if (o.family == "mso") report = mso_command(ws, o);
    if (o.family == "pipeline") report = pipeline_command(ws, o);
  } catch (const UsageError& e) {
    if (json) {
      out << Json{{"command", o.family + " " + o.action}, {"ok", false},
                  {"error", {{"code", "Usage"}, {"message", e.what()}}}}.dump(2) << "\n";
    } else {
      err << "usage error: " << e.what() << "\n";
    }
    return 2;
  } catch (const Error& e) {
    if (json) {
      Json error{{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}};
      if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
        error["line"] = pe->line();
        error["column"] = pe->column();
      }
      out << Json{{"command", o.family + " " + o.action}, {"ok", false}, {"error", error}}.dump(2) << "\n";
    } else {
      err << "error: " << e.what() << "\n";
    }
    return exit_code_for(e.code());
  }

  if (json) {
    Json doc{{"command", o.family + " " + o.action}, {"ok", report.ok}};
    for (auto& [k, v] : report.json.items()) doc[k] = v;
    out << doc.dump(2) << "\n";
  } else {
    out << report.text;
  }
  return report.ok ? 0 : 1;
}

}  // namespace syntaft
