// Command-line front end: checks, normal forms, norms, ideal lattices,
// oracle crosschecks, quotients and reconstructions for catalog families or
// configuration files.

#include <cstdlib>   // for getenv
#include <fstream>   // for ofstream
#include <iostream>  // for cout, cerr
#include <map>       // for map
#include <set>       // for set
#include <sstream>   // for ostringstream

#include "CLI11.hpp"
#include "rlcm/config.hpp"
#include "rlcm/properties.hpp"
#include "rlcm/quotient.hpp"
#include "rlcm/regrep.hpp"
#include "rlcm/sampling.hpp"
#include "rlcm/star_algebra.hpp"
#include "rlcm/text.hpp"

using namespace rlcm;

namespace {

constexpr int kOk       = 0;
constexpr int kMismatch = 1;
constexpr int kBadInput = 2;

char const* const kBudgetVariable = "RLCM_BUDGET";

struct Options {
  std::string family;
  std::string expression;
  std::string conditions;
  std::string format = "text";
  std::string output;
  int radius           = -1;
  int depth            = -1;
  long long candidates = -1;
  std::uint64_t seed   = 1;
  std::size_t samples  = 100;
  bool inject_fault    = false;
};

void apply_budget_entry(SearchBudget& b, std::string_view key, std::string_view value) {
  auto n = parse_int(value);
  if (n < 0) {
    throw ConfigError("negative budget value for " + std::string(key), 0);
  }
  if (key == "radius") {
    b.radius = static_cast<int>(n);
  } else if (key == "depth") {
    b.depth = static_cast<int>(n);
  } else if (key == "max-candidates") {
    b.max_candidates = static_cast<std::size_t>(n);
  } else {
    throw ConfigError("unknown budget key '" + std::string(key) + "'", 0);
  }
}

// Built-in defaults, then RLCM_BUDGET ("radius=3,depth=6,max-candidates=N"),
// then the [budget] section of the configuration, then flags.
SearchBudget resolve_budget(Config const& cfg, Options const& opt) {
  SearchBudget b;
  if (char const* env = std::getenv(kBudgetVariable)) {
    std::string_view text(env);
    if (!trim(text).empty()) {
      for (auto entry : split_top_level(text, ',')) {
        auto kv = split_top_level(entry, '=');
        if (kv.size() != 2) {
          throw ConfigError(std::string(kBudgetVariable) + ": expected key=value in '"
                                + std::string(entry) + "'",
                            0);
        }
        apply_budget_entry(b, trim(kv[0]), trim(kv[1]));
      }
    }
  }
  auto it = cfg.sections.find("budget");
  if (it != cfg.sections.end()) {
    for (auto const& [key, value] : it->second) {
      apply_budget_entry(b, key, value.text);
    }
  }
  if (opt.radius >= 0) {
    b.radius = opt.radius;
  }
  if (opt.depth >= 0) {
    b.depth = opt.depth;
  }
  if (opt.candidates >= 0) {
    b.max_candidates = static_cast<std::size_t>(opt.candidates);
  }
  return b;
}

struct Loaded {
  Config cfg;
  std::shared_ptr<Semigroup> S;
  SearchBudget budget;
};

Loaded load(Options const& opt) {
  Loaded l;
  l.cfg    = resolve_config(opt.family);
  l.S      = build_semigroup(l.cfg);
  l.budget = resolve_budget(l.cfg, opt);
  return l;
}

void emit(Options const& opt, std::string const& text) {
  if (opt.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.output);
  if (!out) {
    throw PreconditionError("cannot write " + opt.output);
  }
  out << text;
}

std::vector<std::string> split_names(std::string const& list) {
  std::vector<std::string> out;
  for (auto part : split_top_level(list, ',')) {
    auto name = trim(part);
    if (!name.empty()) {
      out.emplace_back(name);
    }
  }
  return out;
}

int cmd_check(Options const& opt) {
  auto l = load(opt);
  std::vector<std::string> names;
  if (opt.conditions.empty()) {
    for (auto const& c : registered_checks()) {
      if (c.applies(*l.S)) {
        names.push_back(c.name);
      }
    }
  } else {
    names = split_names(opt.conditions);
  }
  std::map<std::string, Outcome> expected(l.cfg.expect.begin(), l.cfg.expect.end());
  std::vector<CheckRecord> records;
  bool contradicted = false;
  for (auto const& name : names) {
    auto const& check = find_check(name);
    CheckRecord rec{name, check.run(*l.S, l.budget), l.budget, std::nullopt};
    if (auto it = expected.find(name); it != expected.end()) {
      rec.expected = it->second;
    }
    contradicted = contradicted || contradicts_expectation(rec);
    records.push_back(std::move(rec));
  }
  emit(opt, format_report(*l.S, records));
  return contradicted ? kMismatch : kOk;
}

int cmd_normal_form(Options const& opt) {
  auto l = load(opt);
  StarAlgebra alg(l.S);
  emit(opt, alg.format(alg.parse(opt.expression)) + "\n");
  return kOk;
}

std::string norm_text(Rational const& value, bool squared) {
  return squared ? "sqrt(" + to_string(value) + ")" : to_string(value);
}

int cmd_norm(Options const& opt) {
  auto l = load(opt);
  StarAlgebra alg(l.S);
  auto a = alg.parse(opt.expression);
  auto d = alg.phi_D(a);
  if (alg.to_algebra(d) != a) {
    std::cerr << "error: " << alg.format(a) << " is not a combination of ideal projections\n";
    return kBadInput;
  }
  auto n = alg.diagonal_norm(d, l.budget);
  if (n.outcome != Outcome::Holds) {
    emit(opt, "norm = unknown\ndetail = " + n.detail + "\n");
    return kMismatch;
  }
  std::string out = "norm = " + norm_text(n.value, n.squared) + "\n";
  if (n.witness) {
    out += "witness = " + alg.semigroup().format(*n.witness) + "\n";
  }
  emit(opt, out);
  return kOk;
}

// Ideal classes of the ball, their covering relation and unit orbits.
struct Lattice {
  std::vector<Element> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> covers;  // (bigger, smaller)
  std::vector<std::size_t> orbit;
};

Lattice build_lattice(Semigroup const& S, int radius, SearchBudget const& budget) {
  Lattice L;
  std::map<Element, std::size_t> index;
  for (auto const& p : enumerate_shortlex(S, S.generators(), radius, budget.max_candidates)) {
    Element rep = S.ideal_rep(p);
    if (index.emplace(rep, L.nodes.size()).second) {
      L.nodes.push_back(rep);
    }
  }
  std::size_t n = L.nodes.size();
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      below[i][j] = i != j && ideal_contains(S, L.nodes[i], L.nodes[j]);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!below[i][j]) {
        continue;
      }
      bool covering = true;
      for (std::size_t k = 0; k < n && covering; ++k) {
        covering = !(below[i][k] && below[k][j]);
      }
      if (covering) {
        L.covers.emplace_back(i, j);
      }
    }
  }
  // Union-find over the action of the unit generators.
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) {
    parent[i] = i;
  }
  auto find = [&](std::size_t i) {
    while (parent[i] != i) {
      i = parent[i] = parent[parent[i]];
    }
    return i;
  };
  for (auto const& x : S.unit_generators()) {
    for (std::size_t i = 0; i < n; ++i) {
      auto it = index.find(S.ideal_rep(S.multiply(x, L.nodes[i])));
      if (it != index.end()) {
        auto a = find(i), b = find(it->second);
        parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  std::map<std::size_t, std::size_t> label;
  for (std::size_t i = 0; i < n; ++i) {
    L.orbit.push_back(label.emplace(find(i), label.size()).first->second);
  }
  return L;
}

std::string dot_escape(std::string const& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
    }
    out += c;
  }
  return out;
}

int cmd_lattice(Options const& opt) {
  auto l     = load(opt);
  auto const& S = *l.S;
  auto L     = build_lattice(S, l.budget.radius, l.budget);
  std::ostringstream out;
  if (opt.format == "dot") {
    out << "digraph \"" << dot_escape(S.name()) << "\" {\n";
    out << "  node [style=filled, colorscheme=set312];\n";
    for (std::size_t i = 0; i < L.nodes.size(); ++i) {
      out << "  n" << i << " [label=\"" << dot_escape(S.format(L.nodes[i]) + " S")
          << "\", fillcolor=" << (L.orbit[i] % 12 + 1) << "];\n";
    }
    for (auto const& [a, b] : L.covers) {
      out << "  n" << a << " -> n" << b << ";\n";
    }
    out << "}\n";
  } else {
    for (std::size_t i = 0; i < L.nodes.size(); ++i) {
      std::vector<std::string> down;
      for (auto const& [a, b] : L.covers) {
        if (a == i) {
          down.push_back(S.format(L.nodes[b]));
        }
      }
      out << S.format(L.nodes[i]) << " orbit=" << L.orbit[i] << " covers=" << join(down, " ")
          << "\n";
    }
  }
  emit(opt, out.str());
  return kOk;
}

Rational square(Rational const& v, bool squared) {
  return squared ? v : Rational(v * v);
}

int cmd_oracle(Options const& opt) {
  auto l = load(opt);
  StarAlgebra alg(l.S);
  alg.inject_fault(opt.inject_fault);
  auto ball     = generate_ball(alg, l.budget.radius);
  Sampler rand(alg, opt.seed);
  std::ostringstream out;
  std::vector<std::string> mismatches;
  out << "ball = " << ball.size() << " elements (radius " << l.budget.radius << ")\n";

  std::size_t entries = 0;
  for (std::size_t i = 0; i < opt.samples; ++i) {
    auto a = rand.algebra_element(3);
    auto b = rand.algebra_element(3);
    auto r = crosscheck_product(alg, a, b, ball);
    entries += r.nonzero_entries;
    if (!r.ok) {
      mismatches.push_back("product (" + alg.format(a) + ") (" + alg.format(b)
                           + ") at basis vector " + r.mismatch);
    }
  }
  out << "products: " << opt.samples << " pairs, " << entries << " nonzero entries compared\n";

  for (std::size_t i = 0; i < opt.samples; ++i) {
    auto d    = rand.diagonal_element(4);
    auto norm = alg.diagonal_norm(d, l.budget);
    if (norm.outcome != Outcome::Holds) {
      continue;
    }
    auto sym   = square(norm.value, norm.squared);
    auto lower = oracle_diagonal_norm(alg, d, ball);
    Ball with  = ball;
    with.extend({*norm.witness});
    auto exact = oracle_diagonal_norm(alg, d, with);
    if (square(lower.value, lower.squared) > sym || square(exact.value, exact.squared) != sym) {
      mismatches.push_back("norm of " + alg.format(d));
    }
  }
  out << "norms: " << opt.samples << " diagonal elements\n";

  std::size_t confirmed = 0;
  for (std::size_t i = 0; i < opt.samples; ++i) {
    ProjectionSpec spec;
    spec.F = rand.ideal_set(3);
    for (auto const& X : spec.F) {
      if (rand.below(2) == 0) {
        spec.A.insert(X);
      }
    }
    auto v      = alg.is_nonzero_projection(spec, l.budget);
    bool oracle = oracle_projection_nonzero(alg, spec, ball);
    bool inside = v.is_holds() && !v.data.empty() && ball.contains(v.data[0]);
    if ((v.is_fails() && oracle) || (inside && !oracle)) {
      mismatches.push_back("projection Q for F = " + std::to_string(spec.F.size())
                           + " ideals: symbolic " + to_string(v.outcome));
    }
    confirmed += inside && oracle;
  }
  out << "projections: " << opt.samples << " sampled, " << confirmed
      << " confirmed inside the ball\n";

  for (auto const& m : mismatches) {
    out << "mismatch: " << m << "\n";
  }
  out << (mismatches.empty() ? "result = agree\n" : "result = mismatch\n");
  emit(opt, out.str());
  return mismatches.empty() ? kOk : kMismatch;
}

int cmd_quotient(Options const& opt) {
  auto l = load(opt);
  auto Q = build_quotient(l.S, l.budget);
  std::ostringstream out;
  out << "quotient = " << Q->name() << "\n";
  out << "generators = " << format_list(*Q, Q->generators()) << "\n";
  out << "classes = "
      << format_list(*Q, enumerate_shortlex(*Q, Q->generators(), l.budget.radius,
                                            l.budget.max_candidates))
      << "\n";
  auto v = validate_quotient(*Q, l.budget);
  out << "validation = " << to_string(v.outcome) << " (" << v.detail << ")\n";
  emit(opt, out.str());
  return v.is_holds() ? kOk : kMismatch;
}

int cmd_reconstruct(Options const& opt) {
  auto l = load(opt);
  auto Q = build_quotient(l.S, l.budget);
  auto r = reconstruct_semidirect(*Q, canonical_transversal(*Q), l.budget);
  std::ostringstream out;
  out << "verdict = " << to_string(r.verdict.outcome) << "\n";
  out << "detail = " << r.verdict.detail << "\n";
  out << "rule = " << r.verdict.citation << "\n";
  out << "units = " << r.units << "\nclasses = " << r.classes << "\nball = " << r.ball_size
      << "\nchecks = " << r.checks << "\n";
  emit(opt, out.str());
  return r.verdict.is_holds() ? kOk : kMismatch;
}

int cmd_list(Options const& opt) {
  std::string out;
  for (auto const& name : catalog_names()) {
    auto cfg = catalog_config(name);
    out += name + " (" + cfg.kind + ")\n";
  }
  emit(opt, out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Right LCM semigroups, their ideal conditions and boundary quotient algebras"};
  app.require_subcommand(1);
  Options opt;
  int (*selected)(Options const&) = nullptr;

  auto common = [&](CLI::App* cmd, bool with_budget) {
    cmd->add_option("family", opt.family, "catalog name or configuration file")->required();
    cmd->add_option("-o,--output", opt.output, "write the result to a file");
    if (with_budget) {
      cmd->add_option("--radius", opt.radius, "generator-word radius");
      cmd->add_option("--depth", opt.depth, "word depth for self-similar searches");
      cmd->add_option("--budget", opt.candidates, "maximum candidates per search");
    }
  };

  auto* check = app.add_subcommand("check", "run condition checks and print a report");
  common(check, true);
  check->add_option("--conditions", opt.conditions, "comma-separated names (default: all)");
  check->callback([&] { selected = cmd_check; });

  auto* nf = app.add_subcommand("normal-form", "print the canonical form of an expression");
  common(nf, false);
  nf->add_option("expression", opt.expression)->required();
  nf->callback([&] { selected = cmd_normal_form; });

  auto* norm = app.add_subcommand("norm", "exact norm of a combination of ideal projections");
  common(norm, true);
  norm->add_option("expression", opt.expression)->required();
  norm->callback([&] { selected = cmd_norm; });

  auto* lattice = app.add_subcommand("lattice", "principal right ideals of a ball");
  common(lattice, true);
  lattice->add_option("--format", opt.format, "dot or text")
      ->check(CLI::IsMember({"dot", "text"}));
  lattice->callback([&] { selected = cmd_lattice; });

  auto* oracle = app.add_subcommand("oracle", "crosscheck against the truncated representation");
  common(oracle, true);
  oracle->add_option("--seed", opt.seed, "sampling seed");
  oracle->add_option("--samples", opt.samples, "samples per check");
  oracle->add_flag("--inject-fault", opt.inject_fault, "corrupt the product rewriting");
  oracle->callback([&] { selected = cmd_oracle; });

  auto* quotient = app.add_subcommand("quotient", "quotient by the unit group");
  common(quotient, true);
  quotient->callback([&] { selected = cmd_quotient; });

  auto* reconstruct = app.add_subcommand("reconstruct", "rebuild S as units x quotient");
  common(reconstruct, true);
  reconstruct->callback([&] { selected = cmd_reconstruct; });

  auto* list = app.add_subcommand("list", "list the built-in catalog");
  list->callback([&] { selected = cmd_list; });

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    return app.exit(e) == 0 ? kOk : kBadInput;
  }

  try {
    return selected(opt);
  } catch (ParseError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (!opt.expression.empty()) {
      std::cerr << "  " << opt.expression << "\n  " << std::string(e.position(), ' ') << "^\n";
    }
    return kBadInput;
  } catch (ConfigError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (PreconditionError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  }
}
