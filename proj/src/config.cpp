#include "rlcm/config.hpp"

#include <algorithm>  // for find
#include <fstream>    // for ifstream
#include <set>        // for set
#include <sstream>    // for stringstream

#include "rlcm/families/free_abelian.hpp"
#include "rlcm/families/free_monoid.hpp"
#include "rlcm/families/polynomial.hpp"
#include "rlcm/families/semidirect.hpp"
#include "rlcm/text.hpp"

namespace rlcm {

namespace {

std::set<std::string> const kConditions = {
    "C1", "C2", "D1", "D2", "D3", "strong-effectiveness", "effectiveness",
    "right-cancellative", "recurrent"};

std::map<std::string, std::set<std::string>> const kKeys = {
    {"family", {"kind", "name"}},
    {"monoid", {"presentation", "generators", "rank", "unital", "alphabet"}},
    {"group", {"kind", "dims", "rank", "modulus"}},
    {"action", {"scalar", "generators"}},
    {"automaton", {"alphabet", "states", "depth", "names-radius"}},
    {"generators", {"ball"}},
    {"budget", {"radius", "max-candidates", "depth"}},
    {"expect", {}},
};

std::string strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return std::string(trim(line.substr(0, hash)));
}

i64 int_value(ConfigValue const& v) {
  try {
    return parse_int(v.text);
  } catch (ParseError const& e) {
    throw ConfigError(e.what(), v.line);
  }
}

std::vector<std::string> words(std::string_view s) {
  std::vector<std::string> out;
  std::stringstream in{std::string(s)};
  for (std::string w; in >> w;) {
    out.push_back(w);
  }
  return out;
}

bool bool_value(ConfigValue const& v) {
  if (v.text == "true") {
    return true;
  }
  if (v.text == "false") {
    return false;
  }
  throw ConfigError("expected true or false, got '" + v.text + "'", v.line);
}

MealyAutomaton::Row parse_row(std::string const& s, int line) {
  // state, letter -> output, next
  auto arrow = s.find("->");
  auto lhs   = split_top_level(std::string_view(s).substr(0, arrow), ',');
  auto rhs   = split_top_level(std::string_view(s).substr(arrow + 2), ',');
  if (lhs.size() != 2 || rhs.size() != 2 || lhs[1].size() != 1 || rhs[0].size() != 1) {
    throw ConfigError("expected 'state, letter -> output, next'", line);
  }
  return {std::string(lhs[0]), lhs[1][0], rhs[0][0], std::string(rhs[1])};
}

}  // namespace

std::optional<ConfigValue> Config::get(std::string const& section,
                                       std::string const& key) const {
  auto s = sections.find(section);
  if (s == sections.end()) {
    return std::nullopt;
  }
  auto k = s->second.find(key);
  if (k == s->second.end()) {
    return std::nullopt;
  }
  return k->second;
}

Config parse_config(std::string_view text) {
  Config cfg;
  std::string section;
  std::stringstream in{std::string(text)};
  int lineno = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    std::string line = strip_comment(raw);
    if (line.empty()) {
      continue;
    }
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigError("unterminated section header", lineno);
      }
      section = std::string(trim(std::string_view(line).substr(1, line.size() - 2)));
      if (!kKeys.count(section)) {
        throw ConfigError("unknown section [" + section + "]", lineno);
      }
      if (cfg.sections.count(section)) {
        throw ConfigError("section [" + section + "] repeated", lineno);
      }
      cfg.sections[section];
      continue;
    }
    if (section.empty()) {
      throw ConfigError("entry outside of any section", lineno);
    }
    if (section == "automaton" && line.find("->") != std::string::npos) {
      cfg.automaton_rows.emplace_back(parse_row(line, lineno), lineno);
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("expected 'key = value'", lineno);
    }
    std::string key(trim(std::string_view(line).substr(0, eq)));
    std::string value(trim(std::string_view(line).substr(eq + 1)));
    if (key.empty()) {
      throw ConfigError("empty key", lineno);
    }
    bool known = kKeys.at(section).count(key) > 0
                 || (section == "action" && key.rfind("theta.", 0) == 0)
                 || section == "expect";
    if (!known) {
      throw ConfigError("unknown key '" + key + "' in [" + section + "]", lineno);
    }
    auto& sec = cfg.sections[section];
    if (sec.count(key)) {
      throw ConfigError("key '" + key + "' repeated", lineno);
    }
    sec[key] = ConfigValue{value, lineno};
    if (section == "expect") {
      if (!kConditions.count(key)) {
        throw ConfigError("unknown condition '" + key + "'", lineno);
      }
      Outcome o;
      if (value == "Holds") {
        o = Outcome::Holds;
      } else if (value == "Fails") {
        o = Outcome::Fails;
      } else if (value == "Unknown") {
        o = Outcome::Unknown;
      } else {
        throw ConfigError("expected Holds, Fails or Unknown", lineno);
      }
      cfg.expect.emplace_back(key, o);
    } else if (section == "budget") {
      i64 n = int_value(sec[key]);
      if (n < 0) {
        throw ConfigError("budget values must be nonnegative", lineno);
      }
      if (key == "radius") {
        cfg.budget.radius = static_cast<int>(n);
      } else if (key == "depth") {
        cfg.budget.depth = static_cast<int>(n);
      } else {
        cfg.budget.max_candidates = static_cast<std::size_t>(n);
      }
    }
  }
  auto kind = cfg.get("family", "kind");
  if (!kind) {
    throw ConfigError("missing [family] kind", lineno);
  }
  cfg.kind = kind->text;
  auto name = cfg.get("family", "name");
  cfg.name  = name ? name->text : cfg.kind;
  return cfg;
}

Config load_config(std::string const& path) {
  std::ifstream f(path);
  if (!f) {
    throw ConfigError("cannot open " + path, 0);
  }
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

namespace {

ConfigValue require(Config const& cfg, std::string const& section, std::string const& key) {
  auto v = cfg.get(section, key);
  if (!v) {
    throw ConfigError("missing " + key + " in [" + section + "]", 0);
  }
  return *v;
}

template <typename F>
auto at_line(int line, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (ConfigError const&) {
    throw;
  } catch (Error const& e) {
    throw ConfigError(e.what(), static_cast<std::size_t>(line));
  }
}

Presentation presentation(Config const& cfg) {
  auto kind = require(cfg, "monoid", "presentation");
  return at_line(kind.line, [&] {
    std::vector<u64> gens;
    if (auto g = cfg.get("monoid", "generators")) {
      for (auto const& w : words(g->text)) {
        gens.push_back(static_cast<u64>(parse_int(w)));
      }
    }
    if (kind.text == "primes") {
      return Presentation::all_primes(gens);
    }
    if (kind.text == "integers") {
      return Presentation::integers(gens);
    }
    if (kind.text == "tuple") {
      return Presentation::tuple(static_cast<unsigned>(int_value(require(cfg, "monoid", "rank"))));
    }
    throw ConfigError("presentation must be primes, integers or tuple", kind.line);
  });
}

std::shared_ptr<Semigroup> build_lattice(Config const& cfg) {
  Presentation P = presentation(cfg);
  LatticeActionSpec spec;
  if (auto d = cfg.get("group", "dims")) {
    spec.dims = d->text == "infinite" ? 0 : static_cast<unsigned>(int_value(*d));
    if (d->text != "infinite" && spec.dims == 0) {
      throw ConfigError("dims must be positive or 'infinite'", d->line);
    }
  }
  if (auto s = cfg.get("action", "scalar")) {
    spec.scalar = bool_value(*s);
  }
  auto const& action = cfg.sections.count("action") ? cfg.sections.at("action")
                                                    : std::map<std::string, ConfigValue>{};
  for (auto const& [key, v] : action) {
    if (key.rfind("theta.", 0) != 0) {
      continue;
    }
    at_line(v.line, [&] {
      u64 id    = P.parse_id(key.substr(6));
      auto list = words(v.text);
      bool rep  = !list.empty() && list.back() == "...";
      if (rep) {
        list.pop_back();
      }
      if (list.empty()) {
        throw ConfigError("no multipliers given", v.line);
      }
      std::vector<i64> ms;
      for (auto const& w : list) {
        ms.push_back(parse_int(w));
      }
      if (rep) {
        spec.tail[id] = ms.back();
      }
      spec.head[id] = ms;
      return 0;
    });
  }
  int line = cfg.get("group", "kind")->line;
  return at_line(line, [&] { return make_lattice_semidirect(cfg.name, spec, P); });
}

std::shared_ptr<Semigroup> build_semidirect(Config const& cfg) {
  auto kind = require(cfg, "group", "kind");
  if (kind.text == "lattice") {
    return build_lattice(cfg);
  }
  if (kind.text == "shift") {
    auto rank    = int_value(require(cfg, "group", "rank"));
    auto modulus = cfg.get("group", "modulus");
    return at_line(kind.line, [&] {
      return make_shift_semidirect(cfg.name, static_cast<unsigned>(rank),
                                   modulus ? int_value(*modulus) : 0);
    });
  }
  if (kind.text == "polynomial") {
    auto gens = require(cfg, "action", "generators");
    return at_line(gens.line, [&] {
      std::vector<Poly> ps;
      for (auto p : split_top_level(gens.text, ';')) {
        ps.push_back(parse_poly(p));
      }
      return make_polynomial_semidirect(cfg.name, ps);
    });
  }
  if (kind.text == "free") {
    auto rank = int_value(require(cfg, "group", "rank"));
    std::vector<std::vector<i64>> m;
    for (std::size_t i = 0;; ++i) {
      auto v = cfg.get("action", "theta." + std::to_string(i));
      if (!v) {
        break;
      }
      at_line(v->line, [&] {
        std::vector<i64> row;
        for (auto const& w : words(v->text)) {
          row.push_back(parse_int(w));
        }
        m.push_back(row);
        return 0;
      });
    }
    return at_line(kind.line, [&] {
      return make_free_group_semidirect(cfg.name, static_cast<unsigned>(rank), m);
    });
  }
  throw ConfigError("group kind must be lattice, shift, polynomial or free", kind.line);
}

std::shared_ptr<Semigroup> build_zappa_szep(Config const& cfg) {
  auto alphabet = require(cfg, "automaton", "alphabet");
  auto states   = require(cfg, "automaton", "states");
  std::vector<MealyAutomaton::Row> rows;
  for (auto const& [r, line] : cfg.automaton_rows) {
    rows.push_back(r);
  }
  unsigned depth = 6;
  int radius     = 5;
  if (auto d = cfg.get("automaton", "depth")) {
    depth = static_cast<unsigned>(int_value(*d));
  }
  if (auto r = cfg.get("automaton", "names-radius")) {
    radius = static_cast<int>(int_value(*r));
  }
  int line = cfg.automaton_rows.empty() ? states.line : cfg.automaton_rows.front().second;
  return at_line(line, [&] {
    MealyAutomaton aut(Alphabet(alphabet.text), words(states.text), rows);
    return std::make_shared<ZappaSzep>(cfg.name, std::move(aut), depth, radius);
  });
}

}  // namespace

std::shared_ptr<Semigroup> build_semigroup(Config const& cfg) {
  std::shared_ptr<Semigroup> S;
  if (cfg.kind == "free-abelian") {
    bool unital = true;
    if (auto u = cfg.get("monoid", "unital")) {
      unital = bool_value(*u);
    }
    auto P = presentation(cfg);
    S      = std::make_shared<FreeAbelian>(cfg.name, P, unital);
  } else if (cfg.kind == "free-monoid") {
    auto a = require(cfg, "monoid", "alphabet");
    S      = at_line(a.line,
                     [&] { return std::make_shared<FreeMonoid>(cfg.name, Alphabet(a.text)); });
  } else if (cfg.kind == "semidirect") {
    S = build_semidirect(cfg);
  } else if (cfg.kind == "zappa-szep") {
    S = build_zappa_szep(cfg);
  } else {
    throw ConfigError("unknown family kind '" + cfg.kind + "'",
                      static_cast<std::size_t>(cfg.get("family", "kind")->line));
  }
  if (auto ball = cfg.get("generators", "ball")) {
    at_line(ball->line, [&] {
      std::vector<Element> gens;
      for (auto g : split_top_level(ball->text, ';')) {
        gens.push_back(S->parse(g));
      }
      set_ball_generators(*S, gens);
      return 0;
    });
  }
  return S;
}

Config catalog_config(std::string_view name) {
  auto text = catalog_text(name);
  if (!text) {
    throw ConfigError("no built-in configuration named '" + std::string(name) + "'", 0);
  }
  return parse_config(*text);
}

Config resolve_config(std::string const& name_or_path) {
  if (catalog_text(name_or_path)) {
    return catalog_config(name_or_path);
  }
  return load_config(name_or_path);
}

}  // namespace rlcm
