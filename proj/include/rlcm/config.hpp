#pragma once

#include <map>          // for map
#include <memory>       // for shared_ptr
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for pair
#include <vector>       // for vector

#include "rlcm/families/self_similar.hpp"
#include "rlcm/semigroup.hpp"
#include "rlcm/verdict.hpp"

namespace rlcm {

struct ConfigValue {
  std::string text;
  int line = 0;
};

//! A parsed family description. The grammar is documented in
//! docs/config-format.md.
struct Config {
  std::string name;
  std::string kind;
  //! section -> key -> value, for every section except [automaton] rows.
  std::map<std::string, std::map<std::string, ConfigValue>> sections;
  std::vector<std::pair<MealyAutomaton::Row, int>> automaton_rows;
  SearchBudget budget;
  //! Expected outcomes per condition name, in file order.
  std::vector<std::pair<std::string, Outcome>> expect;

  //! Value of section.key, if present.
  std::optional<ConfigValue> get(std::string const& section, std::string const& key) const;
};

//! Throws ConfigError with the offending line.
Config parse_config(std::string_view text);
Config load_config(std::string const& path);

//! Builds the family; semantic errors are reported as ConfigError with the
//! line of the responsible key.
std::shared_ptr<Semigroup> build_semigroup(Config const& cfg);

//! Names of the built-in configurations, sorted.
std::vector<std::string> catalog_names();
//! Source text of a built-in configuration.
std::optional<std::string_view> catalog_text(std::string_view name);
//! Parses a built-in configuration; throws ConfigError for unknown names.
Config catalog_config(std::string_view name);
//! A built-in name, or else a path to a configuration file.
Config resolve_config(std::string const& name_or_path);

}  // namespace rlcm
