#pragma once

#include <memory>  // for shared_ptr
#include <string>  // for string
#include <vector>  // for vector

#include "rlcm/config.hpp"
#include "rlcm/semigroup.hpp"

namespace rlcm::test {

inline std::shared_ptr<Semigroup> family(std::string const& name) {
  return build_semigroup(catalog_config(name));
}

inline std::shared_ptr<Semigroup> fixture(std::string const& file) {
  return build_semigroup(load_config(std::string(RLCM_FIXTURE_DIR) + "/" + file));
}

inline std::vector<Element> ball(Semigroup const& S, int radius) {
  return enumerate_shortlex(S, S.generators(), radius);
}

}  // namespace rlcm::test
