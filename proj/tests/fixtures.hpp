#pragma once

#include <fstream>
#include <random>
#include <string>

#include <json.hpp>

#include "pathobj/errors.hpp"

namespace fixtures {

inline nlohmann::json load(const std::string& name) {
  std::ifstream in(std::string(PATHOBJ_DATA_DIR) + "/" + name);
  if (!in) throw pathobj::InputError("fixture not found: " + name);
  return nlohmann::json::parse(in);
}

}  // namespace fixtures
