#pragma once

#include <map>
#include <memory>
#include <string>

#include "gensub/types.hpp"

namespace fixtures {

inline std::string path(const std::string& name) {
  return std::string(GENSUB_FIXTURE_DIR) + "/" + name;
}

inline const gensub::ClassTable& table(const std::string& name) {
  static std::map<std::string, std::shared_ptr<const gensub::ClassTable>> cache;
  auto& slot = cache[name];
  if (!slot) slot = std::make_shared<const gensub::ClassTable>(gensub::load_class_table(path(name + ".gt")));
  return *slot;
}

inline const gensub::ClassTable& h1() { return table("h1"); }
inline const gensub::ClassTable& h2() { return table("h2"); }
inline const gensub::ClassTable& h3() { return table("h3"); }
inline const gensub::ClassTable& c() { return table("c"); }

inline gensub::TypeExpr ty(const gensub::ClassTable& t, const std::string& text) {
  return gensub::parse_type(text, t);
}

}  // namespace fixtures
