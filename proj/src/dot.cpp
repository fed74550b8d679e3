#include <sstream>

#include "gensub/cli.hpp"

namespace gensub {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string export_dot(const Poset& p) {
  std::ostringstream os;
  os << "digraph poset {\n  rankdir=BT;\n";
  for (const auto& e : p.elements()) os << "  " << quoted(e) << ";\n";
  for (const auto& [lo, hi] : p.covers()) os << "  " << quoted(lo) << " -> " << quoted(hi) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace gensub
