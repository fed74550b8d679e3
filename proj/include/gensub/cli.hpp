#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gensub/construct.hpp"
#include "gensub/operators.hpp"
#include "gensub/poset.hpp"

namespace gensub {

struct CliConfig {
  std::string table_path;
  std::size_t depth = 2;
  ArgMode mode = ArgMode::kWildcard;
  std::size_t element_ceiling = kDefaultCeiling;
  std::optional<std::string> output_path;
};

/// Deterministic DOT digraph of the Hasse diagram; edges run from the lower
/// element to the upper one, nodes and edges in lexicographic order.
std::string export_dot(const Poset& p);

/// Command-line entry point. `args` excludes the program name. Returns the
/// process exit code: 0 for true/success, 1 for false/violation, 2 for errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gensub
