#pragma once

#include <memory>
#include <optional>
#include <string>

#include "qmatroid/field.hpp"
#include "qmatroid/graph.hpp"
#include "qmatroid/matroid.hpp"

namespace qmatroid {

/// A matroid read from a file, together with whatever it needs to stay
/// alive: represented matroids reference the owned Field, oracle-backed ones
/// (uniform or graphic) carry no field at all.
struct LoadedMatroid {
  std::string name;
  std::shared_ptr<Field> field;
  std::optional<RepMatroid> represented;
  std::optional<RankOracleMatroid> oracle;

  bool is_represented() const { return represented.has_value(); }
};

/// Text format, line oriented, '#' starts a comment:
///   matroid <name>
/// followed by one of three bodies. A represented matroid:
///   field <spec>
///   rows <r> cols <n>
///   <r lines of n entries>        entries are integers; for extension
///                                 fields an entry may pack coefficients
///                                 low-degree first as "c0,c1,..."
///   labels <e1> ... <en>          optional
/// a uniform matroid "uniform <k> <n>", or a graphic matroid
/// "graphic <path>" whose path is resolved against base_dir when relative.
LoadedMatroid parse_matroid_text(const std::string& text,
                                 const std::string& base_dir = "");
LoadedMatroid load_matroid_file(const std::string& path);

/// Text format:
///   graph <name>
///   vertices <n>
///   edge <id> <u> <v>             vertices are 1-based in files; u == v
///                                 declares a loop
Multigraph parse_graph_text(const std::string& text);
Multigraph load_graph_file(const std::string& path);

}  // namespace qmatroid
