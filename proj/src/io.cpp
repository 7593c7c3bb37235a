#include "qmatroid/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "qmatroid/errors.hpp"
#include "qmatroid/fq_matrix.hpp"

namespace qmatroid {

namespace {

// Lines become token vectors; blank lines and '#' comments disappear.
std::vector<std::vector<std::string>> tokenize(const std::string& text) {
  std::vector<std::vector<std::string>> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (!tokens.empty()) lines.push_back(std::move(tokens));
  }
  return lines;
}

long parse_long(const std::string& tok, const char* what) {
  try {
    std::size_t used = 0;
    long v = std::stol(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    fail(ErrorKind::ParseError,
         std::string(what) + ": expected an integer, got \"" + tok + "\"");
  }
  return 0;  // unreachable
}

// "7" or "-2" through from_int; "c0,c1,..." through the coefficient vector.
FieldElement parse_entry(const Field& f, const std::string& tok) {
  if (tok.find(',') == std::string::npos)
    return f.from_int(parse_long(tok, "matrix entry"));
  std::vector<long> coeffs;
  std::istringstream ts(tok);
  std::string piece;
  while (std::getline(ts, piece, ','))
    coeffs.push_back(parse_long(piece, "entry coefficient"));
  if (static_cast<int>(coeffs.size()) > f.degree())
    fail(ErrorKind::ParseError, "entry \"" + tok + "\" packs more than " +
                                    std::to_string(f.degree()) +
                                    " coefficients");
  return f.element(std::move(coeffs));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

Multigraph parse_graph_text(const std::string& text) {
  const auto lines = tokenize(text);
  if (lines.empty() || lines[0][0] != "graph" || lines[0].size() != 2)
    fail(ErrorKind::ParseError, "graph file starts with \"graph <name>\"");
  const std::string name = lines[0][1];
  if (lines.size() < 2 || lines[1][0] != "vertices" || lines[1].size() != 2)
    fail(ErrorKind::ParseError, "graph file needs \"vertices <n>\" second");
  const long n = parse_long(lines[1][1], "vertex count");
  if (n < 0) fail(ErrorKind::ParseError, "vertex count is negative");

  std::vector<Edge> edges;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const auto& t = lines[i];
    if (t[0] != "edge" || t.size() != 4)
      fail(ErrorKind::ParseError,
           "expected \"edge <id> <u> <v>\", got \"" + t[0] + "...\"");
    const long u = parse_long(t[2], "edge endpoint");
    const long v = parse_long(t[3], "edge endpoint");
    if (u < 1 || u > n || v < 1 || v > n)
      fail(ErrorKind::ParseError, "edge \"" + t[1] + "\" leaves 1.." +
                                      std::to_string(n));
    // Files are 1-based; the in-memory graph is 0-based.
    edges.push_back({t[1], static_cast<int>(u - 1), static_cast<int>(v - 1)});
  }
  return Multigraph(static_cast<int>(n), std::move(edges), name);
}

Multigraph load_graph_file(const std::string& path) {
  return parse_graph_text(read_file(path));
}

LoadedMatroid parse_matroid_text(const std::string& text,
                                 const std::string& base_dir) {
  const auto lines = tokenize(text);
  if (lines.empty() || lines[0][0] != "matroid" || lines[0].size() != 2)
    fail(ErrorKind::ParseError, "matroid file starts with \"matroid <name>\"");

  LoadedMatroid out;
  out.name = lines[0][1];
  if (lines.size() < 2)
    fail(ErrorKind::ParseError, "matroid \"" + out.name + "\" has no body");

  const auto& body = lines[1];
  if (body[0] == "uniform") {
    if (body.size() != 3)
      fail(ErrorKind::ParseError, "expected \"uniform <k> <n>\"");
    const long k = parse_long(body[1], "uniform rank");
    const long n = parse_long(body[2], "uniform size");
    out.oracle = RankOracleMatroid::uniform(static_cast<int>(k),
                                            static_cast<int>(n));
    if (lines.size() > 2)
      fail(ErrorKind::ParseError, "unexpected content after \"uniform\"");
    return out;
  }

  if (body[0] == "graphic") {
    if (body.size() != 2)
      fail(ErrorKind::ParseError, "expected \"graphic <graph-file>\"");
    std::filesystem::path p(body[1]);
    if (p.is_relative() && !base_dir.empty())
      p = std::filesystem::path(base_dir) / p;
    out.oracle = graphic_matroid_oracle(load_graph_file(p.string()));
    if (lines.size() > 2)
      fail(ErrorKind::ParseError, "unexpected content after \"graphic\"");
    return out;
  }

  if (body[0] != "field" || body.size() != 2)
    fail(ErrorKind::ParseError,
         "matroid body starts with \"field\", \"uniform\", or \"graphic\"");
  out.field = std::make_shared<Field>(Field::from_spec(body[1]));

  if (lines.size() < 3 || lines[2].size() != 4 || lines[2][0] != "rows" ||
      lines[2][2] != "cols")
    fail(ErrorKind::ParseError, "expected \"rows <r> cols <n>\"");
  const long r = parse_long(lines[2][1], "row count");
  const long n = parse_long(lines[2][3], "column count");
  if (r < 0 || n < 0)
    fail(ErrorKind::ParseError, "matrix dimensions are negative");

  if (lines.size() < static_cast<std::size_t>(3 + r))
    fail(ErrorKind::ParseError, "matrix needs " + std::to_string(r) +
                                    " entry lines");
  FqMatrix m(*out.field, static_cast<int>(r), static_cast<int>(n));
  for (long i = 0; i < r; ++i) {
    const auto& row = lines[3 + i];
    if (row.size() != static_cast<std::size_t>(n))
      fail(ErrorKind::ParseError, "matrix row " + std::to_string(i + 1) +
                                      " has " + std::to_string(row.size()) +
                                      " entries, expected " + std::to_string(n));
    for (long j = 0; j < n; ++j)
      m.set(static_cast<int>(i), static_cast<int>(j),
            parse_entry(*out.field, row[j]));
  }

  std::vector<std::string> labels;
  std::size_t next = 3 + static_cast<std::size_t>(r);
  if (next < lines.size()) {
    const auto& tail = lines[next];
    if (tail[0] != "labels")
      fail(ErrorKind::ParseError, "unexpected directive \"" + tail[0] + "\"");
    labels.assign(tail.begin() + 1, tail.end());
    if (labels.size() != static_cast<std::size_t>(n))
      fail(ErrorKind::ParseError, "labels line names " +
                                      std::to_string(labels.size()) +
                                      " columns, expected " + std::to_string(n));
    ++next;
  }
  if (next < lines.size())
    fail(ErrorKind::ParseError, "unexpected content after the matrix");

  out.represented = RepMatroid(std::move(m), std::move(labels));
  return out;
}

LoadedMatroid load_matroid_file(const std::string& path) {
  return parse_matroid_text(
      read_file(path), std::filesystem::path(path).parent_path().string());
}

}  // namespace qmatroid
