#include "permlll/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

namespace permlll {

namespace {

// Line reader that skips blanks and '#' comments and tracks the 1-based
// line number for error messages.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& out) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++line_;
      const auto hash = raw.find('#');
      if (hash != std::string::npos) raw.erase(hash);
      const auto first = raw.find_first_not_of(" \t\r\n");
      if (first == std::string::npos) continue;
      const auto last = raw.find_last_not_of(" \t\r\n");
      out = raw.substr(first, last - first + 1);
      return true;
    }
    return false;
  }

  int line() const { return line_; }

 private:
  std::istream& in_;
  int line_ = 0;
};

int parse_int(const std::string& token, int line, const char* what) {
  try {
    std::size_t used = 0;
    const long v = std::stol(token, &used);
    if (used != token.size()) throw std::invalid_argument("trailing characters");
    if (v < -1'000'000'000L || v > 1'000'000'000L) throw std::out_of_range("too large");
    return static_cast<int>(v);
  } catch (const std::exception&) {
    throw ParseError(line, std::string("expected an integer for ") + what + ", got '" + token + "'");
  }
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> tokens;
  std::istringstream is(s);
  std::string t;
  while (is >> t) tokens.push_back(t);
  return tokens;
}

int to_index(int one_based, int limit, int line, const char* what) {
  if (one_based < 1 || one_based > limit)
    throw ParseError(line, std::string(what) + " " + std::to_string(one_based) +
                               " out of range 1.." + std::to_string(limit));
  return one_based - 1;
}

template <typename T, typename Parser>
T load_from(const std::string& path, Parser parse) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse(in);
}

}  // namespace

EventListInput parse_event_list(std::istream& in) {
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) throw ParseError(reader.line(), "missing 'perms' header");
  auto tokens = split_ws(line);
  if (tokens.empty() || tokens[0] != "perms")
    throw ParseError(reader.line(), "first line must start with 'perms'");
  if (tokens.size() < 2) throw ParseError(reader.line(), "'perms' needs a count");
  const int k = parse_int(tokens[1], reader.line(), "permutation count");
  if (k < 1) throw ParseError(reader.line(), "need at least one permutation");
  if (static_cast<int>(tokens.size()) != 2 + k)
    throw ParseError(reader.line(), "'perms' header must list exactly " + std::to_string(k) +
                                        " sizes");
  EventListInput input;
  for (int i = 0; i < k; ++i) {
    const int n = parse_int(tokens[static_cast<std::size_t>(2 + i)], reader.line(), "size");
    if (n < 1) throw ParseError(reader.line(), "permutation sizes must be positive");
    input.sizes.push_back(n);
  }

  int next_id = 1;
  while (reader.next(line)) {
    tokens = split_ws(line);
    if (tokens[0] != "event")
      throw ParseError(reader.line(), "expected an 'event' line, got '" + tokens[0] + "'");
    if (tokens.size() < 2) throw ParseError(reader.line(), "'event' needs a triple count");
    const int t = parse_int(tokens[1], reader.line(), "triple count");
    if (t < 1) throw ParseError(reader.line(), "events need at least one triple");
    if (static_cast<int>(tokens.size()) != 2 + 3 * t)
      throw ParseError(reader.line(),
                       "'event' with " + std::to_string(t) + " triples needs " +
                           std::to_string(3 * t) + " further numbers");
    std::vector<Triple> triples;
    for (int i = 0; i < t; ++i) {
      const int kk = to_index(parse_int(tokens[static_cast<std::size_t>(2 + 3 * i)], reader.line(),
                                        "permutation index"),
                              static_cast<int>(input.sizes.size()), reader.line(),
                              "permutation index");
      const int n = input.sizes[static_cast<std::size_t>(kk)];
      const int x = to_index(
          parse_int(tokens[static_cast<std::size_t>(3 + 3 * i)], reader.line(), "domain value"), n,
          reader.line(), "domain value");
      const int y = to_index(
          parse_int(tokens[static_cast<std::size_t>(4 + 3 * i)], reader.line(), "range value"), n,
          reader.line(), "range value");
      triples.push_back({kk, x, y});
    }
    try {
      input.events.push_back(BadEvent::make(next_id, triples, input.sizes));
    } catch (const std::invalid_argument& e) {
      throw ParseError(reader.line(), e.what());
    }
    ++next_id;
  }
  if (input.events.empty()) throw ParseError(reader.line(), "no events given");
  return input;
}

EventListInput load_event_list(const std::string& path) {
  return load_from<EventListInput>(path, [](std::istream& in) { return parse_event_list(in); });
}

std::vector<std::vector<int>> parse_matrix_csv(std::istream& in) {
  LineReader reader(in);
  std::vector<std::vector<int>> rows;
  std::string line;
  while (reader.next(line)) {
    std::vector<int> row;
    std::string cell;
    std::istringstream is(line);
    while (std::getline(is, cell, ',')) {
      const auto first = cell.find_first_not_of(" \t");
      if (first == std::string::npos) throw ParseError(reader.line(), "empty cell");
      const auto last = cell.find_last_not_of(" \t");
      row.push_back(parse_int(cell.substr(first, last - first + 1), reader.line(), "cell"));
    }
    if (row.empty()) throw ParseError(reader.line(), "empty row");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError(reader.line(), "empty matrix");
  const std::size_t n = rows.size();
  for (std::size_t i = 0; i < n; ++i)
    if (rows[i].size() != n)
      throw ParseError(0, "matrix must be square: row " + std::to_string(i + 1) + " has " +
                              std::to_string(rows[i].size()) + " of " + std::to_string(n) +
                              " cells");
  return rows;
}

std::vector<std::vector<int>> load_matrix_csv(const std::string& path) {
  return load_from<std::vector<std::vector<int>>>(
      path, [](std::istream& in) { return parse_matrix_csv(in); });
}

BlockGraphInput parse_block_graph(std::istream& in) {
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) throw ParseError(reader.line(), "missing header");
  auto tokens = split_ws(line);
  if (tokens.size() != 4)
    throw ParseError(reader.line(), "header must be: vertices edges blocks block-size");
  const int n = parse_int(tokens[0], reader.line(), "vertex count");
  const int m = parse_int(tokens[1], reader.line(), "edge count");
  const int b = parse_int(tokens[2], reader.line(), "block count");
  const int s = parse_int(tokens[3], reader.line(), "block size");
  if (n < 1 || m < 0 || b < 1 || s < 1) throw ParseError(reader.line(), "header values out of range");
  if (b * s != n)
    throw ParseError(reader.line(), "blocks must partition the vertices: " + std::to_string(b) +
                                        " * " + std::to_string(s) +
                                        " != " + std::to_string(n));
  BlockGraphInput input;
  input.vertices = n;
  for (int e = 0; e < m; ++e) {
    if (!reader.next(line)) throw ParseError(reader.line(), "missing edge line");
    tokens = split_ws(line);
    if (tokens.size() != 2) throw ParseError(reader.line(), "edge lines are: u v");
    const int u = to_index(parse_int(tokens[0], reader.line(), "vertex"), n, reader.line(), "vertex");
    const int v = to_index(parse_int(tokens[1], reader.line(), "vertex"), n, reader.line(), "vertex");
    if (u == v) throw ParseError(reader.line(), "self-loops are not allowed");
    input.edges.emplace_back(u, v);
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int bi = 0; bi < b; ++bi) {
    if (!reader.next(line)) throw ParseError(reader.line(), "missing block line");
    tokens = split_ws(line);
    if (static_cast<int>(tokens.size()) != s)
      throw ParseError(reader.line(), "each block line must list exactly " + std::to_string(s) +
                                          " vertices");
    std::vector<int> block;
    for (const auto& t : tokens) {
      const int v = to_index(parse_int(t, reader.line(), "vertex"), n, reader.line(), "vertex");
      if (seen[static_cast<std::size_t>(v)])
        throw ParseError(reader.line(), "vertex " + std::to_string(v + 1) + " is in two blocks");
      seen[static_cast<std::size_t>(v)] = 1;
      block.push_back(v);
    }
    input.blocks.push_back(std::move(block));
  }
  if (reader.next(line)) throw ParseError(reader.line(), "unexpected trailing content");
  return input;
}

BlockGraphInput load_block_graph(const std::string& path) {
  return load_from<BlockGraphInput>(path, [](std::istream& in) { return parse_block_graph(in); });
}

HypergraphInput parse_hypergraph(std::istream& in) {
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) throw ParseError(reader.line(), "missing header");
  auto tokens = split_ws(line);
  if (tokens.size() != 3) throw ParseError(reader.line(), "header must be: vertices edges edge-size");
  const int v = parse_int(tokens[0], reader.line(), "vertex count");
  const int e = parse_int(tokens[1], reader.line(), "edge count");
  const int r = parse_int(tokens[2], reader.line(), "edge size");
  if (v < 1 || e < 0 || r < 1) throw ParseError(reader.line(), "header values out of range");
  HypergraphInput input;
  input.vertices = v;
  input.edge_size = r;
  for (int i = 0; i < e; ++i) {
    if (!reader.next(line)) throw ParseError(reader.line(), "missing edge line");
    tokens = split_ws(line);
    if (static_cast<int>(tokens.size()) != r)
      throw ParseError(reader.line(), "each edge must list exactly " + std::to_string(r) +
                                          " vertices");
    std::vector<int> edge;
    for (const auto& t : tokens) {
      const int u = to_index(parse_int(t, reader.line(), "vertex"), v, reader.line(), "vertex");
      if (std::find(edge.begin(), edge.end(), u) != edge.end())
        throw ParseError(reader.line(), "repeated vertex in edge");
      edge.push_back(u);
    }
    input.edges.push_back(std::move(edge));
  }
  if (reader.next(line)) throw ParseError(reader.line(), "unexpected trailing content");
  return input;
}

HypergraphInput load_hypergraph(const std::string& path) {
  return load_from<HypergraphInput>(path, [](std::istream& in) { return parse_hypergraph(in); });
}

std::vector<int> parse_permutation(std::istream& in) {
  std::vector<std::string> tokens;
  {
    LineReader reader(in);
    std::string line;
    while (reader.next(line))
      for (auto& t : split_ws(line)) tokens.push_back(std::move(t));
  }
  if (tokens.empty()) throw ParseError(1, "missing permutation size");
  const int n = parse_int(tokens[0], 1, "size");
  if (n < 1) throw ParseError(1, "size must be positive");
  if (static_cast<int>(tokens.size()) != n + 1)
    throw ParseError(1, "expected " + std::to_string(n) + " images after the size, got " +
                           std::to_string(tokens.size() - 1));
  std::vector<int> forward;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    const int img = to_index(parse_int(tokens[static_cast<std::size_t>(i + 1)], 1, "image"), n, 1,
                             "image");
    if (seen[static_cast<std::size_t>(img)])
      throw ParseError(1, "image " + std::to_string(img + 1) + " repeats");
    seen[static_cast<std::size_t>(img)] = 1;
    forward.push_back(img);
  }
  return forward;
}

std::vector<int> load_permutation(const std::string& path) {
  return load_from<std::vector<int>>(path, [](std::istream& in) { return parse_permutation(in); });
}

std::vector<std::pair<int, double>> parse_weights(std::istream& in) {
  LineReader reader(in);
  std::vector<std::pair<int, double>> weights;
  std::string line;
  while (reader.next(line)) {
    const auto tokens = split_ws(line);
    if (tokens.size() != 2) throw ParseError(reader.line(), "weight lines are: id value");
    const int id = parse_int(tokens[0], reader.line(), "event id");
    double value = 0.0;
    const auto slash = tokens[1].find('/');
    try {
      if (slash == std::string::npos) {
        std::size_t used = 0;
        value = std::stod(tokens[1], &used);
        if (used != tokens[1].size()) throw std::invalid_argument("trailing characters");
      } else {
        const double num = std::stod(tokens[1].substr(0, slash));
        const double den = std::stod(tokens[1].substr(slash + 1));
        if (den == 0.0) throw std::invalid_argument("zero denominator");
        value = num / den;
      }
    } catch (const std::exception&) {
      throw ParseError(reader.line(), "bad weight value '" + tokens[1] + "'");
    }
    if (!(value >= 0.0)) throw ParseError(reader.line(), "weights must be nonnegative");
    weights.emplace_back(id, value);
  }
  return weights;
}

std::vector<std::pair<int, double>> load_weights(const std::string& path) {
  return load_from<std::vector<std::pair<int, double>>>(
      path, [](std::istream& in) { return parse_weights(in); });
}

}  // namespace permlll
