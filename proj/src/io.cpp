#include "cotrans/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "cotrans/error.hpp"

namespace cotrans {

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      const std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i > start) line.tokens.push_back({raw.substr(start, i - start), start + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

int parse_count(const Line& line, const Token& tok) {
  int value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || value < 0) {
    throw ParseError(line.number, tok.column, "expected a non-negative integer, got '" + tok.text + "'");
  }
  return value;
}

int parse_element(const Line& line, const Token& tok, std::optional<int> bound) {
  const int value = parse_count(line, tok);
  if (!bound) throw ParseError(line.number, tok.column, "size must be declared first");
  if (value < 1 || value > *bound) {
    throw ParseError(line.number, tok.column,
                     "vertex " + tok.text + " outside [1, " + std::to_string(*bound) + "]");
  }
  return value;
}

void expect_arity(const Line& line, std::size_t min, std::size_t max) {
  const std::size_t args = line.tokens.size() - 1;
  if (args < min || args > max) {
    throw ParseError(line.number, 0, "'" + line.tokens[0].text + "' takes " +
                                         (min == max ? std::to_string(min)
                                                     : std::to_string(min) + " to " + std::to_string(max)) +
                                         " argument(s)");
  }
}

Subset parse_set(const Line& line, int n) {
  Subset s;
  for (std::size_t k = 1; k < line.tokens.size(); ++k) {
    const int v = parse_element(line, line.tokens[k], n);
    for (int seen : s)
      if (seen == v) throw ParseError(line.number, line.tokens[k].column, "repeated element " + line.tokens[k].text);
    s.push_back(v);
  }
  return s;
}

Presentation parse_presentation(const std::vector<Line>& lines) {
  std::optional<int> ground;
  std::vector<Subset> sets;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    const std::string& keyword = line.tokens[0].text;
    if (keyword == "ground") {
      if (ground) throw ParseError(line.number, 1, "duplicate 'ground'");
      expect_arity(line, 1, 1);
      ground = parse_count(line, line.tokens[1]);
      if (*ground > kMaxGroundSize) {
        throw ParseError(line.number, line.tokens[1].column,
                         "ground size exceeds " + std::to_string(kMaxGroundSize));
      }
    } else if (keyword == "set") {
      if (!ground) throw ParseError(line.number, 1, "'set' before 'ground'");
      sets.push_back(parse_set(line, *ground));
    } else {
      throw ParseError(line.number, 1, "unknown statement '" + keyword + "'");
    }
  }
  if (!ground) throw ParseError(lines.front().number, 0, "missing 'ground'");
  return Presentation(*ground, std::move(sets));
}

DigraphInput parse_digraph(const std::vector<Line>& lines) {
  std::optional<int> vertices;
  std::optional<Subset> sinks;
  std::vector<Edge> edges;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    const std::string& keyword = line.tokens[0].text;
    if (keyword == "vertices") {
      if (vertices) throw ParseError(line.number, 1, "duplicate 'vertices'");
      expect_arity(line, 1, 1);
      vertices = parse_count(line, line.tokens[1]);
      if (*vertices > kMaxGroundSize) {
        throw ParseError(line.number, line.tokens[1].column,
                         "vertex count exceeds " + std::to_string(kMaxGroundSize));
      }
    } else if (keyword == "sinks") {
      if (sinks) throw ParseError(line.number, 1, "duplicate 'sinks'");
      if (!vertices) throw ParseError(line.number, 1, "'sinks' before 'vertices'");
      sinks = parse_set(line, *vertices);
    } else if (keyword == "edge") {
      if (!vertices) throw ParseError(line.number, 1, "'edge' before 'vertices'");
      expect_arity(line, 2, 3);
      Edge e{parse_element(line, line.tokens[1], vertices), parse_element(line, line.tokens[2], vertices),
             std::nullopt};
      if (e.from == e.to) throw ParseError(line.number, line.tokens[1].column, "loop edge");
      for (const auto& prior : edges) {
        if (prior.from == e.from && prior.to == e.to) {
          throw ParseError(line.number, line.tokens[1].column, "duplicate edge");
        }
      }
      if (line.tokens.size() == 4) {
        try {
          e.weight = Rational::parse(line.tokens[3].text);
        } catch (const Error& err) {
          throw ParseError(line.number, line.tokens[3].column, err.what());
        }
      }
      edges.push_back(std::move(e));
    } else {
      throw ParseError(line.number, 1, "unknown statement '" + keyword + "'");
    }
  }
  if (!vertices) throw ParseError(lines.front().number, 0, "missing 'vertices'");
  return {WeightedDigraph(*vertices, std::move(edges)), SinkSet(sinks.value_or(Subset{}))};
}

}  // namespace

Input parse_input(std::istream& in) {
  const std::vector<Line> lines = tokenize(in);
  if (lines.empty()) throw ParseError(1, 0, "missing header: expected 'presentation' or 'digraph'");
  const Line& header = lines.front();
  if (header.tokens.size() != 1) throw ParseError(header.number, header.tokens[1].column, "unexpected token after header");
  if (header.tokens[0].text == "presentation") return parse_presentation(lines);
  if (header.tokens[0].text == "digraph") return parse_digraph(lines);
  throw ParseError(header.number, 1, "missing header: expected 'presentation' or 'digraph'");
}

Input parse_input_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return parse_input(in);
}

std::string render(const Presentation& p) {
  std::ostringstream os;
  os << "presentation\nground " << p.ground_size() << '\n';
  for (const auto& s : p.sets()) {
    os << "set";
    for (int x : s) os << ' ' << x;
    os << '\n';
  }
  return os.str();
}

std::string render(const WeightedDigraph& g, const SinkSet& a) {
  std::ostringstream os;
  os << "digraph\nvertices " << g.vertex_count() << "\nsinks";
  for (int v : a.vertices()) os << ' ' << v;
  os << '\n';
  for (const auto& e : g.edges()) {
    os << "edge " << e.from << ' ' << e.to;
    if (e.weight) os << ' ' << e.weight->str();
    os << '\n';
  }
  return os.str();
}

}  // namespace cotrans
