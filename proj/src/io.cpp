#include "robustflow/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "robustflow/error.hpp"

namespace robustflow::io {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  while (!text.empty()) {
    const auto end = text.find('\n');
    std::string_view raw = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{}
                                         : text.substr(end + 1);
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' ||
                                raw[i] == '\r')) {
        ++i;
      }
      const std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' &&
             raw[i] != '\r') {
        ++i;
      }
      if (i > start) line.tokens.push_back(raw.substr(start, i - start));
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void fail(const Line& line, const std::string& what) {
  throw Error(ErrorKind::kParse,
              "line " + std::to_string(line.number) + ": " + what);
}

long to_long(const Line& line, std::string_view token) {
  long value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    fail(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

int to_int(const Line& line, std::string_view token) {
  const long v = to_long(line, token);
  if (v < -2147483647L || v > 2147483647L) fail(line, "integer out of range");
  return static_cast<int>(v);
}

void expect_arity(const Line& line, std::size_t n) {
  if (line.tokens.size() != n) {
    fail(line, "record '" + std::string(line.tokens[0]) + "' expects " +
                   std::to_string(n - 1) + " fields");
  }
}

}  // namespace

Instance parse_instance(std::string_view text) {
  const auto lines = tokenize(text);
  bool have_header = false, have_s = false, have_t = false;
  int nodes = 0, arcs = 0, k = 0;
  NodeId s = 0, t = 0;
  struct PendingArc {
    NodeId tail, head;
    Capacity capacity;
  };
  std::vector<PendingArc> pending;
  for (const Line& line : lines) {
    const std::string_view tag = line.tokens[0];
    if (tag == "p") {
      expect_arity(line, 5);
      if (have_header) fail(line, "duplicate problem line");
      if (line.tokens[1] != "rflow") fail(line, "expected 'p rflow'");
      nodes = to_int(line, line.tokens[2]);
      arcs = to_int(line, line.tokens[3]);
      k = to_int(line, line.tokens[4]);
      if (nodes < 0 || arcs < 0) fail(line, "negative size");
      have_header = true;
    } else if (tag == "s" || tag == "t") {
      expect_arity(line, 2);
      if (!have_header) fail(line, "record before problem line");
      bool& seen = tag == "s" ? have_s : have_t;
      if (seen) fail(line, "duplicate '" + std::string(tag) + "' record");
      seen = true;
      (tag == "s" ? s : t) = to_int(line, line.tokens[1]);
    } else if (tag == "a") {
      expect_arity(line, 4);
      if (!have_header) fail(line, "record before problem line");
      try {
        pending.push_back(PendingArc{to_int(line, line.tokens[1]),
                                     to_int(line, line.tokens[2]),
                                     parse_capacity(line.tokens[3])});
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kParse) throw;
        fail(line, e.what());
      }
    } else {
      fail(line, "unknown record '" + std::string(tag) + "'");
    }
  }
  if (!have_header) throw Error(ErrorKind::kParse, "missing 'p rflow' line");
  if (!have_s) throw Error(ErrorKind::kParse, "missing 's' line");
  if (!have_t) throw Error(ErrorKind::kParse, "missing 't' line");
  if (static_cast<int>(pending.size()) != arcs) {
    throw Error(ErrorKind::kParse,
                "header declares " + std::to_string(arcs) + " arcs, found " +
                    std::to_string(pending.size()));
  }
  Instance inst(nodes, s, t, k);
  for (auto& a : pending) inst.add_arc(a.tail, a.head, std::move(a.capacity));
  return inst;
}

std::string format_instance(const Instance& inst) {
  std::ostringstream out;
  out << "p rflow " << inst.node_count() << ' ' << inst.arc_count() << ' '
      << inst.k() << '\n';
  out << "s " << inst.source() << '\n';
  out << "t " << inst.sink() << '\n';
  for (const Arc& a : inst.arcs()) {
    out << "a " << a.tail << ' ' << a.head << ' ' << to_string(a.capacity)
        << '\n';
  }
  return out.str();
}

PathFlow parse_path_flow(std::string_view text) {
  PathFlow flow;
  for (const Line& line : tokenize(text)) {
    if (line.tokens[0] != "f") {
      fail(line, "unknown record '" + std::string(line.tokens[0]) + "'");
    }
    if (line.tokens.size() < 4 || line.tokens[line.tokens.size() - 2] != ":") {
      fail(line, "expected 'f <arc> ... : <value>'");
    }
    Path path;
    for (std::size_t i = 1; i + 2 < line.tokens.size(); ++i) {
      path.arcs.push_back(to_int(line, line.tokens[i]));
    }
    Rational value;
    try {
      value = parse_rational(line.tokens.back());
    } catch (const Error& e) {
      fail(line, e.what());
    }
    if (value < 0) fail(line, "negative path value");
    flow.add(path, value);
  }
  return flow;
}

std::string format_path_flow(const PathFlow& flow) {
  std::ostringstream out;
  for (const auto& [path, value] : flow.entries()) {
    out << 'f';
    for (ArcId e : path.arcs) out << ' ' << e;
    out << " : " << to_string(value) << '\n';
  }
  return out.str();
}

std::vector<ArcId> parse_scenario(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.size() != 1 || lines[0].tokens[0] != "S") {
    throw Error(ErrorKind::kParse, "expected exactly one 'S ...' line");
  }
  std::vector<ArcId> arcs;
  for (std::size_t i = 1; i < lines[0].tokens.size(); ++i) {
    arcs.push_back(to_int(lines[0], lines[0].tokens[i]));
  }
  return arcs;
}

std::string format_scenario(const std::vector<ArcId>& arcs) {
  std::string out = "S";
  for (ArcId e : arcs) out += ' ' + std::to_string(e);
  return out + '\n';
}

SimpleGraph parse_graph(std::string_view text) {
  SimpleGraph g;
  bool have_header = false;
  int declared = 0;
  for (const Line& line : tokenize(text)) {
    const std::string_view tag = line.tokens[0];
    if (tag == "p") {
      expect_arity(line, 4);
      if (have_header) fail(line, "duplicate problem line");
      if (line.tokens[1] != "graph") fail(line, "expected 'p graph'");
      g.node_count = to_int(line, line.tokens[2]);
      declared = to_int(line, line.tokens[3]);
      if (g.node_count < 0 || declared < 0) fail(line, "negative size");
      have_header = true;
    } else if (tag == "e") {
      expect_arity(line, 3);
      if (!have_header) fail(line, "record before problem line");
      g.edges.emplace_back(to_int(line, line.tokens[1]),
                           to_int(line, line.tokens[2]));
    } else {
      fail(line, "unknown record '" + std::string(tag) + "'");
    }
  }
  if (!have_header) throw Error(ErrorKind::kParse, "missing 'p graph' line");
  if (static_cast<int>(g.edges.size()) != declared) {
    throw Error(ErrorKind::kParse, "edge count does not match header");
  }
  return g;
}

std::string format_graph(const SimpleGraph& graph) {
  std::ostringstream out;
  out << "p graph " << graph.node_count << ' ' << graph.edges.size() << '\n';
  for (auto [u, v] : graph.edges) out << "e " << u << ' ' << v << '\n';
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kParse, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kParse, "cannot write '" + path + "'");
  out << contents;
}

}  // namespace robustflow::io
