#include "indideal/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "indideal/errors.hpp"

namespace indideal {

Graph::Graph(std::size_t n,
             const std::vector<std::pair<std::size_t, std::size_t>>& edges)
    : n_(n), adj_(n, Bitset(n)) {
  for (auto [u, v] : edges) {
    if (u >= n_ || v >= n_) throw ArgumentError("edge endpoint out of range");
    if (u == v) throw ArgumentError("loop edge not allowed in a simple graph");
    adj_[u].set(v);
    adj_[v].set(u);
  }
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < n_; ++u)
    adj_[u].for_each_bit([&](std::size_t v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

bool Graph::is_complete() const {
  for (std::size_t v = 0; v < n_; ++v)
    if (adj_[v].count() != n_ - 1) return false;
  return true;
}

bool Graph::is_independent(const Bitset& set) const {
  bool ok = true;
  set.for_each_bit([&](std::size_t v) {
    if (adj_[v].intersects(set)) ok = false;
  });
  return ok;
}

void FamilySpec::validate() const {
  switch (kind) {
    case FamilyKind::path:
    case FamilyKind::complete:
    case FamilyKind::centipede:
      if (n < 1) throw ArgumentError(family_kind_name(kind) + " requires n >= 1");
      break;
    case FamilyKind::cycle:
      if (n < 2) throw ArgumentError("cycle requires n >= 2");
      break;
    case FamilyKind::cycle_power:
      if (d < 1) throw ArgumentError("cyclepow requires d >= 1");
      if (n < d + 1) throw ArgumentError("cyclepow requires n >= d+1");
      break;
  }
}

std::string family_kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::path: return "path";
    case FamilyKind::cycle: return "cycle";
    case FamilyKind::cycle_power: return "cyclepow";
    case FamilyKind::centipede: return "centipede";
    case FamilyKind::complete: return "complete";
  }
  return "?";
}

namespace {

long long parse_positive_int(std::string_view tok, std::string_view what) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ArgumentError("bad " + std::string(what) + " '" + std::string(tok) + "'");
  return value;
}

}  // namespace

FamilySpec parse_family_spec(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t colon = text.find(':', start);
    if (colon == std::string_view::npos) {
      parts.push_back(text.substr(start));
      break;
    }
    parts.push_back(text.substr(start, colon - start));
    start = colon + 1;
  }
  if (parts.empty()) throw ArgumentError("empty family spec");

  FamilySpec spec{};
  std::string_view name = parts[0];
  if (name == "path") spec.kind = FamilyKind::path;
  else if (name == "cycle") spec.kind = FamilyKind::cycle;
  else if (name == "cyclepow") spec.kind = FamilyKind::cycle_power;
  else if (name == "centipede") spec.kind = FamilyKind::centipede;
  else if (name == "complete") spec.kind = FamilyKind::complete;
  else throw ArgumentError("unknown family '" + std::string(name) + "'");

  std::size_t want = spec.kind == FamilyKind::cycle_power ? 3 : 2;
  if (parts.size() != want)
    throw ArgumentError("family '" + std::string(name) + "' takes " +
                        std::to_string(want - 1) + " parameter(s)");
  spec.n = parse_positive_int(parts[1], "size parameter");
  if (spec.kind == FamilyKind::cycle_power)
    spec.d = parse_positive_int(parts[2], "power parameter");
  spec.validate();
  return spec;
}

Graph build_family(const FamilySpec& spec) {
  spec.validate();
  std::size_t n = static_cast<std::size_t>(spec.n);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  switch (spec.kind) {
    case FamilyKind::path:
      for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      return Graph(n, edges);
    case FamilyKind::cycle:
      for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      if (n > 2) edges.emplace_back(n - 1, 0);  // n=2 stays the single edge K_2
      return Graph(n, edges);
    case FamilyKind::cycle_power: {
      std::size_t d = static_cast<std::size_t>(spec.d);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          std::size_t dist = std::min(j - i, n - (j - i));
          if (dist <= d) edges.emplace_back(i, j);
        }
      return Graph(n, edges);
    }
    case FamilyKind::centipede: {
      // Legs a_i are vertices 0..n-1, spine b_i are n..2n-1.
      for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, n + i);
      for (std::size_t j = 0; j + 1 < n; ++j) edges.emplace_back(n + j, n + j + 1);
      return Graph(2 * n, edges);
    }
    case FamilyKind::complete:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
      return Graph(n, edges);
  }
  throw ArgumentError("unreachable family kind");
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  long long n = -1;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::string a, b, extra;
    if (!(tokens >> a)) continue;  // blank or comment-only line

    auto fail = [&](const std::string& why) -> ParseError {
      return ParseError("line " + std::to_string(line_no) + ": " + why);
    };
    auto to_int = [&](const std::string& tok) {
      long long value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw fail("expected an integer, got '" + tok + "'");
      return value;
    };

    if (n < 0) {
      if (tokens >> b) throw fail("vertex-count line must hold a single integer");
      n = to_int(a);
      if (n < 1) throw fail("vertex count must be positive");
      continue;
    }
    if (!(tokens >> b)) throw fail("expected 'u v'");
    if (tokens >> extra) throw fail("trailing token '" + extra + "'");
    long long u = to_int(a);
    long long v = to_int(b);
    if (u < 1 || u > n) throw fail("vertex " + std::to_string(u) + " out of range");
    if (v < 1 || v > n) throw fail("vertex " + std::to_string(v) + " out of range");
    if (u == v) throw fail("loop edge " + std::to_string(u) + " " + std::to_string(v));
    edges.emplace_back(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1));
  }
  if (n < 0) throw ParseError("missing vertex-count line");
  return Graph(static_cast<std::size_t>(n), edges);
}

}  // namespace indideal
