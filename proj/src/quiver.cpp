#include "phidim/quiver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace phidim {

namespace {

bool valid_name(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char ch) {
    return (ch >= 'A' && ch <= 'Z') || (ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9') || ch == '_';
  });
}

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = std::to_string(i + 1);
  return names;
}

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> words;
  std::istringstream in{std::string(text)};
  std::string w;
  while (in >> w) words.push_back(w);
  return words;
}

}  // namespace

Quiver::Quiver(std::vector<std::string> vertex_names, IntMatrix arrow_mult)
    : names_(std::move(vertex_names)), mult_(std::move(arrow_mult)) {
  if (names_.empty()) throw DomainError("a quiver needs at least one vertex");
  if (mult_.rows() != names_.size() || mult_.cols() != names_.size())
    throw ShapeError("arrow multiplicity matrix must be " + std::to_string(names_.size()) + "x" +
                     std::to_string(names_.size()));
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!valid_name(n)) throw DomainError("invalid vertex name '" + n + "'");
    if (!seen.insert(n).second) throw DomainError("duplicate vertex name '" + n + "'");
  }
  for (const auto& x : mult_.entries())
    if (x < 0) throw DomainError("negative arrow multiplicity");
}

Quiver::Quiver(IntMatrix arrow_mult) : Quiver(default_names(arrow_mult.rows()), std::move(arrow_mult)) {}

Integer Quiver::arrow_count() const {
  Integer total = 0;
  for (const auto& x : mult_.entries()) total += x;
  return total;
}

std::size_t Quiver::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw LookupError("unknown vertex '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - names_.begin());
}

Quiver parse_quiver(std::string_view text) {
  std::vector<std::string> names;
  std::map<std::string, std::size_t, std::less<>> index;
  struct Arrow {
    std::size_t from, to;
    Integer mult;
  };
  std::vector<Arrow> arrows;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    auto words = split_words(line);
    if (words.empty()) {
      if (end == text.size()) break;
      continue;
    }

    if (words[0].rfind("vertices:", 0) == 0) {
      std::vector<std::string> decl(words.begin() + 1, words.end());
      if (words[0].size() > 9) decl.insert(decl.begin(), words[0].substr(9));
      for (auto& n : decl) {
        if (!valid_name(n)) throw ParseError(line_no, "invalid vertex name '" + n + "'");
        if (index.count(n)) throw ParseError(line_no, "duplicate vertex '" + n + "'");
        index.emplace(n, names.size());
        names.push_back(n);
      }
    } else if (words[0] == "arrow") {
      if (words.size() != 3 && words.size() != 4)
        throw ParseError(line_no, "expected 'arrow <from> <to> [<multiplicity>]'");
      std::size_t ends[2];
      for (int i = 0; i < 2; ++i) {
        auto it = index.find(words[1 + i]);
        if (it == index.end()) throw ParseError(line_no, "unknown vertex '" + words[1 + i] + "'");
        ends[i] = it->second;
      }
      Integer mult = 1;
      if (words.size() == 4) {
        const std::string& m = words[3];
        const bool negative = !m.empty() && m[0] == '-';
        const std::string digits = negative ? m.substr(1) : m;
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
          throw ParseError(line_no, "malformed multiplicity '" + m + "'");
        if (negative) throw ParseError(line_no, "negative multiplicity '" + m + "'");
        mult = Integer(digits);
      }
      arrows.push_back({ends[0], ends[1], mult});
    } else {
      throw ParseError(line_no, "unrecognized line starting with '" + words[0] + "'");
    }
    if (end == text.size()) break;
  }

  if (names.empty()) throw ParseError(line_no, "no vertices declared");
  IntMatrix mult(names.size(), names.size());
  for (const auto& a : arrows) mult(a.from, a.to) += a.mult;
  return Quiver(std::move(names), std::move(mult));
}

std::string serialize_quiver(const Quiver& q) {
  std::ostringstream out;
  out << "vertices:";
  for (const auto& n : q.vertex_names()) out << ' ' << n;
  out << '\n';
  const auto& names = q.vertex_names();
  for (std::size_t i = 0; i < q.vertex_count(); ++i)
    for (std::size_t j = 0; j < q.vertex_count(); ++j)
      if (q.has_arrow(i, j)) out << "arrow " << names[i] << ' ' << names[j] << ' ' << q.arrows(i, j).get_str() << '\n';
  return out.str();
}

IntMatrix adjacency(const Quiver& q) { return q.arrow_mult(); }

Quiver opposite(const Quiver& q) { return Quiver(q.vertex_names(), q.arrow_mult().transpose()); }

VertexClassification classify_vertices(const Quiver& q) {
  VertexClassification out;
  const std::size_t n = q.vertex_count();
  for (std::size_t v = 0; v < n; ++v) {
    bool in = false, outgoing = false;
    for (std::size_t u = 0; u < n; ++u) {
      in = in || q.has_arrow(u, v);
      outgoing = outgoing || q.has_arrow(v, u);
    }
    if (!in) out.sources.insert(v);
    if (!outgoing) out.sinks.insert(v);
    if (!in && !outgoing) out.isolated.insert(v);
  }
  return out;
}

std::vector<std::vector<std::size_t>> connected_components(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (q.has_arrow(i, j)) parent[find(i)] = find(j);
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t v = 0; v < n; ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_connected(const Quiver& q) { return connected_components(q).size() == 1; }

bool is_cycle(const Quiver& q) {
  if (!is_connected(q)) return false;
  const std::size_t n = q.vertex_count();
  for (std::size_t v = 0; v < n; ++v) {
    Integer in = 0, out = 0;
    for (std::size_t u = 0; u < n; ++u) {
      in += q.arrows(u, v);
      out += q.arrows(v, u);
    }
    if (in != 1 || out != 1) return false;
  }
  return true;
}

bool has_oriented_cycle(const Quiver& q) { return longest_path_length(q).is_infinite(); }

ExtCount longest_path_length(const Quiver& q) {
  // Kahn's algorithm; leftover vertices mean an oriented cycle.
  const std::size_t n = q.vertex_count();
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (q.has_arrow(i, j)) ++indegree[j];
  std::vector<std::size_t> order;
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push_back(v);
  while (!ready.empty()) {
    std::size_t v = ready.back();
    ready.pop_back();
    order.push_back(v);
    for (std::size_t w = 0; w < n; ++w)
      if (q.has_arrow(v, w) && --indegree[w] == 0) ready.push_back(w);
  }
  if (order.size() != n) return ExtCount::infinite();
  std::vector<std::size_t> longest_into(n, 0);
  std::size_t best = 0;
  for (std::size_t v : order) {
    best = std::max(best, longest_into[v]);
    for (std::size_t w = 0; w < n; ++w)
      if (q.has_arrow(v, w)) longest_into[w] = std::max(longest_into[w], longest_into[v] + 1);
  }
  return ExtCount::finite(best);
}

PathExistence::PathExistence(const Quiver& q, std::size_t max_length) {
  const std::size_t n = q.vertex_count();
  into_.assign(max_length + 1, std::vector<bool>(n, false));
  out_.assign(max_length + 1, std::vector<bool>(n, false));
  into_[0].assign(n, true);
  out_[0].assign(n, true);
  for (std::size_t m = 1; m <= max_length; ++m) {
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t w = 0; w < n; ++w) {
        if (!q.has_arrow(u, w)) continue;
        if (into_[m - 1][u]) into_[m][w] = true;
        if (out_[m - 1][w]) out_[m][u] = true;
      }
    }
  }
}

bool has_exact_path(const Quiver& q, std::size_t v, std::size_t m, Direction direction) {
  if (v >= q.vertex_count()) throw LookupError("vertex index " + std::to_string(v) + " out of range");
  if (m == 0) return true;
  const PathExistence paths(q, m);
  return direction == Direction::Into ? paths.into(v, m) : paths.out_of(v, m);
}

Quiver full_subquiver(const Quiver& q, const std::vector<std::size_t>& vertices) {
  std::vector<std::size_t> keep = vertices;
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<std::string> names;
  IntMatrix mult(keep.size(), keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= q.vertex_count()) throw LookupError("vertex index out of range");
    names.push_back(q.vertex_names()[keep[i]]);
    for (std::size_t j = 0; j < keep.size(); ++j) mult(i, j) = q.arrows(keep[i], keep[j]);
  }
  return Quiver(std::move(names), std::move(mult));
}

std::vector<std::size_t> reduced_core_vertices(const Quiver& q, std::size_t k) {
  if (k < 2) throw DomainError("truncation exponent must be at least 2");
  const PathExistence paths(q, k);
  std::vector<std::size_t> core;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    for (std::size_t l = 1; l < k; ++l) {
      if (paths.into(v, l) && paths.out_of(v, k - l)) {
        core.push_back(v);
        break;
      }
    }
  }
  return core;
}

std::optional<Quiver> reduced_core(const Quiver& q, std::size_t k) {
  auto core = reduced_core_vertices(q, k);
  if (core.empty()) return std::nullopt;
  return full_subquiver(q, core);
}

Quiver saturate_with_loops(const Quiver& q) {
  const auto cls = classify_vertices(q);
  IntMatrix mult = q.arrow_mult();
  for (std::size_t v = 0; v < q.vertex_count(); ++v)
    if (cls.sources.count(v) || cls.sinks.count(v)) mult(v, v) += 1;
  return Quiver(q.vertex_names(), std::move(mult));
}

Quiver disjoint_union(const Quiver& a, const Quiver& b) {
  const std::size_t na = a.vertex_count(), nb = b.vertex_count();
  IntMatrix mult(na + nb, na + nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) mult(i, j) = a.arrows(i, j);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j) mult(na + i, na + j) = b.arrows(i, j);
  std::vector<std::string> names = a.vertex_names();
  names.insert(names.end(), b.vertex_names().begin(), b.vertex_names().end());
  std::set<std::string> distinct(names.begin(), names.end());
  if (distinct.size() != names.size()) return Quiver(std::move(mult));
  return Quiver(std::move(names), std::move(mult));
}

}  // namespace phidim
