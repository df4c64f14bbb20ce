#include "lndt/nbp.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "lndt/parse.hpp"

namespace lndt {

std::uint32_t Nbp::add_node(Var v) {
  nodes_.push_back({false, false, v});
  out_.emplace_back();
  return static_cast<std::uint32_t>(nodes_.size() - 1);
}

std::uint32_t Nbp::add_sink(bool value) {
  nodes_.push_back({true, value, 0});
  out_.emplace_back();
  return static_cast<std::uint32_t>(nodes_.size() - 1);
}

void Nbp::add_edge(std::uint32_t from, std::uint32_t to, bool bit) {
  if (from >= nodes_.size() || to >= nodes_.size()) throw NbpError("edge refers to unknown node");
  NbpEdge e{from, to, bit};
  auto& o = out_[from];
  if (std::find(o.begin(), o.end(), e) == o.end()) {
    o.push_back(e);
    std::sort(o.begin(), o.end());
  }
}

std::vector<NbpEdge> Nbp::edges() const {
  std::vector<NbpEdge> all;
  for (const auto& o : out_) all.insert(all.end(), o.begin(), o.end());
  std::sort(all.begin(), all.end());
  return all;
}

Word Nbp::variables() const {
  std::set<Var> vs;
  for (const auto& n : nodes_)
    if (!n.sink) vs.insert(n.var);
  return Word(vs.begin(), vs.end());
}

void Nbp::validate() const {
  if (nodes_.empty()) throw NbpError("empty program");
  if (root_ >= nodes_.size()) throw NbpError("root out of range");
  for (std::uint32_t u = 0; u < nodes_.size(); ++u) {
    if (nodes_[u].sink && !out_[u].empty()) throw NbpError("sink with outgoing edges");
    for (const auto& e : out_[u])
      if (e.to == root_) throw NbpError("root has an incoming edge");
  }
  // Kahn's algorithm for acyclicity.
  std::vector<int> indeg(nodes_.size(), 0);
  for (const auto& o : out_)
    for (const auto& e : o) ++indeg[e.to];
  std::vector<std::uint32_t> queue;
  for (std::uint32_t u = 0; u < nodes_.size(); ++u)
    if (indeg[u] == 0) queue.push_back(u);
  std::size_t seen = 0;
  while (!queue.empty()) {
    std::uint32_t u = queue.back();
    queue.pop_back();
    ++seen;
    for (const auto& e : out_[u])
      if (--indeg[e.to] == 0) queue.push_back(e.to);
  }
  if (seen != nodes_.size()) throw NbpError("program has a cycle");
}

bool eval_nbp(const Nbp& g, const Assignment& alpha) {
  std::vector<char> seen(g.size(), 0);
  std::vector<std::uint32_t> stack{g.root()};
  seen[g.root()] = 1;
  while (!stack.empty()) {
    std::uint32_t u = stack.back();
    stack.pop_back();
    const NbpNode& n = g.node(u);
    if (n.sink) {
      if (n.value) return true;
      continue;
    }
    bool b = alpha(n.var);
    for (const auto& e : g.out(u)) {
      if (e.bit == b && !seen[e.to]) {
        seen[e.to] = 1;
        stack.push_back(e.to);
      }
    }
  }
  return false;
}

TruthTable nbp_truth_table(const Nbp& g, const Word& vars, int cap) {
  if (static_cast<int>(vars.size()) > cap) throw OracleCapExceeded("oracle cap exceeded");
  TruthTable t(vars);
  for (std::uint64_t i = 0; i < t.size(); ++i) t.set(i, eval_nbp(g, t.assignment(i)));
  return t;
}

bool is_positive_nbp(const Nbp& g) {
  for (std::uint32_t u = 0; u < g.size(); ++u) {
    const auto& o = g.out(u);
    for (const auto& e : o) {
      if (!e.bit && std::find(o.begin(), o.end(), NbpEdge{u, e.to, true}) == o.end()) return false;
    }
  }
  return true;
}

Nbp positive_closure(const Nbp& g) {
  Nbp h;
  for (const auto& n : g.nodes()) {
    if (n.sink) h.add_sink(n.value);
    else h.add_node(n.var);
  }
  h.set_root(g.root());
  for (const auto& e : g.edges()) {
    h.add_edge(e.from, e.to, e.bit);
    if (!e.bit) h.add_edge(e.from, e.to, true);
  }
  return h;
}

bool is_read_once(const Nbp& g) {
  // Nodes reachable from the root; a repeated label on some path means some
  // reachable node labelled p reaches another node labelled p.
  auto reach_from = [&](std::uint32_t start, bool include_start) {
    std::vector<char> seen(g.size(), 0);
    std::vector<std::uint32_t> stack;
    if (include_start) {
      seen[start] = 1;
      stack.push_back(start);
    } else {
      for (const auto& e : g.out(start))
        if (!seen[e.to]) {
          seen[e.to] = 1;
          stack.push_back(e.to);
        }
    }
    while (!stack.empty()) {
      std::uint32_t u = stack.back();
      stack.pop_back();
      for (const auto& e : g.out(u))
        if (!seen[e.to]) {
          seen[e.to] = 1;
          stack.push_back(e.to);
        }
    }
    return seen;
  };
  std::vector<char> live = reach_from(g.root(), true);
  for (std::uint32_t u = 0; u < g.size(); ++u) {
    if (!live[u] || g.node(u).sink) continue;
    std::vector<char> below = reach_from(u, false);
    for (std::uint32_t v = 0; v < g.size(); ++v)
      if (below[v] && !g.node(v).sink && g.node(v).var == g.node(u).var) return false;
  }
  return true;
}

Nbp build_exact_obdd(int n, int k) {
  Nbp g;
  if (n <= 0) {
    std::uint32_t s = g.add_sink(n == 0 && k == 0);
    g.set_root(s);
    return g;
  }
  // level i (0-based) has nodes for counts 0..i
  std::vector<std::vector<std::uint32_t>> level(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int c = 0; c <= i; ++c) level[static_cast<std::size_t>(i)].push_back(g.add_node(static_cast<Var>(i + 1)));
  std::uint32_t s0 = g.add_sink(false);
  std::uint32_t s1 = g.add_sink(true);
  for (int i = 0; i < n; ++i) {
    for (int c = 0; c <= i; ++c) {
      std::uint32_t u = level[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
      if (i + 1 < n) {
        g.add_edge(u, level[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(c)], false);
        g.add_edge(u, level[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(c + 1)], true);
      } else {
        g.add_edge(u, c == k ? s1 : s0, false);
        g.add_edge(u, c + 1 == k ? s1 : s0, true);
      }
    }
  }
  g.set_root(level[0][0]);
  return g;
}

std::pair<Formula, ExtAxiomSet> nbp_to_endt(const Nbp& g, std::uint32_t base) {
  g.validate();
  ExtAxiomSet ax;
  const NbpNode& r = g.node(g.root());
  if (r.sink) return {r.value ? one() : zero(), ax};

  // Reverse topological order: define successors before predecessors.
  std::vector<std::uint32_t> order;
  std::vector<char> state(g.size(), 0);
  auto dfs = [&](auto&& self, std::uint32_t u) -> void {
    state[u] = 1;
    for (const auto& e : g.out(u))
      if (!state[e.to]) self(self, e.to);
    order.push_back(u);
  };
  dfs(dfs, g.root());

  auto target = [&](std::uint32_t v) -> Formula {
    const NbpNode& n = g.node(v);
    if (n.sink) return n.value ? one() : zero();
    return ext(plain_var(base + v));
  };

  for (std::uint32_t u : order) {
    const NbpNode& n = g.node(u);
    if (n.sink) continue;
    std::vector<std::uint32_t> s0, s1;
    for (const auto& e : g.out(u)) (e.bit ? s1 : s0).push_back(e.to);
    Literal p{n.var, false};
    Formula body;
    bool positive = std::all_of(s0.begin(), s0.end(),
                                [&](std::uint32_t v) { return std::find(s1.begin(), s1.end(), v) != s1.end(); });
    if (s0.empty() && s1.empty()) {
      body = zero();
    } else if (positive) {
      std::vector<Formula> a, b;
      for (auto v : s0) a.push_back(target(v));
      for (auto v : s1)
        if (std::find(s0.begin(), s0.end(), v) == s0.end()) b.push_back(target(v));
      body = mk_pdec(or_fold(a), p, or_fold(b));
    } else if (s0.size() == 1 && s1.size() == 1) {
      body = mk_dec(target(s0[0]), p, target(s1[0]));
    } else {
      std::vector<Formula> parts;
      for (const auto& e : g.out(u))
        parts.push_back(e.bit ? mk_dec(zero(), p, target(e.to)) : mk_dec(target(e.to), p, zero()));
      body = or_fold(parts);
    }
    ax.define(plain_var(base + u), body);
  }
  return {target(g.root()), ax};
}

Nbp parse_nbp(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  std::map<long, std::uint32_t> ids;
  struct PendingEdge {
    long from, to;
    int bit;
    std::size_t line;
  };
  std::vector<PendingEdge> edges;
  std::vector<std::pair<long, NbpNode>> decls;
  long root = -1;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "root") {
      if (!(ls >> root)) throw ParseError(lineno, "expected root id");
    } else if (kw == "node") {
      long id;
      std::string v;
      if (!(ls >> id >> v)) throw ParseError(lineno, "expected 'node <id> p<var>'");
      NbpNode n;
      n.var = parse_var(v);
      decls.push_back({id, n});
    } else if (kw == "sink") {
      long id;
      int b;
      if (!(ls >> id >> b) || (b != 0 && b != 1)) throw ParseError(lineno, "expected 'sink <id> 0|1'");
      NbpNode n;
      n.sink = true;
      n.value = b == 1;
      decls.push_back({id, n});
    } else if (kw == "edge") {
      PendingEdge e{0, 0, 0, lineno};
      if (!(ls >> e.from >> e.to >> e.bit) || (e.bit != 0 && e.bit != 1))
        throw ParseError(lineno, "expected 'edge <from> <to> 0|1'");
      edges.push_back(e);
    } else {
      throw ParseError(lineno, "unknown keyword '" + kw + "'");
    }
  }
  Nbp g;
  std::sort(decls.begin(), decls.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [id, n] : decls) {
    if (ids.count(id)) throw ParseError(0, "duplicate node id " + std::to_string(id));
    ids[id] = n.sink ? g.add_sink(n.value) : g.add_node(n.var);
  }
  auto lookup = [&](long id, std::size_t ln) {
    auto it = ids.find(id);
    if (it == ids.end()) throw ParseError(ln, "unknown node id " + std::to_string(id));
    return it->second;
  };
  if (root < 0) throw ParseError(lineno, "missing root");
  for (const auto& e : edges) g.add_edge(lookup(e.from, e.line), lookup(e.to, e.line), e.bit == 1);
  g.set_root(lookup(root, 0));
  g.validate();
  return g;
}

std::string nbp_to_text(const Nbp& g) {
  std::ostringstream out;
  out << "root " << g.root() << "\n";
  for (std::uint32_t u = 0; u < g.size(); ++u) {
    const NbpNode& n = g.node(u);
    if (n.sink) out << "sink " << u << " " << (n.value ? 1 : 0) << "\n";
    else out << "node " << u << " " << var_name(n.var) << "\n";
  }
  for (const auto& e : g.edges()) out << "edge " << e.from << " " << e.to << " " << (e.bit ? 1 : 0) << "\n";
  return out.str();
}

std::string nbp_to_dot(const Nbp& g) {
  std::ostringstream out;
  out << "digraph nbp {\n";
  for (std::uint32_t u = 0; u < g.size(); ++u) {
    const NbpNode& n = g.node(u);
    if (n.sink) out << "  n" << u << " [label=\"" << (n.value ? 1 : 0) << "\", shape=box];\n";
    else out << "  n" << u << " [label=\"" << var_name(n.var) << "\"];\n";
  }
  for (const auto& e : g.edges()) {
    out << "  n" << e.from << " -> n" << e.to;
    if (!e.bit) out << " [style=dotted]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace lndt
