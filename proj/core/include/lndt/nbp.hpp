#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lndt/axioms.hpp"
#include "lndt/formula.hpp"
#include "lndt/semantics.hpp"

namespace lndt {

struct NbpNode {
  bool sink = false;
  bool value = false;  // sinks only
  Var var = 0;         // internal nodes only
};

struct NbpEdge {
  std::uint32_t from = 0;
  std::uint32_t to = 0;
  bool bit = false;

  friend bool operator==(const NbpEdge&, const NbpEdge&) = default;
  friend auto operator<=>(const NbpEdge& a, const NbpEdge& b) {
    if (a.from != b.from) return a.from <=> b.from;
    if (a.bit != b.bit) return a.bit <=> b.bit;
    return a.to <=> b.to;
  }
};

struct NbpError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Non-deterministic branching program. Node ids are dense indices into nodes().
class Nbp {
 public:
  std::uint32_t add_node(Var v);
  std::uint32_t add_sink(bool value);
  void add_edge(std::uint32_t from, std::uint32_t to, bool bit);
  void set_root(std::uint32_t r) { root_ = r; }

  std::uint32_t root() const { return root_; }
  const std::vector<NbpNode>& nodes() const { return nodes_; }
  const NbpNode& node(std::uint32_t id) const { return nodes_.at(id); }
  // Edges sorted by (from, bit, to), without duplicates.
  std::vector<NbpEdge> edges() const;
  const std::vector<NbpEdge>& out(std::uint32_t id) const { return out_.at(id); }
  std::size_t size() const { return nodes_.size(); }
  Word variables() const;

  // Throws NbpError on cycles, edges out of sinks, bad ids or a root with in-edges.
  void validate() const;

 private:
  std::vector<NbpNode> nodes_;
  std::vector<std::vector<NbpEdge>> out_;
  std::uint32_t root_ = 0;
};

bool eval_nbp(const Nbp& g, const Assignment& alpha);
TruthTable nbp_truth_table(const Nbp& g, const Word& vars, int cap = kDefaultOracleCap);
bool is_positive_nbp(const Nbp& g);
Nbp positive_closure(const Nbp& g);
bool is_read_once(const Nbp& g);

// Layered OBDD over p1..pn; level i holds one node per count of ones seen so far.
Nbp build_exact_obdd(int n, int k);

// One plain extension variable per internal node, indexed base + node id.
std::pair<Formula, ExtAxiomSet> nbp_to_endt(const Nbp& g, std::uint32_t base = 0);

Nbp parse_nbp(const std::string& text);
std::string nbp_to_text(const Nbp& g);
std::string nbp_to_dot(const Nbp& g);

}  // namespace lndt
