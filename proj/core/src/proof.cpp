#include "lndt/proof.hpp"

#include <algorithm>
#include <array>

namespace lndt {

namespace {

constexpr std::array<const char*, kRuleCount> kNames = {
    "ax0", "ax1", "id",  "negL", "negR", "thrL",  "thrR",  "extLR", "extRL", "hyp", "cut",
    "wL",  "wR",  "cL",  "cR",   "pL",   "pR",    "posPL", "posPR", "orL",   "orR",
};

void sorted_ids(const std::vector<Formula>& v, std::vector<std::uint32_t>& out) {
  std::size_t start = out.size();
  for (Formula f : v) out.push_back(f.id());
  std::sort(out.begin() + static_cast<std::ptrdiff_t>(start), out.end());
}

}  // namespace

std::string rule_name(Rule r) { return kNames[static_cast<std::size_t>(r)]; }

std::optional<Rule> rule_from_name(const std::string& name) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (name == kNames[i]) return static_cast<Rule>(i);
  return std::nullopt;
}

int rule_arity(Rule r) {
  switch (r) {
    case Rule::Cut:
    case Rule::PL:
    case Rule::PR:
    case Rule::PosPL:
    case Rule::PosPR:
    case Rule::OrL:
      return 2;
    case Rule::WL:
    case Rule::WR:
    case Rule::CL:
    case Rule::CR:
    case Rule::OrR:
      return 1;
    default:
      return 0;
  }
}

std::string to_string(const Sequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.ant.size(); ++i) {
    if (i) out += ", ";
    out += to_string(s.ant[i]);
  }
  out += s.ant.empty() ? "|-" : " |-";
  for (std::size_t i = 0; i < s.suc.size(); ++i) {
    out += i ? ", " : " ";
    out += to_string(s.suc[i]);
  }
  return out;
}

std::uint64_t sequent_tokens(const Sequent& s) {
  std::uint64_t t = 1;
  for (Formula f : s.ant) t += f.tokens();
  for (Formula f : s.suc) t += f.tokens();
  if (s.ant.size() > 1) t += s.ant.size() - 1;
  if (s.suc.size() > 1) t += s.suc.size() - 1;
  return t;
}

bool same_multiset(const std::vector<Formula>& a, const std::vector<Formula>& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::uint32_t> x, y;
  sorted_ids(a, x);
  sorted_ids(b, y);
  return x == y;
}

bool same_sequent(const Sequent& a, const Sequent& b) {
  return same_multiset(a.ant, b.ant) && same_multiset(a.suc, b.suc);
}

bool ext_free(const Sequent& s) {
  for (Formula f : s.ant)
    if (f.has_ext()) return false;
  for (Formula f : s.suc)
    if (f.has_ext()) return false;
  return true;
}

std::size_t SeqKeyHash::operator()(const SeqKey& k) const {
  std::size_t h = k.nant * 0x9e3779b97f4a7c15ULL;
  for (auto id : k.ids) h ^= id + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

SeqKey seq_key(const Sequent& s) {
  SeqKey k;
  k.ids.reserve(s.ant.size() + s.suc.size());
  sorted_ids(s.ant, k.ids);
  sorted_ids(s.suc, k.ids);
  k.nant = static_cast<std::uint32_t>(s.ant.size());
  return k;
}

std::uint64_t proof_size(const Proof& p) {
  std::uint64_t t = 0;
  for (const auto& l : p.lines) t += sequent_tokens(l.seq);
  return t;
}

std::map<std::string, std::uint64_t> rule_histogram(const Proof& p) {
  std::map<std::string, std::uint64_t> h;
  for (const auto& l : p.lines) ++h[rule_name(l.just.rule)];
  return h;
}

Proof prune(const Proof& p, std::optional<std::size_t> root) {
  Proof out;
  out.dialect = p.dialect;
  out.axioms = p.axioms;
  out.hypotheses = p.hypotheses;
  out.intermediate = p.intermediate;
  if (p.lines.empty()) return out;
  std::size_t r = root.value_or(p.lines.size() - 1);
  std::vector<char> live(r + 1, 0);
  live[r] = 1;
  for (std::size_t i = r + 1; i-- > 0;) {
    if (!live[i]) continue;
    for (auto q : p.lines[i].just.premises) live[q] = 1;
  }
  std::vector<std::uint32_t> remap(r + 1, 0);
  for (std::size_t i = 0; i <= r; ++i) {
    if (!live[i]) continue;
    remap[i] = static_cast<std::uint32_t>(out.lines.size());
    ProofLine l = p.lines[i];
    for (auto& q : l.just.premises) q = remap[q];
    out.lines.push_back(std::move(l));
  }
  return out;
}

}  // namespace lndt
