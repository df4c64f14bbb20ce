#include "lndt/proof_text.hpp"

#include <sstream>
#include <unordered_map>

#include "lndt/parse.hpp"

namespace lndt {

namespace {

class FormulaPrinter {
 public:
  const std::string& operator()(Formula f) {
    auto it = cache_.find(f.id());
    if (it != cache_.end()) return it->second;
    return cache_.emplace(f.id(), to_string(f)).first->second;
  }

 private:
  std::unordered_map<std::uint32_t, std::string> cache_;
};

void append_sequent(std::string& out, const Sequent& s, FormulaPrinter& pr) {
  for (std::size_t i = 0; i < s.ant.size(); ++i) {
    if (i) out += ", ";
    out += pr(s.ant[i]);
  }
  out += s.ant.empty() ? "|-" : " |-";
  for (std::size_t i = 0; i < s.suc.size(); ++i) {
    out += i ? ", " : " ";
    out += pr(s.suc[i]);
  }
}

std::string args_string(const Justification& j, FormulaPrinter* pr) {
  switch (j.rule) {
    case Rule::Ax0:
    case Rule::Ax1:
      return "";
    case Rule::Id:
    case Rule::NegL:
    case Rule::NegR:
      return "[" + literal_string(j.lit) + "]";
    case Rule::ThrL:
    case Rule::ThrR:
      return "[" + std::to_string(j.index) + "]";
    case Rule::ExtLR:
    case Rule::ExtRL:
      return "[" + ext_name(j.ext) + "]";
    case Rule::Hyp:
      return "[" + j.tag + "]";
    default:
      return "[" + (pr ? (*pr)(j.formula) : to_string(j.formula)) + "]";
  }
}

std::string just_string(const Justification& j, FormulaPrinter* pr) {
  std::string s = rule_name(j.rule) + args_string(j, pr);
  if (!j.premises.empty()) {
    s += '(';
    for (std::size_t i = 0; i < j.premises.size(); ++i) {
      if (i) s += ", ";
      s += 'L' + std::to_string(j.premises[i] + 1);
    }
    s += ')';
  }
  return s;
}

class FormulaCache {
 public:
  Formula operator()(const std::string& text) {
    auto it = cache_.find(text);
    if (it != cache_.end()) return it->second;
    Formula f = parse_formula(text);
    cache_.emplace(text, f);
    return f;
  }

 private:
  std::unordered_map<std::string, Formula> cache_;
};

Sequent parse_sequent_with(const std::string& text, FormulaCache& fc) {
  auto arrow = text.find("|-");
  if (arrow == std::string::npos) throw ParseError(0, "sequent without '|-'");
  Sequent s;
  auto side = [&](const std::string& part, std::vector<Formula>& out) {
    std::string t = trim(part);
    if (t.empty()) return;
    for (const auto& item : split_top_level(t, ',')) out.push_back(fc(trim(item)));
  };
  side(text.substr(0, arrow), s.ant);
  side(text.substr(arrow + 2), s.suc);
  return s;
}

Justification parse_just(const std::string& text, FormulaCache& fc, std::size_t lineno) {
  std::string t = trim(text);
  std::size_t name_end = t.find_first_of("[(");
  std::string name = trim(t.substr(0, name_end));
  auto rule = rule_from_name(name);
  if (!rule) throw ParseError(lineno, "unknown rule '" + name + "'");
  Justification j;
  j.rule = *rule;
  std::string args;
  std::size_t pos = name_end;
  if (pos != std::string::npos && t[pos] == '[') {
    int depth = 0;
    std::size_t i = pos;
    for (; i < t.size(); ++i) {
      if (t[i] == '[' || t[i] == '(') ++depth;
      else if (t[i] == ']' || t[i] == ')') {
        if (--depth == 0) break;
      }
    }
    if (i >= t.size()) throw ParseError(lineno, "unterminated rule argument");
    args = trim(t.substr(pos + 1, i - pos - 1));
    pos = i + 1;
  }
  if (pos != std::string::npos && pos < t.size()) {
    std::string rest = trim(t.substr(pos));
    if (!rest.empty()) {
      if (rest.front() != '(' || rest.back() != ')') throw ParseError(lineno, "malformed premise list");
      for (const auto& item : split_top_level(rest.substr(1, rest.size() - 2), ',')) {
        std::string r = trim(item);
        if (r.size() < 2 || r[0] != 'L') throw ParseError(lineno, "premise must look like L<n>");
        unsigned long n = 0;
        try {
          n = std::stoul(r.substr(1));
        } catch (const std::exception&) {
          throw ParseError(lineno, "bad premise '" + r + "'");
        }
        if (n == 0) throw ParseError(lineno, "premise numbers start at 1");
        j.premises.push_back(static_cast<std::uint32_t>(n - 1));
      }
    }
  }
  try {
    switch (j.rule) {
      case Rule::Ax0:
      case Rule::Ax1:
        break;
      case Rule::Id:
      case Rule::NegL:
      case Rule::NegR:
        j.lit = parse_literal(args);
        break;
      case Rule::ThrL:
      case Rule::ThrR:
        j.index = static_cast<std::uint32_t>(std::stoul(args));
        break;
      case Rule::ExtLR:
      case Rule::ExtRL:
        j.ext = parse_ext_name(args);
        break;
      case Rule::Hyp:
        j.tag = args;
        break;
      default:
        if (args.empty()) throw ParseError(lineno, "rule " + name + " needs a formula argument");
        j.formula = fc(args);
        break;
    }
  } catch (const ParseError& e) {
    throw ParseError(lineno, e.what());
  } catch (const std::logic_error& e) {
    throw ParseError(lineno, std::string("bad rule argument: ") + e.what());
  }
  return j;
}

}  // namespace

std::string justification_string(const Justification& j) { return just_string(j, nullptr); }

Sequent parse_sequent(const std::string& text) {
  FormulaCache fc;
  return parse_sequent_with(text, fc);
}

std::string write_proof(const Proof& p) {
  FormulaPrinter pr;
  std::string out = "% lndt proof v1\n";
  out += "dialect " + p.dialect.name() + "\n";
  if (p.intermediate) out += "intermediate 1\n";
  for (const auto& e : p.axioms.entries())
    out += "axiom " + ext_name(e.var) + " <-> " + pr(e.body) + "\n";
  for (const auto& h : p.hypotheses) {
    out += "hyp " + h.tag + ": ";
    append_sequent(out, h.seq, pr);
    out += '\n';
  }
  for (std::size_t i = 0; i < p.lines.size(); ++i) {
    out += 'L' + std::to_string(i + 1) + ": ";
    append_sequent(out, p.lines[i].seq, pr);
    out += " ; ";
    out += just_string(p.lines[i].just, &pr);
    out += '\n';
  }
  return out;
}

Proof parse_proof(const std::string& text) {
  Proof p;
  FormulaCache fc;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  bool have_dialect = false;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '%' || line[0] == '#') continue;
    try {
      if (line.rfind("dialect ", 0) == 0) {
        p.dialect = Dialect::parse(trim(line.substr(8)));
        have_dialect = true;
      } else if (line.rfind("intermediate", 0) == 0) {
        p.intermediate = trim(line.substr(12)) != "0";
      } else if (line.rfind("axiom ", 0) == 0) {
        std::string body = line.substr(6);
        auto arrow = body.find("<->");
        if (arrow == std::string::npos) throw ParseError(lineno, "axiom without '<->'");
        p.axioms.append_unchecked(parse_ext_name(trim(body.substr(0, arrow))), fc(trim(body.substr(arrow + 3))));
      } else if (line.rfind("hyp ", 0) == 0) {
        std::string rest = line.substr(4);
        auto colon = rest.find(':');
        if (colon == std::string::npos) throw ParseError(lineno, "hypothesis without ':'");
        p.hypotheses.push_back({trim(rest.substr(0, colon)), parse_sequent_with(rest.substr(colon + 1), fc)});
      } else if (line[0] == 'L') {
        auto colon = line.find(':');
        if (colon == std::string::npos) throw ParseError(lineno, "line without ':'");
        std::size_t num = std::stoul(line.substr(1, colon - 1));
        if (num != p.lines.size() + 1)
          throw ParseError(lineno, "expected line L" + std::to_string(p.lines.size() + 1));
        auto parts = split_top_level(line.substr(colon + 1), ';');
        if (parts.size() != 2) throw ParseError(lineno, "expected '<sequent> ; <justification>'");
        ProofLine pl;
        pl.seq = parse_sequent_with(parts[0], fc);
        pl.just = parse_just(parts[1], fc, lineno);
        p.lines.push_back(std::move(pl));
      } else {
        throw ParseError(lineno, "unrecognised line");
      }
    } catch (const ParseError& e) {
      if (e.pos == lineno) throw;
      throw ParseError(lineno, e.what());
    } catch (const std::logic_error& e) {
      throw ParseError(lineno, e.what());
    }
  }
  if (!have_dialect) throw ParseError(0, "missing dialect header");
  if (p.lines.empty()) throw ParseError(lineno, "proof has no lines");
  return p;
}

}  // namespace lndt
