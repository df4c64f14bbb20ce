#include "lndt/parse.hpp"

#include <cctype>
#include <sstream>

namespace lndt {

std::string Dialect::name() const {
  switch (kind) {
    case DialectKind::LNDT:
      return "LNDT";
    case DialectKind::ELNDT:
      return "eLNDT";
    case DialectKind::Plus:
      return "eLNDT+";
    case DialectKind::PlusMinus:
      return "eLNDT+-";
    case DialectKind::Tk: {
      std::string s = "Tk " + std::to_string(k);
      for (Var v : vars) s += " " + var_name(v);
      return s;
    }
  }
  return "?";
}

Dialect Dialect::parse(const std::string& text) {
  std::istringstream in(text);
  std::string head;
  in >> head;
  if (head == "LNDT") return lndt();
  if (head == "eLNDT") return elndt();
  if (head == "eLNDT+" || head == "eLNDTplus") return plus();
  if (head == "eLNDT+-" || head == "eLNDTplusMinus") return plus_minus();
  if (head == "Tk") {
    int k = 0;
    if (!(in >> k)) throw ParseError(0, "Tk dialect needs a threshold parameter");
    Word vars;
    std::string v;
    while (in >> v) vars.push_back(parse_var(v));
    return tk(k, std::move(vars));
  }
  throw ParseError(0, "unknown dialect '" + text + "'");
}

bool Dialect::admits(Formula f) const {
  switch (kind) {
    case DialectKind::LNDT:
      return !f.has_ext() && !f.has_neg();
    case DialectKind::ELNDT:
      return !f.has_neg();
    case DialectKind::Plus:
    case DialectKind::Tk:
      return !f.has_neg() && !f.has_dec();
    case DialectKind::PlusMinus:
      return !f.has_dec();
  }
  return false;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(' || c == '[') ++depth;
    else if (c == ')' || c == ']') --depth;
    else if (c == sep && depth == 0) {
      out.push_back(trim(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(text.substr(start)));
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Formula formula() {
    skip();
    std::size_t at = pos_;
    if (peek() == '0' && !ident_continues(pos_ + 1)) {
      ++pos_;
      return zero();
    }
    if (peek() == '1' && !ident_continues(pos_ + 1)) {
      ++pos_;
      return one();
    }
    if (peek() == '~' || (peek() == 'p' && is_digit(pos_ + 1))) return lit(literal());
    std::string word = ident();
    if (word == "or") {
      expect('(');
      Formula a = formula();
      expect(',');
      Formula b = formula();
      expect(')');
      return mk_or(a, b);
    }
    if (word == "dec" || word == "pdec") {
      expect('(');
      Formula a = formula();
      expect(',');
      skip();
      std::size_t lp = pos_;
      if (peek() == 'e' || peek() == 't' || peek() == 'r')
        throw ParseError(lp, "extension variable in decision position");
      if (peek() == '0' || peek() == '1') throw ParseError(lp, "constant in decision position");
      if (peek() != '~' && peek() != 'p') throw ParseError(lp, "decision position must hold a literal");
      Literal l = literal();
      skip();
      if (peek() == '(') throw ParseError(lp, "decision position must hold a literal");
      expect(',');
      Formula b = formula();
      expect(')');
      return word == "dec" ? mk_dec(a, l, b) : mk_pdec(a, l, b);
    }
    pos_ = at;
    return ext(ext_var());
  }

  const ExtVar* ext_var() {
    skip();
    std::size_t at = pos_;
    std::string word = ident();
    if (word.size() > 1 && word[0] == 'e' && std::isdigit(static_cast<unsigned char>(word[1]))) {
      for (std::size_t i = 1; i < word.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(word[i]))) throw ParseError(at, "bad extension name");
      return plain_var(static_cast<std::uint32_t>(std::stoul(word.substr(1))));
    }
    if (word == "ex" || word == "thr" || word == "rthr") {
      expect('[');
      Word w;
      skip();
      while (peek() == 'p') {
        w.push_back(var());
        skip();
      }
      expect(';');
      int k = integer();
      if (word == "rthr") {
        expect(';');
        Formula a = formula();
        expect(';');
        Formula b = formula();
        expect(']');
        return refthr_var(w, k, a, b);
      }
      expect(']');
      return word == "ex" ? exact_var(w, k) : thr_var(w, k);
    }
    throw ParseError(at, word.empty() ? "expected formula" : "unknown constructor '" + word + "'");
  }

  Literal literal() {
    skip();
    bool negative = false;
    if (peek() == '~') {
      negative = true;
      ++pos_;
    }
    return {var(), negative};
  }

  Var var() {
    skip();
    std::size_t at = pos_;
    if (peek() != 'p' || !is_digit(pos_ + 1)) throw ParseError(at, "expected propositional variable");
    ++pos_;
    std::size_t start = pos_;
    while (is_digit(pos_)) ++pos_;
    return static_cast<Var>(std::stoul(std::string(s_.substr(start, pos_ - start))));
  }

  int integer() {
    skip();
    std::size_t at = pos_;
    bool minus = false;
    if (peek() == '-') {
      minus = true;
      ++pos_;
    }
    std::size_t start = pos_;
    while (is_digit(pos_)) ++pos_;
    if (start == pos_) throw ParseError(at, "expected integer");
    int v = std::stoi(std::string(s_.substr(start, pos_ - start)));
    return minus ? -v : v;
  }

  void finish() {
    skip();
    if (pos_ != s_.size()) throw ParseError(pos_, "trailing input");
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  bool is_digit(std::size_t i) const { return i < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i])); }
  bool ident_continues(std::size_t i) const {
    return i < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i])) || s_[i] == '_');
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip();
    if (peek() != c) throw ParseError(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }
  std::string ident() {
    skip();
    std::size_t start = pos_;
    while (ident_continues(pos_)) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text, const std::optional<Dialect>& dialect) {
  Parser p(text);
  Formula f = p.formula();
  p.finish();
  if (dialect) {
    if (f.has_neg() && dialect->kind != DialectKind::PlusMinus)
      throw ParseError(0, "negative literal not admitted by dialect " + dialect->name());
    if (!dialect->admits(f)) throw ParseError(0, "formula not admitted by dialect " + dialect->name());
  }
  return f;
}

const ExtVar* parse_ext_name(std::string_view text) {
  Parser p(text);
  const ExtVar* e = p.ext_var();
  p.finish();
  return e;
}

Literal parse_literal(std::string_view text) {
  Parser p(text);
  Literal l = p.literal();
  p.finish();
  return l;
}

Var parse_var(std::string_view text) {
  Parser p(text);
  Var v = p.var();
  p.finish();
  return v;
}

}  // namespace lndt
