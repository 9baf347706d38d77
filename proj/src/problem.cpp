#include "lgb/problem.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "lgb/errors.hpp"

namespace lgb {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class ExprParser {
 public:
  ExprParser(const std::string& text, const FieldSpec& field, const std::vector<std::string>& vars, int line, int column)
      : s_(text), field_(field), vars_(vars), line_(line), col0_(column) {}

  LaurentPoly parse() {
    skip_ws();
    if (pos_ == s_.size()) error("empty expression");
    LaurentPoly p = expr();
    skip_ws();
    if (pos_ != s_.size()) error(std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    throw ParseError(what, line_, col0_ + static_cast<int>(pos_));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  LaurentPoly zero() const { return LaurentPoly(field_, vars_.size()); }

  LaurentPoly expr() {
    LaurentPoly acc = zero();
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    LaurentPoly t = term();
    acc = negate ? -t : t;
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  LaurentPoly term() {
    LaurentPoly acc = power();
    for (;;) {
      if (accept('*')) {
        acc = acc * power();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        LaurentPoly d = power();
        if (d.size() != 1) {
          pos_ = at;
          if (d.is_zero()) throw ParseError("division by zero", line_, col0_ + static_cast<int>(at));
          error("division is only allowed by a single term");
        }
        const Term& t = d.terms().front();
        acc = acc.mul_term(t.coeff.inverse(), -t.exp);
      } else {
        return acc;
      }
    }
  }

  LaurentPoly power() {
    LaurentPoly base = primary();
    if (!accept('^')) return base;
    skip_ws();
    bool negative = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      negative = s_[pos_] == '-';
      ++pos_;
    }
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected an integer exponent");
    const std::string digits = s_.substr(start, pos_ - start);
    if (digits.size() > 9) error("exponent too large");
    const long e = std::stol(digits);
    if (base.size() == 1) {
      const Term& t = base.terms().front();
      Coefficient c(field_, 1);
      const Coefficient b = negative ? t.coeff.inverse() : t.coeff;
      for (long k = 0; k < e; ++k) c *= b;
      return LaurentPoly::monomial(c, t.exp * (negative ? -e : e));
    }
    if (negative) error("negative powers are only allowed for single terms");
    if (e > 64) error("exponent too large for a non-monomial base");
    LaurentPoly acc = LaurentPoly::constant(field_, vars_.size(), 1);
    for (long k = 0; k < e; ++k) acc = acc * base;
    return acc;
  }

  LaurentPoly primary() {
    skip_ws();
    if (pos_ == s_.size()) error("unexpected end of expression");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      LaurentPoly inner = expr();
      if (!accept(')')) error("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpz_class value(s_.substr(start, pos_ - start));
      return LaurentPoly::monomial(Coefficient(field_, mpq_class(value)), ExponentVec(vars_.size()));
    }
    if (is_ident_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && is_ident_char(s_[pos_])) ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it != vars_.end())
        return LaurentPoly::monomial(Coefficient(field_, 1), ExponentVec::unit(vars_.size(), it - vars_.begin()));
      if (name == "a" && field_.kind() == FieldKind::ExtensionField)
        return LaurentPoly::monomial(Coefficient::generator(field_), ExponentVec(vars_.size()));
      pos_ = start;
      error("unknown variable '" + name + "'");
    }
    error(std::string("unexpected '") + c + "'");
  }

  const std::string& s_;
  const FieldSpec& field_;
  const std::vector<std::string>& vars_;
  int line_;
  int col0_;
  std::size_t pos_ = 0;
};

std::string format_term(const Term& t, const std::vector<std::string>& vars) {
  const std::string mono = format_monomial(t.exp, vars);
  const bool unit_monomial = t.exp.is_zero();
  const Coefficient& c = t.coeff;
  if (unit_monomial) return c.needs_parentheses() ? "(" + c.str() + ")" : c.str();
  if (c.is_one()) return mono;
  if (c.field().is_rational() && c.rational() == -1) return "-" + mono;
  std::string cs = c.str();
  if (c.needs_parentheses()) cs = "(" + cs + ")";
  return cs + "*" + mono;
}

}  // namespace

LaurentPoly parse_polynomial(const std::string& text, const FieldSpec& field, const std::vector<std::string>& vars, int line,
                             int column) {
  return ExprParser(text, field, vars, line, column).parse();
}

std::string format_monomial(const ExponentVec& e, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars.at(k);
    if (e[k] != 1) out += '^' + std::to_string(e[k]);
  }
  return out.empty() ? "1" : out;
}

std::string format_polynomial(const LaurentPoly& f, const std::vector<std::string>& vars, const TermOrder* order) {
  if (f.is_zero()) return "0";
  std::vector<Term> ts;
  if (order) {
    ts = order->sorted_terms(f);
  } else {
    ts = f.terms();
    std::reverse(ts.begin(), ts.end());
  }
  std::string out;
  for (const auto& t : ts) {
    std::string s = format_term(t, vars);
    if (out.empty())
      out = s;
    else if (s[0] == '-')
      out += " - " + s.substr(1);
    else
      out += " + " + s;
  }
  return out;
}

// --------------------------------------------------------------- problem file

namespace {

struct Line {
  int number;
  std::string text;  // comment stripped
};

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

int column_of(const Line& line, const std::string& word) {
  auto p = line.text.find(word);
  return p == std::string::npos ? 1 : static_cast<int>(p) + 1;
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

mpq_class parse_rational(const std::string& token, const Line& line) {
  try {
    mpq_class q(token);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError("expected a rational number, got '" + token + "'", line.number, column_of(line, token));
  }
}

std::uint64_t parse_unsigned(const std::string& token, const Line& line) {
  if (token.empty() || token.size() > 18 || !std::all_of(token.begin(), token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError("expected a positive integer, got '" + token + "'", line.number, column_of(line, token));
  return std::stoull(token);
}

// "(1,2) (0,-1/2)" → list of vectors.
std::vector<std::vector<mpq_class>> parse_vectors(const std::string& rest, const Line& line, int offset) {
  std::vector<std::vector<mpq_class>> out;
  std::size_t i = 0;
  auto fail = [&](const std::string& what) { throw ParseError(what, line.number, offset + static_cast<int>(i)); };
  while (i < rest.size()) {
    if (std::isspace(static_cast<unsigned char>(rest[i]))) {
      ++i;
      continue;
    }
    if (rest[i] != '(') fail("expected '('");
    const std::size_t close = rest.find(')', i);
    if (close == std::string::npos) fail("missing ')'");
    std::vector<mpq_class> vec;
    std::string inside = rest.substr(i + 1, close - i - 1);
    std::stringstream ss(inside);
    for (std::string item; std::getline(ss, item, ',');) {
      item = trim(item);
      if (item.empty()) fail("empty coordinate");
      vec.push_back(parse_rational(item, line));
    }
    out.push_back(std::move(vec));
    i = close + 1;
  }
  return out;
}

}  // namespace

ProblemFile parse_problem(const std::string& text) {
  std::vector<Line> lines;
  {
    std::istringstream in(text);
    int number = 0;
    for (std::string raw; std::getline(in, raw);) {
      ++number;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      lines.push_back({number, raw});
    }
  }

  ProblemFile pf;
  bool have_ring = false, have_vars = false, have_order = false, in_gens = false;
  std::vector<Line> gen_lines;
  for (const auto& line : lines) {
    const std::string body = trim(line.text);
    if (body.empty()) continue;
    if (in_gens) {
      gen_lines.push_back(line);
      continue;
    }
    auto w = words(body);
    const std::string& key = w[0];
    const int key_col = column_of(line, key);
    auto dup = [&](bool seen) {
      if (seen) throw ParseError("duplicate '" + key + "' directive", line.number, key_col);
    };
    if (key == "ring") {
      dup(have_ring);
      have_ring = true;
      if (w.size() < 2) throw ParseError("ring needs a field", line.number, key_col);
      if (w[1] == "Q" && w.size() == 2) {
        pf.field = &FieldSpec::rational();
      } else if (w[1] == "Qp" && w.size() == 3) {
        const auto p = parse_unsigned(w[2], line);
        if (!is_prime(p)) throw ParseError("Qp needs a prime", line.number, column_of(line, w[2]));
        pf.field = &FieldSpec::padic_rational(p);
      } else if (w[1] == "GF" && w.size() >= 3) {
        const auto q = parse_unsigned(w[2], line);
        try {
          if (w.size() == 3) {
            pf.field = &FieldSpec::galois_field(q);
          } else {
            std::uint64_t p = 0;
            for (std::uint64_t c = 2; c <= q; ++c)
              if (q % c == 0) {
                p = c;
                break;
              }
            std::vector<std::uint64_t> modulus;
            for (std::size_t k = 3; k < w.size(); ++k) modulus.push_back(parse_unsigned(w[k], line));
            pf.field = &FieldSpec::extension_field(p, modulus);
            if (pf.field->order() != q) throw UsageError("defining polynomial degree does not match the field size");
          }
        } catch (const UsageError& e) {
          throw ParseError(e.what(), line.number, column_of(line, w[2]));
        }
      } else {
        throw ParseError("expected 'ring Q', 'ring Qp <p>' or 'ring GF <q>'", line.number, key_col);
      }
    } else if (key == "vars") {
      dup(have_vars);
      have_vars = true;
      if (w.size() < 2) throw ParseError("vars needs at least one name", line.number, key_col);
      std::set<std::string> seen;
      for (std::size_t k = 1; k < w.size(); ++k) {
        const std::string& name = w[k];
        const bool valid = is_ident_start(name[0]) && std::all_of(name.begin(), name.end(), is_ident_char);
        if (!valid || !seen.insert(name).second)
          throw ParseError("bad or repeated variable name '" + name + "'", line.number, column_of(line, name));
        pf.vars.push_back(name);
      }
      if (pf.vars.size() > kMaxVars) throw ParseError("too many variables", line.number, key_col);
    } else if (key == "order") {
      dup(have_order);
      have_order = true;
      if (w.size() != 2 || (w[1] != "min" && w[1] != "degmin"))
        throw ParseError("expected 'order min' or 'order degmin'", line.number, key_col);
      pf.order = w[1];
    } else if (key == "weight") {
      dup(pf.weight.has_value());
      const int offset = key_col + static_cast<int>(key.size());
      auto vecs = parse_vectors(trim(body.substr(key.size())), line, offset);
      if (vecs.size() != 1) throw ParseError("weight takes exactly one vector", line.number, key_col);
      pf.weight = vecs.front();
    } else if (key == "polytope") {
      dup(pf.polytope.has_value());
      const int offset = key_col + static_cast<int>(key.size());
      auto vecs = parse_vectors(trim(body.substr(key.size())), line, offset);
      if (vecs.empty()) throw ParseError("polytope needs at least one vertex", line.number, key_col);
      pf.polytope = vecs;
    } else if (key == "precision") {
      dup(pf.precision.has_value());
      if (w.size() != 2) throw ParseError("precision takes one number", line.number, key_col);
      pf.precision = parse_rational(w[1], line);
    } else if (key == "gens:" || (key == "gens" && w.size() == 2 && w[1] == ":")) {
      in_gens = true;
    } else {
      throw ParseError("unknown directive '" + key + "'", line.number, key_col);
    }
  }
  if (!have_ring) throw ParseError("missing 'ring' directive", 1, 1);
  if (!have_vars) throw ParseError("missing 'vars' directive", 1, 1);
  if (!have_order) throw ParseError("missing 'order' directive", 1, 1);
  if (pf.weight && pf.polytope) throw ParseError("'weight' and 'polytope' are mutually exclusive", 1, 1);
  if (pf.field->kind() == FieldKind::ExtensionField && std::find(pf.vars.begin(), pf.vars.end(), "a") != pf.vars.end())
    throw ParseError("'a' names the field generator and cannot be a variable", 1, 1);
  const std::size_t n = pf.vars.size();
  if (pf.weight && pf.weight->size() != n) throw ParseError("weight dimension differs from the number of variables", 1, 1);
  if (pf.polytope)
    for (const auto& v : *pf.polytope)
      if (v.size() != n) throw ParseError("vertex dimension differs from the number of variables", 1, 1);

  for (const auto& line : gen_lines) {
    const std::size_t first = line.text.find_first_not_of(" \t");
    pf.generators.push_back(parse_polynomial(line.text.substr(first), *pf.field, pf.vars, line.number, static_cast<int>(first) + 1));
  }
  return pf;
}

}  // namespace lgb
