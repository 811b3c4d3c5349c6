#include "symfun/io.hpp"

#include <cctype>
#include <optional>

#include "json.hpp"
#include "symfun/errors.hpp"

namespace symfun {

using json = nlohmann::ordered_json;

std::string generator_letter(Basis b) {
  switch (b) {
    case Basis::m:
      return "m";
    case Basis::p:
      return "p";
    case Basis::s:
      return "s";
    case Basis::HL_P:
      return "P";
    case Basis::HL_Q:
      return "Q";
    case Basis::Mac_M:
      return "M";
  }
  return "?";
}

namespace {

struct Coeff {
  bool negative = false;
  std::string body;  // empty for a unit coefficient
};

// Splits c into a sign and a printable magnitude.
Coeff split_coeff(const RatFun& c) {
  if (c.is_one()) return {false, ""};
  if ((-c).is_one()) return {true, ""};
  if (c.is_polynomial() && c.num().is_monomial() && sgn(c.num().leading().c) < 0) {
    return {true, "(" + (-c.num()).to_string() + ")"};
  }
  if (c.is_polynomial()) return {false, c.to_string()};
  return {false, "(" + c.to_string() + ")"};
}

}  // namespace

std::string render_plain(const SymFun<RatFun>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [la, c] : f.coeffs()) {
    const Coeff k = split_coeff(c);
    std::string term;
    if (la.empty()) {
      term = k.body.empty() ? "1" : k.body;
    } else {
      term = k.body.empty() ? "" : k.body + "*";
      term += generator_letter(f.basis()) + "[" + la.to_string() + "]";
    }
    if (first) {
      out += (k.negative ? "-" : "") + term;
    } else {
      out += (k.negative ? " - " : " + ") + term;
    }
    first = false;
  }
  return out;
}

namespace {

std::string poly_latex(const IntPoly2& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& tm : p.terms()) {
    const bool neg = sgn(tm.c) < 0;
    const Int mag = abs(tm.c);
    if (neg) {
      out += first ? "-" : " - ";
    } else if (!first) {
      out += " + ";
    }
    first = false;
    std::string mono;
    if (tm.dq > 0) mono += tm.dq == 1 ? "q" : "q^{" + std::to_string(tm.dq) + "}";
    if (tm.dt > 0) mono += tm.dt == 1 ? "t" : "t^{" + std::to_string(tm.dt) + "}";
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + mono;
    }
  }
  return out;
}

}  // namespace

std::string ratfun_latex(const RatFun& r) {
  if (r.is_polynomial()) return poly_latex(r.num());
  return "\\frac{" + poly_latex(r.num()) + "}{" + poly_latex(r.den()) + "}";
}

std::string render_latex(const SymFun<RatFun>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [la, c] : f.coeffs()) {
    std::string coeff;
    bool neg = false;
    if (c.is_one()) {
    } else if ((-c).is_one()) {
      neg = true;
    } else if (c.is_polynomial() && c.num().is_monomial()) {
      neg = sgn(c.num().leading().c) < 0;
      coeff = poly_latex(neg ? -c.num() : c.num());
    } else if (c.is_polynomial()) {
      coeff = "\\left(" + poly_latex(c.num()) + "\\right)";
    } else {
      coeff = ratfun_latex(c);
    }
    std::string term;
    if (la.empty()) {
      term = coeff.empty() ? "1" : coeff;
    } else {
      term = coeff.empty() ? "" : coeff + " ";
      term += generator_letter(f.basis()) + "_{(" + la.to_string() + ")}";
    }
    if (first) {
      out += (neg ? "-" : "") + term;
    } else {
      out += (neg ? " - " : " + ") + term;
    }
    first = false;
  }
  return out;
}

namespace {

json to_json_value(const SymFun<RatFun>& f) {
  json j;
  j["basis"] = basis_name(f.basis());
  j["degree_bound"] = f.degree_bound();
  json terms = json::array();
  for (const auto& [la, c] : f.coeffs()) {
    json t;
    t["partition"] = la.parts();
    t["coeff"] = c.to_string();
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

SymFun<RatFun> from_json_value(const json& j) {
  SymFun<RatFun> f(parse_basis(j.at("basis").get<std::string>()), j.at("degree_bound").get<int>());
  for (const auto& t : j.at("terms")) {
    f.add_term(Partition(t.at("partition").get<std::vector<int>>()),
               RatFun::parse(t.at("coeff").get<std::string>()));
  }
  f.set_degree_bound(j.at("degree_bound").get<int>());
  return f;
}

}  // namespace

std::string symfun_to_json(const SymFun<RatFun>& f) { return to_json_value(f).dump(); }

SymFun<RatFun> symfun_from_json(std::string_view text) {
  return from_json_value(json::parse(text.begin(), text.end()));
}

std::string symfun_list_to_json(const std::vector<SymFun<RatFun>>& fs) {
  json arr = json::array();
  for (const auto& f : fs) arr.push_back(to_json_value(f));
  return arr.dump();
}

std::vector<SymFun<RatFun>> symfun_list_from_json(std::string_view text) {
  const json arr = json::parse(text.begin(), text.end());
  std::vector<SymFun<RatFun>> out;
  for (const auto& j : arr) out.push_back(from_json_value(j));
  return out;
}

// ------------------------------------------------------ operand parser

namespace {

struct Value {
  std::optional<RatFun> scalar;
  SymFun<RatFun> f;

  static Value of(RatFun r) { return {std::move(r), SymFun<RatFun>()}; }
  static Value of(SymFun<RatFun> g) { return {std::nullopt, std::move(g)}; }
};

SymFun<RatFun> as_symfun(const Value& v, Basis b) {
  if (v.scalar) return SymFun<RatFun>::constant(b, *v.scalar);
  return v.f;
}

Value add(const Value& a, const Value& b, bool subtract) {
  if (a.scalar && b.scalar) return Value::of(subtract ? *a.scalar - *b.scalar : *a.scalar + *b.scalar);
  const Basis target = a.scalar ? b.f.basis() : (b.scalar ? a.f.basis() : a.f.basis());
  SymFun<RatFun> x = as_symfun(a, target);
  SymFun<RatFun> y = as_symfun(b, a.scalar ? target : (b.scalar ? target : b.f.basis()));
  if (x.basis() != y.basis()) {
    x = convert(symbolic(), x, Basis::p);
    y = convert(symbolic(), y, Basis::p);
  }
  return Value::of(subtract ? x - y : x + y);
}

Value mul(const Value& a, const Value& b) {
  if (a.scalar && b.scalar) return Value::of(*a.scalar * *b.scalar);
  if (a.scalar) return Value::of(b.f * *a.scalar);
  if (b.scalar) return Value::of(a.f * *b.scalar);
  const int bound = a.f.degree_bound() + b.f.degree_bound();
  return Value::of(multiply(symbolic(), a.f, b.f, bound));
}

class ExprParser {
 public:
  explicit ExprParser(std::string_view s) : s_(s) {}

  SymFun<RatFun> run() {
    Value v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return as_symfun(v, Basis::p);
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])) != 0) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Value expr() {
    Value acc = term();
    for (;;) {
      if (accept('+')) {
        acc = add(acc, term(), false);
      } else if (accept('-')) {
        acc = add(acc, term(), true);
      } else {
        return acc;
      }
    }
  }

  Value term() {
    Value acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = mul(acc, unary());
      } else if (accept('/')) {
        const std::size_t at = pos_;
        Value d = unary();
        if (!d.scalar) throw ParseError("division by a symmetric function", at);
        if (d.scalar->is_zero()) throw DivisionByZero();
        acc = mul(acc, Value::of(d.scalar->inverse()));
      } else {
        return acc;
      }
    }
  }

  Value unary() {
    if (accept('-')) return mul(Value::of(RatFun(-1L)), unary());
    if (accept('+')) return unary();
    return power();
  }

  Value power() {
    Value base = primary();
    if (!accept('^')) return base;
    const bool neg = accept('-');
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])) != 0) ++pos_;
    if (start == pos_ || pos_ - start > 4) fail("expected exponent");
    const int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
    if (base.scalar) {
      if (neg && base.scalar->is_zero()) throw DivisionByZero();
      return Value::of(base.scalar->pow(neg ? -e : e));
    }
    if (neg) fail("negative power of a symmetric function");
    Value r = Value::of(RatFun(1L));
    for (int i = 0; i < e; ++i) r = mul(r, base);
    return r;
  }

  Value primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])) != 0) ++pos_;
      return Value::of(RatFun(Int(std::string(s_.substr(start, pos_ - start)))));
    }
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (c == 'q' || c == 't') {
      ++pos_;
      return Value::of(c == 'q' ? RatFun::q() : RatFun::t());
    }
    std::optional<Basis> basis;
    switch (c) {
      case 'm':
        basis = Basis::m;
        break;
      case 'p':
        basis = Basis::p;
        break;
      case 's':
        basis = Basis::s;
        break;
      case 'P':
        basis = Basis::HL_P;
        break;
      case 'Q':
        basis = Basis::HL_Q;
        break;
      case 'M':
        basis = Basis::Mac_M;
        break;
      default:
        fail("unexpected character");
    }
    ++pos_;
    if (!accept('[')) fail("expected '['");
    const std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] != ']') ++pos_;
    if (pos_ >= s_.size()) fail("expected ']'");
    Partition la;
    try {
      la = Partition::parse(s_.substr(start, pos_ - start));
    } catch (const InvalidPartition& e) {
      throw ParseError(e.what(), start);
    }
    ++pos_;
    return Value::of(SymFun<RatFun>::element(*basis, la));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

SymFun<RatFun> parse_symfun_expr(std::string_view text) { return ExprParser(text).run(); }

}  // namespace symfun
