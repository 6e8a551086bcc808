#include "hyperint/parse.hpp"

#include <cctype>

#include "hyperint/factor_uni.hpp"

namespace hyperint {

namespace {

class Parser {
 public:
  Parser(const std::string& s, ParseContext& ctx) : s_(s), ctx_(ctx) {}

  RFunc expr() {
    RFunc acc = term();
    for (;;) {
      skip();
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        return acc;
    }
  }

  std::vector<RFunc> form_or_expr() {
    skip();
    std::size_t save = pos_;
    if (word() == "form") {
      skip();
      expect('(');
      std::vector<RFunc> items;
      skip();
      if (!eat(')')) {
        for (;;) {
          items.push_back(expr());
          skip();
          if (eat(')')) break;
          expect(',');
        }
      }
      finish();
      return items;
    }
    pos_ = save;
    RFunc r = expr();
    finish();
    return {r};
  }

  void finish() {
    skip();
    if (pos_ != s_.size()) throw SyntaxError("unexpected '" + std::string(1, s_[pos_]) + "'", pos_);
  }

 private:
  RFunc term() {
    RFunc acc = unary();
    for (;;) {
      skip();
      if (eat('*')) {
        acc *= unary();
      } else if (peek() == '/') {
        const std::size_t at = pos_;
        ++pos_;
        RFunc d = unary();
        if (d.is_zero()) throw SyntaxError("division by zero", at);
        acc /= d;
      } else {
        return acc;
      }
    }
  }

  RFunc unary() {
    skip();
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  RFunc power() {
    RFunc base = atom();
    skip();
    if (!eat('^')) return base;
    skip();
    bool neg = eat('-');
    skip();
    const std::size_t at = pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw SyntaxError("integer exponent expected", pos_);
    Integer e = integer();
    if (e > 10000) throw SyntaxError("exponent too large", at);
    long k = e.get_si();
    if (neg && base.is_zero()) throw SyntaxError("division by zero", at);
    return pow(base, neg ? -k : k);
  }

  RFunc atom() {
    skip();
    const std::size_t at = pos_;
    char c = peek();
    if (c == '(') {
      ++pos_;
      RFunc r = expr();
      skip();
      expect(')');
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return RFunc(Rational(integer()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string w = word();
      if (w == "alg") return RFunc(alg_literal());
      if (w.size() == 2 && w[0] == 'x' && w[1] >= '1' && w[1] <= '9') {
        const int k = w[1] - '0';
        if (k > ctx_.nvars()) throw UnknownVariable("variable " + w + " outside the declared " + std::to_string(ctx_.nvars()) + " variables");
        return RFunc::var(xvar(k));
      }
      if (w == "z") return RFunc::var(kVarZ);
      if (w == "t") return RFunc::var(kVarT);
      auto it = ctx_.names().find(w);
      if (it != ctx_.names().end()) return RFunc(it->second);
      throw UnknownVariable("unknown symbol '" + w + "' at position " + std::to_string(at));
    }
    if (c == '\0') throw SyntaxError("unexpected end of input", pos_);
    throw SyntaxError("unexpected '" + std::string(1, c) + "'", pos_);
  }

  AlgNumber alg_literal() {
    skip();
    expect('(');
    const std::size_t at = pos_;
    RFunc m = expr();
    skip();
    expect(';');
    RFunc c = expr();
    skip();
    expect(')');
    auto as_tpoly = [&](const RFunc& r) {
      if (!r.is_polynomial() || (r.vars() & ~(1u << kVarT)) || !r.is_rational()) throw SyntaxError("alg() expects polynomials in t", at);
      return r.num().to_univariate(kVarT);
    };
    QPoly mp = as_tpoly(m), cp = as_tpoly(c);
    if (mp.degree() < 1) throw SyntaxError("alg() needs a nonconstant minimal polynomial", at);
    mp = mp.monic();
    if (mp.degree() == 1) return evaluate(cp, AlgNumber(Rational(-mp[0])));
    FieldPtr f = ctx_.field_for(mp);
    return AlgNumber(f, (cp % mp).coeffs());
  }

  Integer integer() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return Integer(s_.substr(start, pos_ - start));
  }

  std::string word() {
    std::size_t start = pos_;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    return s_.substr(start, pos_ - start);
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    skip();
    if (!eat(c)) throw SyntaxError(std::string("expected '") + c + "'", pos_);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  const std::string& s_;
  ParseContext& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

FieldPtr ParseContext::field_for(const QPoly& minpoly) {
  for (const auto& f : fields_)
    if (f->minpoly() == minpoly) return f;
  auto fac = factor_rational(minpoly);
  if (fac.factors.size() != 1 || fac.factors[0].second != 1) throw std::invalid_argument("minimal polynomial " + to_string(minpoly) + " is reducible");
  std::string name = "alpha";
  for (const auto& [n, v] : names_)
    if (!v.is_rational() && v.field()->minpoly() == minpoly) name = n;
  FieldPtr f = NumberField::make(minpoly, name);
  fields_.push_back(f);
  return f;
}

void ParseContext::declare(const std::string& name, const QPoly& minpoly) {
  QPoly m = minpoly.monic();
  if (m.degree() < 1) throw std::invalid_argument("declaration needs a nonconstant polynomial");
  if (m.degree() == 1) {
    names_[name] = AlgNumber(Rational(-m[0]));
    return;
  }
  FieldPtr f;
  for (const auto& g : fields_)
    if (g->minpoly() == m) f = g;
  if (!f) {
    auto fac = factor_rational(m);
    if (fac.factors.size() != 1 || fac.factors[0].second != 1) throw std::invalid_argument("minimal polynomial " + to_string(m) + " is reducible");
    f = NumberField::make(m, name);
    fields_.push_back(f);
  }
  names_[name] = AlgNumber::generator(f);
}

void ParseContext::declare(const std::string& line) {
  std::string s = line;
  auto trim = [](std::string v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.erase(v.begin());
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.pop_back();
    return v;
  };
  s = trim(s);
  if (s.rfind("with", 0) == 0 && s.size() > 4 && std::isspace(static_cast<unsigned char>(s[4]))) s = trim(s.substr(4));
  auto colon = s.find(':');
  if (colon == std::string::npos) throw SyntaxError("expected ':' in declaration", s.size());
  std::string name = trim(s.substr(0, colon));
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) throw SyntaxError("bad name in declaration", 0);
  for (char ch : name)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') throw SyntaxError("bad name in declaration", 0);
  if (name == "z" || name == "t" || name == "form" || name == "alg" || (name.size() == 2 && name[0] == 'x' && std::isdigit(static_cast<unsigned char>(name[1]))))
    throw SyntaxError("reserved name '" + name + "'", 0);
  std::string body = s.substr(colon + 1);
  Parser p(body, *this);
  RFunc r = p.expr();
  p.finish();
  if (!r.is_polynomial() || (r.vars() & ~(1u << kVarT)) || !r.is_rational()) throw SyntaxError("declaration expects a polynomial in t", colon + 1);
  declare(name, r.num().to_univariate(kVarT));
}

RFunc parse_rfunc(const std::string& text, ParseContext& ctx) {
  Parser p(text, ctx);
  RFunc r = p.expr();
  p.finish();
  return r;
}

MPoly parse_poly(const std::string& text, ParseContext& ctx) {
  RFunc r = parse_rfunc(text, ctx);
  if (!r.is_polynomial()) throw SyntaxError("polynomial expected", 0);
  return r.num();
}

std::vector<RFunc> parse_form_items(const std::string& text, ParseContext& ctx) {
  Parser p(text, ctx);
  return p.form_or_expr();
}

}  // namespace hyperint
