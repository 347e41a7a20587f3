#include "famcode/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace famcode {

ParseError::ParseError(const std::string& msg, int line, int column)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg
                                  : "column " + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

namespace {

class Parser {
 public:
  Parser(const std::string& s, Ring& ring, bool allowNew, int line, int offset)
      : s_(s), ring_(ring), allowNew_(allowNew), line_(line), offset_(offset) {}

  Poly parseAll() {
    Poly p = expr();
    skip();
    if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, static_cast<int>(pos_) + 1 + offset_);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    skip();
    Poly acc;
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    Poly t = term();
    acc = neg ? -t : t;
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else break;
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      if (accept('*')) {
        acc = acc * factor();
      } else if (accept('/')) {
        Poly d = factor();
        if (d.isZero()) fail("division by zero");
        if (d.size() != 1 || !d.terms().begin()->first.isOne()) fail("division only by rational constants");
        acc = acc * Rational(1 / d.terms().begin()->second);
      } else {
        break;
      }
    }
    return acc;
  }

  Poly factor() {
    skip();
    if (accept('-')) return -factor();
    Poly base = primary();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      int e = std::stoi(s_.substr(start, pos_ - start));
      Poly r(1);
      for (int i = 0; i < e; ++i) r = r * base;
      return r;
    }
    return base;
  }

  Poly primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Poly(Rational(mpz_class(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      int idx = ring_.find(name);
      if (idx < 0) {
        if (!allowNew_) {
          pos_ = start;
          fail("unknown variable '" + name + "'");
        }
        idx = ring_.add(name);
      }
      return Poly::var(idx);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  Ring& ring_;
  bool allowNew_;
  int line_, offset_;
  std::size_t pos_ = 0;
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

Poly parsePoly(const std::string& text, Ring& ring, bool allowNew, int line) {
  std::string body = text;
  int comp = 1;
  auto at = text.find('@');
  if (at != std::string::npos) {
    body = text.substr(0, at);
    std::string tag = trim(text.substr(at + 1));
    if (tag.empty() || !std::all_of(tag.begin(), tag.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("component tag must be a positive integer", line, static_cast<int>(at) + 2);
    comp = std::stoi(tag);
    if (comp < 1) throw ParseError("component tag must be a positive integer", line, static_cast<int>(at) + 2);
  }
  if (trim(body).empty()) throw ParseError("empty polynomial", line, 1);
  Parser p(body, ring, allowNew, line, 0);
  Poly r = p.parseAll();
  return comp == 1 ? r : r.inComponent(comp);
}

Monomial parseMonomial(const std::string& text, Ring& ring, bool allowNew, int line) {
  Poly p = parsePoly(text, ring, allowNew, line);
  if (p.size() != 1 || p.terms().begin()->second != 1)
    throw ParseError("expected a single monomial", line, 1);
  return p.terms().begin()->first;
}

MonomialOrder parseOrder(const std::string& specIn, Ring& ring) {
  std::string spec = trim(specIn);
  auto names = [&ring](const std::string& list, char sep) {
    std::vector<int> idx;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, sep)) {
      item = trim(item);
      if (item.empty()) throw ParseError("empty variable name in order specifier", 0, 1);
      idx.push_back(ring.add(item));
    }
    return idx;
  };
  if (spec.rfind("extend(", 0) == 0 && spec.back() == ')') {
    std::string inner = spec.substr(7, spec.size() - 8);
    auto semi = inner.find(';');
    if (semi == std::string::npos) throw ParseError("extend(...) needs '; new variables'", 0, 8);
    MonomialOrder eta = parseOrder(inner.substr(0, semi), ring);
    int n = ring.size();
    names(inner.substr(semi + 1), ',');
    return extendOrder(eta, n);
  }
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw ParseError("order specifier needs 'kind:vars'", 0, 1);
  std::string kind = spec.substr(0, colon);
  auto prec = names(spec.substr(colon + 1), '>');
  if (kind == "lex") return MonomialOrder::lex(prec, ring.names());
  if (kind == "grlex") return MonomialOrder::grlex(prec, ring.names());
  throw ParseError("unknown order kind '" + kind + "'", 0, 1);
}

std::string renderMonomial(const Monomial& m, const Ring& ring) {
  std::string out;
  for (std::size_t i = 0; i < m.width(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += static_cast<int>(i) < ring.size() ? ring.name(static_cast<int>(i)) : "_v" + std::to_string(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

std::string render(const Poly& p, const Ring& ring, const MonomialOrder& order) {
  if (p.isZero()) return "0";
  auto terms = sortedTerms(p, order);
  std::string out;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = abs(c);
    std::string mono = renderMonomial(m.withComp(1), ring);
    std::string body;
    if (mono.empty()) body = formatRational(a);
    else if (a == 1) body = mono;
    else body = formatRational(a) + "*" + mono;
    if (out.empty()) out = (c < 0 ? "-" : "") + body;
    else out += (c < 0 ? " - " : " + ") + body;
  }
  return out;
}

std::string renderVector(const Poly& p, const Ring& ring, const MonomialOrder& order, int s) {
  if (s <= 1) return render(p, ring, order);
  std::string out = "(";
  for (int c = 1; c <= s; ++c) {
    if (c > 1) out += ", ";
    Poly comp = p.component(c);
    auto inner = MonomialOrder::custom(
        [&order, c](const Monomial& a, const Monomial& b) { return order.compare(a.withComp(c), b.withComp(c)); },
        "component");
    out += render(comp, ring, inner);
  }
  return out + ")";
}

}  // namespace famcode
