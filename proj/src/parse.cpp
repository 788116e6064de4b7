#include "linkagelab/parse.hpp"

#include <cctype>
#include <string>

namespace linkagelab {
namespace {

class Parser {
 public:
  Parser(const RingPtr& ring, std::string_view text) : ring_(ring), s_(text) {}

  Polynomial expression() {
    skip();
    bool negate = false;
    if (peek() == '+' || peek() == '-') negate = get() == '-';
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip();
      char c = peek();
      if (c != '+' && c != '-') return acc;
      get();
      Polynomial t = term();
      acc = c == '+' ? acc + t : acc - t;
    }
  }

  Polynomial term() {
    Polynomial acc = power();
    for (;;) {
      skip();
      if (peek() == '*') {
        get();
        acc = acc * power();
      } else if (peek() == '(' || std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
        acc = acc * power();  // juxtaposition
      } else {
        return acc;
      }
    }
  }

  Polynomial power() {
    Polynomial base = atom();
    skip();
    if (peek() == '^') {
      get();
      skip();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
      unsigned long e = number();
      if (e > 65535) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial atom() {
    skip();
    char c = peek();
    if (c == '(') {
      get();
      Polynomial e = expression();
      skip();
      if (get() != ')') fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      unsigned long long v = 0;
      Coeff p = ring_->characteristic();
      while (std::isdigit(static_cast<unsigned char>(peek()))) v = (v * 10 + static_cast<unsigned>(get() - '0')) % p;
      return Polynomial::constant(ring_, static_cast<long long>(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') get();
      std::string name(s_.substr(start, pos_ - start));
      int idx = ring_->variable_index(name);
      if (idx < 0) fail("unknown variable '" + name + "'", start);
      return Polynomial::variable(ring_, static_cast<std::size_t>(idx));
    }
    fail(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c + "'");
  }

  unsigned long number() {
    unsigned long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<unsigned>(get() - '0');
      if (v > 1000000) fail("number too large");
    }
    return v;
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
  bool at_end() {
    skip();
    return pos_ >= s_.size();
  }
  std::size_t pos() const { return pos_; }

  [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos_); }
  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    throw ParseError(msg, 1, static_cast<int>(at) + 1);
  }

 private:
  const RingPtr& ring_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

/// Splits on top-level commas after stripping one pair of enclosing brackets.
std::vector<std::string_view> split_list(std::string_view text, char open, char close, bool brackets_required) {
  auto trim = [](std::string_view v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
    return v;
  };
  text = trim(text);
  bool bracketed = false;
  if (text.size() >= 2 && text.front() == open && text.back() == close) {
    int depth = 0;
    bracketed = true;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == open) ++depth;
      if (text[i] == close) --depth;
      if (depth == 0 && i + 1 < text.size()) bracketed = false;
    }
  }
  if (bracketed) text = trim(text.substr(1, text.size() - 2));
  else if (brackets_required) throw ParseError(std::string("expected '") + open + "...'" + close + "'", 1, 1);
  std::vector<std::string_view> out;
  if (text.empty()) return out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      auto item = trim(text.substr(start, i - start));
      if (item.empty()) throw ParseError("empty list entry", 1, static_cast<int>(start) + 1);
      out.push_back(item);
      start = i + 1;
    } else if (text[i] == '(' || text[i] == '[') {
      ++depth;
    } else if (text[i] == ')' || text[i] == ']') {
      --depth;
    }
  }
  return out;
}

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) {
  Parser p(ring, text);
  if (p.at_end()) p.fail("empty expression");
  Polynomial f = p.expression();
  if (!p.at_end()) p.fail("trailing input");
  return f;
}

std::vector<Polynomial> parse_polynomial_list(const RingPtr& ring, std::string_view text) {
  std::vector<Polynomial> out;
  for (auto item : split_list(text, '(', ')', false)) out.push_back(parse_polynomial(ring, item));
  return out;
}

FreeVector parse_vector(const FreeModulePtr& module, std::string_view text) {
  auto items = split_list(text, '[', ']', true);
  if (items.size() != module->rank())
    throw ParseError("vector has " + std::to_string(items.size()) + " entries, expected " +
                         std::to_string(module->rank()),
                     1, 1);
  std::vector<Polynomial> comps;
  for (auto item : items) comps.push_back(parse_polynomial(module->ring(), item));
  return FreeVector::from_components(module, comps);
}

}  // namespace linkagelab
