#include "linkagelab/session.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "linkagelab/parse.hpp"

namespace linkagelab {

namespace {

const std::vector<std::string> kOptionKeys = {"module", "a", "b", "i", "poly", "window", "seed", "seeds"};
const std::vector<std::string> kIdealKeys = {"a", "b", "i"};
const std::vector<std::string> kIntegerKeys = {"window", "seed", "seeds"};

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-'; }

/// Cursor over one line; columns are 1-based.
class Line {
 public:
  Line(std::string_view text, int number) : s_(text), number_(number) {}

  int number() const noexcept { return number_; }
  int column() const noexcept { return static_cast<int>(pos_) + 1; }
  std::size_t pos() const noexcept { return pos_; }
  /// Position of the next token.
  std::size_t mark() {
    skip();
    return pos_;
  }
  std::string_view text() const noexcept { return s_; }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip();
    return pos_ >= s_.size();
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  std::string ident(const std::string& what) {
    skip();
    if (pos_ >= s_.size() || !is_ident_start(s_[pos_])) fail("expected " + what);
    std::size_t start = pos_;
    while (pos_ < s_.size() && is_ident_char(s_[pos_])) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  long integer(const std::string& what) {
    skip();
    std::size_t start = pos_;
    if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    long v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, v);
    if (ec != std::errc() || ptr != s_.data() + pos_ || start == pos_) {
      pos_ = start;
      fail("expected " + what);
    }
    return v;
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool accept_word(std::string_view w) {
    skip();
    if (s_.substr(pos_, w.size()) != w) return false;
    std::size_t end = pos_ + w.size();
    if (end < s_.size() && is_ident_char(s_[end])) return false;
    pos_ = end;
    return true;
  }

  /// Text up to the next top-level occurrence of one of `stops` (or the end).
  std::pair<std::size_t, std::string_view> until(std::string_view stops) {
    skip();
    std::size_t start = pos_;
    int depth = 0;
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (depth == 0 && stops.find(c) != std::string_view::npos) break;
      if (c == '(' || c == '[') ++depth;
      if (c == ')' || c == ']') --depth;
      ++pos_;
    }
    return {start, s_.substr(start, pos_ - start)};
  }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t pos) const {
    throw ParseError(msg, number_, static_cast<int>(pos) + 1);
  }

 private:
  std::string_view s_;
  int number_;
  std::size_t pos_ = 0;
};

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string s;
  for (std::size_t k = 0; k < items.size(); ++k) s += (k ? sep : "") + items[k];
  return s;
}

template <typename T>
std::string join_numbers(const std::vector<T>& items) {
  std::vector<std::string> out;
  for (auto v : items) out.push_back(std::to_string(v));
  return join(out, ", ");
}

std::string join_polys(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return join(out, ", ");
}

class SessionParser {
 public:
  explicit SessionParser(unsigned degree_cap) : degree_cap_(degree_cap) {}

  SessionFile parse(std::string_view text) {
    int number = 0;
    bool header = false;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view raw = text.substr(start, end - start);
      if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
      ++number;
      Line line(strip_comment(raw), number);
      if (!line.at_end()) {
        if (!header) {
          parse_header(line);
          header = true;
        } else {
          statement(line);
        }
      }
      start = end + 1;
    }
    if (!header) throw ParseError("expected 'format: 1' header", std::max(number, 1), 1);
    if (!s_.ring) build_ring(Line("", number), 0);
    return std::move(s_);
  }

 private:
  void parse_header(Line& line) {
    if (!line.accept_word("format")) line.fail("expected 'format: 1' header");
    line.expect(':');
    std::size_t at = line.mark();
    long v = line.integer("format version");
    if (v != 1) line.fail_at("unsupported format version " + std::to_string(v), at);
    if (!line.at_end()) line.fail("trailing input");
  }

  void statement(Line& line) {
    std::size_t at = line.mark();
    std::string kw = line.ident("statement keyword");
    if (kw == "char") {
      ring_setting(line, at);
      std::size_t pos = line.mark();
      long p = line.integer("characteristic");
      if (p < 2 || p >= (1L << 16) || !fp::is_prime(static_cast<Coeff>(p)))
        line.fail_at("characteristic must be prime", pos);
      s_.characteristic = static_cast<Coeff>(p);
    } else if (kw == "vars") {
      ring_setting(line, at);
      s_.variables.clear();
      do {
        std::size_t pos = line.mark();
        std::string v = line.ident("variable name");
        if (v.find('-') != std::string::npos) line.fail_at("variable names may not contain '-'", pos);
        if (contains(s_.variables, v)) line.fail_at("duplicate variable '" + v + "'", pos);
        s_.variables.push_back(v);
      } while (line.accept(','));
    } else if (kw == "weights") {
      ring_setting(line, at);
      std::vector<int> w;
      do {
        std::size_t pos = line.mark();
        long v = line.integer("weight");
        if (v <= 0 || v > 1000) line.fail_at("weights must be between 1 and 1000", pos);
        w.push_back(static_cast<int>(v));
      } while (line.accept(','));
      s_.weights = w;
    } else if (kw == "order") {
      ring_setting(line, at);
      std::size_t pos = line.mark();
      std::string o = line.ident("order name");
      if (o == "grevlex") s_.order = OrderKind::grevlex;
      else if (o == "lex") s_.order = OrderKind::lex;
      else line.fail_at("unknown order '" + o + "'", pos);
    } else if (kw == "quotient") {
      if (s_.ring) line.fail_at("quotient must appear once, before modules, ideals and tasks", at);
      build_base(line, at);
      auto [pos, body] = line.until("");
      s_.quotient = polynomial_list(line, pos, body);
      try {
        s_.ring = QuotientRing::make(base_, s_.quotient);
      } catch (const Error& e) {
        line.fail_at(e.what(), pos);
      }
    } else if (kw == "module") {
      build_ring(line, at);
      module(line);
    } else if (kw == "ideal") {
      build_ring(line, at);
      ideal(line);
    } else if (kw == "task") {
      build_ring(line, at);
      task(line);
    } else {
      line.fail_at("unknown statement '" + kw + "'", at);
    }
    if (!line.at_end()) line.fail("trailing input");
  }

  void ring_setting(const Line& line, std::size_t at) const {
    if (base_) line.fail_at("ring settings must precede quotient, modules, ideals and tasks", at);
  }

  void build_base(const Line& line, std::size_t at) {
    if (base_) return;
    if (s_.characteristic == 0) line.fail_at("'char' must be declared first", at);
    if (s_.variables.empty()) line.fail_at("'vars' must be declared first", at);
    Ring::Options o;
    o.order = s_.order;
    if (degree_cap_) o.degree_cap = degree_cap_;
    if (s_.weights) {
      if (s_.weights->size() != s_.variables.size()) line.fail_at("weights do not match the variables", at);
      o.weights = *s_.weights;
    }
    try {
      base_ = Ring::make(s_.characteristic, s_.variables, o);
    } catch (const Error& e) {
      line.fail_at(e.what(), at);
    }
  }

  void build_ring(const Line& line, std::size_t at) {
    if (s_.ring) return;
    build_base(line, at);
    s_.ring = QuotientRing::make(base_, {});
  }

  Polynomial polynomial(const Line& line, std::size_t pos, std::string_view text) const {
    try {
      return parse_polynomial(base_, text);
    } catch (const ParseError& e) {
      line.fail_at(e.message(), pos + static_cast<std::size_t>(e.column()) - 1);
    } catch (const Error& e) {
      line.fail_at(e.what(), pos);
    }
  }

  /// Comma separated homogeneous polynomials of text starting at `pos`.
  std::vector<Polynomial> polynomial_list(const Line& line, std::size_t pos, std::string_view body,
                                          bool require_homogeneous = true) const {
    std::vector<Polynomial> out;
    std::size_t i = 0;
    auto trimmed = [](std::string_view v, std::size_t& offset) {
      while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) {
        v.remove_prefix(1);
        ++offset;
      }
      while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
      return v;
    };
    if (trimmed(body, i).empty()) return out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t k = 0; k <= body.size(); ++k) {
      if (k == body.size() || (body[k] == ',' && depth == 0)) {
        std::size_t offset = start;
        auto item = trimmed(body.substr(start, k - start), offset);
        if (item.empty()) line.fail_at("empty list entry", pos + offset);
        Polynomial f = polynomial(line, pos + offset, item);
        if (require_homogeneous && !f.is_homogeneous(base_->weights()))
          line.fail_at("generator is not weighted-homogeneous: " + f.to_string(), pos + offset);
        out.push_back(std::move(f));
        start = k + 1;
      } else if (body[k] == '(' || body[k] == '[') {
        ++depth;
      } else if (body[k] == ')' || body[k] == ']') {
        --depth;
      }
    }
    return out;
  }

  void module(Line& line) {
    ModuleDecl m;
    std::size_t name_at = line.mark();
    m.name = line.ident("module name");
    if (s_.find_module(m.name)) line.fail_at("duplicate module '" + m.name + "'", name_at);
    if (!line.accept_word("rank")) line.fail("expected 'rank'");
    std::size_t rank_at = line.mark();
    long rank = line.integer("rank");
    if (rank < 1 || rank > 64) line.fail_at("rank must be between 1 and 64", rank_at);
    m.rank = static_cast<std::size_t>(rank);
    if (line.accept_word("shifts")) {
      std::vector<long> sh;
      do sh.push_back(line.integer("shift"));
      while (line.accept(','));
      if (sh.size() != m.rank) line.fail("expected " + std::to_string(m.rank) + " shifts");
      m.shifts = sh;
    }
    std::size_t rel_at = line.mark();
    if (line.accept_word("relations")) {
      while (line.peek() == '[') {
        line.expect('[');
        auto [pos, body] = line.until("]");
        auto row = polynomial_list(line, pos, body);
        if (row.size() != m.rank)
          line.fail_at("relation has " + std::to_string(row.size()) + " entries, expected " + std::to_string(m.rank),
                       pos);
        line.expect(']');
        m.relations.push_back(std::move(row));
      }
      if (m.relations.empty()) line.fail("expected '[' starting a relation");
    }
    auto ambient = FreeModule::make(base_, m.rank);
    std::vector<FreeVector> rels;
    for (const auto& row : m.relations) rels.push_back(FreeVector::from_components(ambient, row));
    try {
      s_.module_values[m.name] = PresentedModule::make(s_.ring, m.rank, rels, m.shifts);
    } catch (const Error& e) {
      line.fail_at(e.what(), rel_at);
    }
    s_.modules.push_back(std::move(m));
  }

  void ideal(Line& line) {
    IdealDecl d;
    std::size_t name_at = line.mark();
    d.name = line.ident("ideal name");
    if (s_.find_ideal(d.name)) line.fail_at("duplicate ideal '" + d.name + "'", name_at);
    line.expect('=');
    auto [pos, body] = line.until("");
    d.gens = polynomial_list(line, pos, body);
    s_.ideals.push_back(std::move(d));
  }

  void task(Line& line) {
    TaskDecl t;
    std::size_t cmd_at = line.mark();
    t.command = line.ident("task command");
    if (!contains(task_commands(), t.command)) line.fail_at("unknown task command '" + t.command + "'", cmd_at);
    while (!line.at_end()) {
      std::size_t at = line.mark();
      std::string word = line.ident("task argument");
      if (!line.accept('=')) {
        if (!t.options.empty()) line.fail_at("positional argument after options", at);
        t.words.push_back(word);
        continue;
      }
      if (!contains(kOptionKeys, word)) line.fail_at("unknown task option '" + word + "'", at);
      std::size_t value_at = line.mark();
      auto [vpos, raw] = line.until(" \t");
      std::string value(raw);
      if (value.empty()) line.fail_at("missing value for '" + word + "'", value_at);
      if (word == "module" && !s_.find_module(value)) line.fail_at("undefined name '" + value + "'", vpos);
      if (contains(kIdealKeys, word) && !s_.find_ideal(value)) line.fail_at("undefined name '" + value + "'", vpos);
      if (contains(kIntegerKeys, word)) {
        long v = 0;
        auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
        if (ec != std::errc() || ptr != value.data() + value.size() || v < 0)
          line.fail_at("expected a non-negative integer for '" + word + "'", vpos);
      }
      if (word == "poly") polynomial(line, vpos, value);
      t.options.emplace_back(word, value);
    }
    if (t.command == "verify") {
      if (t.words.size() != 1) line.fail_at("verify takes one verifier name", cmd_at);
      if (!contains(task_verifiers(), t.words[0])) line.fail_at("unknown verifier '" + t.words[0] + "'", cmd_at);
    } else if (!t.words.empty()) {
      line.fail_at("'" + t.command + "' takes no positional arguments", cmd_at);
    }
    s_.tasks.push_back(std::move(t));
  }

  unsigned degree_cap_;
  SessionFile s_;
  RingPtr base_;
};

}  // namespace

std::optional<std::string> TaskDecl::option(const std::string& key) const {
  for (const auto& [k, v] : options)
    if (k == key) return v;
  return std::nullopt;
}

const ModuleDecl* SessionFile::find_module(const std::string& name) const {
  for (const auto& m : modules)
    if (m.name == name) return &m;
  return nullptr;
}

const IdealDecl* SessionFile::find_ideal(const std::string& name) const {
  for (const auto& d : ideals)
    if (d.name == name) return &d;
  return nullptr;
}

PresentedModulePtr SessionFile::module(const std::string& name) const {
  auto it = module_values.find(name);
  if (it == module_values.end()) throw PreconditionError("undefined module '" + name + "'");
  return it->second;
}

IdealHandle SessionFile::ideal(const std::string& name) const {
  const IdealDecl* d = find_ideal(name);
  if (!d) throw PreconditionError("undefined ideal '" + name + "'");
  return IdealHandle(ring, d->gens);
}

const std::vector<std::string>& task_commands() {
  static const std::vector<std::string> commands = {"gb",      "nf",        "colon",      "dim",  "depth",
                                                    "grade",   "cm",        "unmixed",    "canonical",
                                                    "gorenstein", "link",   "verify",     "oracle-crosscheck"};
  return commands;
}

const std::vector<std::string>& task_verifiers() {
  static const std::vector<std::string> names = {"grade-support",     "ass-and-height",   "canonical-transfer",
                                                 "cm-equivalence",    "sum-and-reduction", "radical-faithful",
                                                 "double-annihilator", "all"};
  return names;
}

SessionFile parse_session(std::string_view text, unsigned degree_cap) { return SessionParser(degree_cap).parse(text); }

std::string print_session(const SessionFile& s) {
  std::ostringstream os;
  os << "format: " << s.format << "\n";
  os << "char " << s.characteristic << "\n";
  os << "vars " << join(s.variables, ", ") << "\n";
  if (s.weights) os << "weights " << join_numbers(*s.weights) << "\n";
  os << "order " << (s.order == OrderKind::grevlex ? "grevlex" : "lex") << "\n";
  if (!s.quotient.empty()) os << "quotient " << join_polys(s.quotient) << "\n";
  for (const auto& m : s.modules) {
    os << "module " << m.name << " rank " << m.rank;
    if (m.shifts) os << " shifts " << join_numbers(*m.shifts);
    if (!m.relations.empty()) {
      os << " relations";
      for (const auto& row : m.relations) os << " [" << join_polys(row) << "]";
    }
    os << "\n";
  }
  for (const auto& d : s.ideals) os << "ideal " << d.name << " =" << (d.gens.empty() ? "" : " " + join_polys(d.gens)) << "\n";
  for (const auto& t : s.tasks) {
    os << "task " << t.command;
    for (const auto& w : t.words) os << " " << w;
    for (const auto& [k, v] : t.options) os << " " << k << "=" << v;
    os << "\n";
  }
  return os.str();
}

bool same_session(const SessionFile& a, const SessionFile& b) {
  auto same_polys = [](const std::vector<Polynomial>& x, const std::vector<Polynomial>& y) {
    return x.size() == y.size() && std::equal(x.begin(), x.end(), y.begin());
  };
  if (a.format != b.format || a.characteristic != b.characteristic || a.variables != b.variables ||
      a.weights != b.weights || a.order != b.order || !same_polys(a.quotient, b.quotient))
    return false;
  if (a.modules.size() != b.modules.size() || a.ideals.size() != b.ideals.size() || a.tasks.size() != b.tasks.size())
    return false;
  for (std::size_t k = 0; k < a.modules.size(); ++k) {
    const auto &x = a.modules[k], &y = b.modules[k];
    if (x.name != y.name || x.rank != y.rank || x.shifts != y.shifts || x.relations.size() != y.relations.size())
      return false;
    for (std::size_t r = 0; r < x.relations.size(); ++r)
      if (!same_polys(x.relations[r], y.relations[r])) return false;
  }
  for (std::size_t k = 0; k < a.ideals.size(); ++k)
    if (a.ideals[k].name != b.ideals[k].name || !same_polys(a.ideals[k].gens, b.ideals[k].gens)) return false;
  for (std::size_t k = 0; k < a.tasks.size(); ++k) {
    const auto &x = a.tasks[k], &y = b.tasks[k];
    if (x.command != y.command || x.words != y.words || x.options != y.options) return false;
  }
  return true;
}

}  // namespace linkagelab
