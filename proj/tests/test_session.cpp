#include <doctest.h>

#include <random>

#include "linkagelab/homological.hpp"
#include "linkagelab/session.hpp"

using namespace linkagelab;

namespace {

const char* kNode = R"(format: 1
# node
char 2
vars x, y
order grevlex
quotient x*y
module R rank 1
module line rank 1 relations [x]
ideal a = x
ideal b = y
ideal zero =
task link module=R a=a b=b i=zero
task verify grade-support module=line a=a b=b
)";

void check_error(const std::string& text, const std::string& message, int line, int column) {
  try {
    parse_session(text);
    FAIL("no error for: " << text);
  } catch (const ParseError& e) {
    CHECK(e.message() == message);
    CHECK(e.line() == line);
    CHECK(e.column() == column);
  }
}

}  // namespace

TEST_CASE("session file with a node ring") {
  auto s = parse_session(kNode);
  CHECK(s.characteristic == 2);
  CHECK(s.variables == std::vector<std::string>{"x", "y"});
  CHECK(s.ring->relations().size() == 1);
  CHECK(s.modules.size() == 2);
  CHECK(s.module("line")->relations().size() == 1);
  CHECK(s.ideal("zero").is_zero());
  CHECK(s.ideal("a").contains(s.ideal("a")));
  REQUIRE(s.tasks.size() == 2);
  CHECK(s.tasks[0].command == "link");
  CHECK(s.tasks[0].option("i") == std::optional<std::string>("zero"));
  CHECK(s.tasks[1].words == std::vector<std::string>{"grade-support"});
}

TEST_CASE("pretty printing round trips") {
  auto s = parse_session(kNode);
  std::string text = print_session(s);
  auto t = parse_session(text);
  CHECK(same_session(s, t));
  CHECK(print_session(t) == text);
}

TEST_CASE("empty task list is valid") {
  auto s = parse_session("format: 1\nchar 3\nvars x\n");
  CHECK(s.tasks.empty());
  CHECK(s.ring->is_polynomial_ring());
}

TEST_CASE("session diagnostics carry line and column") {
  check_error("format: 1\nchar 4\n", "characteristic must be prime", 2, 6);
  check_error("char 2\n", "expected 'format: 1' header", 1, 1);
  check_error("format: 2\n", "unsupported format version 2", 1, 9);
  check_error("format: 1\nchar 2\nvars x, y\nideal a = x + 1\n", "generator is not weighted-homogeneous: x + 1", 4, 11);
  check_error("format: 1\nchar 2\nvars x, y\nideal a = x + q\n", "unknown variable 'q'", 4, 15);
  check_error("format: 1\nchar 2\nvars x\ntask link a=a\n", "undefined name 'a'", 4, 13);
  check_error("format: 1\nchar 2\nvars x\nmodule M rank 2 relations [x]\n", "relation has 1 entries, expected 2", 4, 28);
  check_error("format: 1\nchar 2\nvars x\nideal a = x\nvars y\n", "ring settings must precede quotient, modules, ideals and tasks", 5,
              1);
  check_error("format: 1\nchar 2\nvars x, x\n", "duplicate variable 'x'", 3, 9);
  check_error("format: 1\nchar 2\nvars x, y-z\n", "variable names may not contain '-'", 3, 9);
  check_error("format: 1\nchar 2\nvars x\nfrobnicate\n", "unknown statement 'frobnicate'", 4, 1);
  check_error("format: 1\nchar 2\nvars x\ntask verify nonsense\n", "unknown verifier 'nonsense'", 4, 6);
  check_error("format: 1\nideal a = x\n", "'char' must be declared first", 2, 1);
  check_error("format: 1\nchar 2\nvars x, y\nmodule M rank 2 relations [x, y^2] [y, y]\n",
              "module presentation is not homogeneous for any choice of generator degrees", 4, 17);
}

TEST_CASE("weighted sessions check homogeneity against the weights") {
  auto s = parse_session("format: 1\nchar 5\nvars x, y, z\nweights 3, 4, 5\nquotient x*z - y^2, x^2*y - z^2, x^3 - y*z\n");
  CHECK(s.ring->relations().size() == 3);
  check_error("format: 1\nchar 5\nvars x, y\nweights 1, 2\nideal a = x^2 + x*y\n",
              "generator is not weighted-homogeneous: x^2 + x*y", 5, 11);
}

TEST_CASE("random sessions round trip") {
  std::mt19937_64 rng(7);
  const std::vector<Coeff> primes = {2, 3, 5, 7, 101};
  for (int round = 0; round < 40; ++round) {
    Coeff p = primes[rng() % primes.size()];
    std::size_t n = 1 + rng() % 4;
    std::vector<std::string> names;
    for (std::size_t k = 0; k < n; ++k) names.push_back(std::string(1, static_cast<char>('a' + k)) + "v");
    std::vector<int> w;
    for (std::size_t k = 0; k < n; ++k) w.push_back(1 + static_cast<int>(rng() % 3));
    Ring::Options o;
    o.weights = w;
    auto base = Ring::make(p, names, o);

    std::string text = "format: 1\nchar " + std::to_string(p) + "\nvars ";
    for (std::size_t k = 0; k < n; ++k) text += (k ? ", " : "") + names[k];
    text += "\nweights ";
    for (std::size_t k = 0; k < n; ++k) text += (k ? ", " : "") + std::to_string(w[k]);
    text += "\n";
    if (rng() % 2) text += "order lex\n";
    text += "quotient " + Polynomial::variable(base, 0, 3).to_string() + "\n";
    text += "module F rank 2 relations [" + Polynomial::variable(base, 0).to_string() + ", 0]\n";
    std::size_t ideals = rng() % 3;
    for (std::size_t k = 0; k < ideals; ++k) {
      std::string gens;
      for (int g = 0; g < 2; ++g) {
        Polynomial f = random_form(rng, base, 2 + static_cast<long>(rng() % 4));
        if (f.is_zero()) continue;
        gens += (gens.empty() ? "" : ", ") + f.to_string();
      }
      text += "ideal i" + std::to_string(k) + " = " + gens + "\n";
    }
    if (ideals > 0) text += "task grade module=F a=i0\n";
    auto s = parse_session(text);
    auto t = parse_session(print_session(s));
    INFO(text);
    CHECK(same_session(s, t));
    CHECK(print_session(t) == print_session(s));
  }
}
