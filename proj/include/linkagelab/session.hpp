#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "linkagelab/quotient.hpp"

namespace linkagelab {

struct ModuleDecl {
  std::string name;
  std::size_t rank = 1;
  std::optional<std::vector<long>> shifts;
  /// Each row has `rank` entries.
  std::vector<std::vector<Polynomial>> relations;
};

struct IdealDecl {
  std::string name;
  std::vector<Polynomial> gens;
};

struct TaskDecl {
  std::string command;
  std::vector<std::string> words;
  std::vector<std::pair<std::string, std::string>> options;

  std::optional<std::string> option(const std::string& key) const;
};

/// Parsed session file. Statements:
///
///   format: 1
///   char 2
///   vars x, y
///   weights 1, 1
///   order grevlex
///   quotient x*y
///   module M rank 1 relations [x]
///   ideal a = x
///   task link module=M a=a b=b i=i
struct SessionFile {
  int format = 1;
  Coeff characteristic = 0;
  std::vector<std::string> variables;
  std::optional<std::vector<int>> weights;
  OrderKind order = OrderKind::grevlex;
  std::vector<Polynomial> quotient;
  std::vector<ModuleDecl> modules;
  std::vector<IdealDecl> ideals;
  std::vector<TaskDecl> tasks;

  QuotientRingPtr ring;
  std::map<std::string, PresentedModulePtr> module_values;

  const ModuleDecl* find_module(const std::string& name) const;
  const IdealDecl* find_ideal(const std::string& name) const;
  PresentedModulePtr module(const std::string& name) const;
  IdealHandle ideal(const std::string& name) const;
};

/// Commands accepted in task statements.
const std::vector<std::string>& task_commands();
/// Verifier names accepted by `verify`.
const std::vector<std::string>& task_verifiers();

/// Throws ParseError with the line and column of the offending token. A
/// nonzero degree cap replaces the ring's default.
SessionFile parse_session(std::string_view text, unsigned degree_cap = 0);
/// Canonical text; parse_session(print_session(s)) equals s.
std::string print_session(const SessionFile& s);

/// Syntactic equality of the declarations and tasks.
bool same_session(const SessionFile& a, const SessionFile& b);

}  // namespace linkagelab
