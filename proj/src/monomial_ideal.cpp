#include "linkagelab/monomial_ideal.hpp"

#include <algorithm>

namespace linkagelab {

namespace {

std::uint32_t support_mask(const Monomial& m) {
  std::uint32_t s = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] > 0) s |= 1U << i;
  return s;
}

VariablePrime mask_to_prime(std::uint32_t mask, std::size_t n) {
  VariablePrime p;
  for (std::size_t i = 0; i < n; ++i)
    if (mask & (1U << i)) p.push_back(i);
  return p;
}

bool lex_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

bool prime_less(const VariablePrime& a, const VariablePrime& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens) : n_(nvars) {
  if (nvars > kMaxVars) throw StructuralError("too many variables");
  for (const auto& g : gens)
    if (g.size() != nvars) throw StructuralError("monomial length does not match ideal");
  std::sort(gens.begin(), gens.end(), lex_less);
  for (const auto& g : gens) {
    bool redundant = std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) gens_.push_back(g);
  }
}

std::optional<MonomialIdeal> MonomialIdeal::from_polynomials(std::size_t nvars, const std::vector<Polynomial>& gens) {
  std::vector<Monomial> ms;
  for (const auto& f : gens) {
    if (f.is_zero()) continue;
    if (!f.is_monomial()) return std::nullopt;
    ms.push_back(f.leading_monomial());
  }
  return MonomialIdeal(nvars, std::move(ms));
}

bool MonomialIdeal::is_unit() const noexcept {
  return std::any_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.is_one(); });
}

bool MonomialIdeal::contains(const Monomial& m) const noexcept {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

MonomialIdeal MonomialIdeal::colon(const Monomial& m) const {
  std::vector<Monomial> out;
  for (const auto& g : gens_) out.push_back(g / gcd(g, m));
  return MonomialIdeal(n_, std::move(out));
}

std::optional<VariablePrime> MonomialIdeal::as_variable_prime() const {
  VariablePrime p;
  for (const auto& g : gens_) {
    if (g.degree() != 1) return std::nullopt;
    for (std::size_t i = 0; i < n_; ++i)
      if (g[i]) p.push_back(i);
  }
  std::sort(p.begin(), p.end());
  return p;
}

MonomialIdeal MonomialIdeal::operator+(const MonomialIdeal& o) const {
  std::vector<Monomial> g = gens_;
  g.insert(g.end(), o.gens_.begin(), o.gens_.end());
  return MonomialIdeal(n_, std::move(g));
}

bool MonomialIdeal::is_radical() const noexcept {
  for (const auto& g : gens_)
    for (std::size_t i = 0; i < n_; ++i)
      if (g[i] > 1) return false;
  return true;
}

std::vector<VariablePrime> mono_min_primes(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw PreconditionError("the unit ideal has no primes");
  std::size_t n = ideal.nvars();
  std::vector<std::uint32_t> supports;
  for (const auto& g : ideal.gens()) supports.push_back(support_mask(g));
  std::vector<std::uint32_t> masks((std::size_t{1} << n));
  for (std::uint32_t m = 0; m < masks.size(); ++m) masks[m] = m;
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint32_t a, std::uint32_t b) { return __builtin_popcount(a) < __builtin_popcount(b); });
  std::vector<std::uint32_t> found;
  for (std::uint32_t m : masks) {
    bool covers = std::all_of(supports.begin(), supports.end(), [&](std::uint32_t s) { return (s & m) != 0; });
    if (!covers) continue;
    bool minimal = std::none_of(found.begin(), found.end(), [&](std::uint32_t f) { return (f & m) == f; });
    if (minimal) found.push_back(m);
  }
  std::vector<VariablePrime> out;
  for (auto m : found) out.push_back(mask_to_prime(m, n));
  std::sort(out.begin(), out.end(), prime_less);
  return out;
}

std::vector<VariablePrime> mono_ass_primes(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw PreconditionError("the unit ideal has no primes");
  std::size_t n = ideal.nvars();
  std::vector<int> bound(n, 0);
  for (const auto& g : ideal.gens())
    for (std::size_t i = 0; i < n; ++i) bound[i] = std::max(bound[i], static_cast<int>(g[i]));
  std::vector<VariablePrime> out;
  std::vector<int> e(n, 0);
  for (;;) {
    Monomial m(e);
    if (!ideal.contains(m)) {
      auto p = ideal.colon(m).as_variable_prime();
      if (p && std::find(out.begin(), out.end(), *p) == out.end()) out.push_back(*p);
    }
    std::size_t i = 0;
    while (i < n && e[i] == bound[i]) e[i++] = 0;
    if (i == n) break;
    ++e[i];
  }
  std::sort(out.begin(), out.end(), prime_less);
  return out;
}

bool mono_unmixed(const MonomialIdeal& ideal) {
  auto ass = mono_ass_primes(ideal);
  return std::all_of(ass.begin(), ass.end(), [&](const VariablePrime& p) { return p.size() == ass.front().size(); });
}

long mono_dimension(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) return -1;
  auto mins = mono_min_primes(ideal);
  return static_cast<long>(ideal.nvars() - mins.front().size());
}

long mono_dimension(std::size_t nvars, const std::vector<Monomial>& gens) {
  return mono_dimension(MonomialIdeal(nvars, gens));
}

std::string prime_to_string(const VariablePrime& p, const std::vector<std::string>& names) {
  if (p.empty()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + names[p[i]];
  return s + ")";
}

}  // namespace linkagelab
