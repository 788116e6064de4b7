#include "linkagelab/ring.hpp"

#include <algorithm>
#include <set>

namespace linkagelab {

RingPtr Ring::make(Coeff p, std::vector<std::string> names, Options opts) {
  if (p < 2 || p >= (1U << 16) || !fp::is_prime(p)) throw PreconditionError("characteristic must be prime");
  if (names.size() > kMaxVars) throw StructuralError("at most 16 variables are supported");
  std::set<std::string> seen(names.begin(), names.end());
  if (seen.size() != names.size()) throw StructuralError("duplicate variable name");
  if (opts.elimination_block > names.size()) throw StructuralError("elimination block larger than ring");
  if (opts.weights.empty()) opts.weights.assign(names.size(), 1);
  if (opts.weights.size() != names.size()) throw StructuralError("weight vector length mismatch");
  if (std::any_of(opts.weights.begin(), opts.weights.end(), [](int w) { return w <= 0; }))
    throw PreconditionError("weights must be positive");

  auto r = std::shared_ptr<Ring>(new Ring());
  r->p_ = p;
  r->names_ = std::move(names);
  r->weights_ = opts.weights;
  r->order_ = opts.order;
  r->elim_ = opts.elimination_block;
  r->degree_cap_ = opts.degree_cap;
  r->opts_ = std::move(opts);
  return r;
}

int Ring::variable_index(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

RingPtr Ring::with_tag_variables(std::size_t count) const {
  if (elim_ != 0) throw StructuralError("ring already carries an elimination block");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) names.push_back("_t" + std::to_string(i));
  names.insert(names.end(), names_.begin(), names_.end());
  Options o = opts_;
  o.elimination_block = count;
  o.weights.assign(count, 1);
  o.weights.insert(o.weights.end(), weights_.begin(), weights_.end());
  return make(p_, std::move(names), std::move(o));
}

RingPtr Ring::with_degree_cap(unsigned cap) const {
  Options o = opts_;
  o.degree_cap = cap;
  return make(p_, names_, std::move(o));
}

RingPtr Ring::without_elimination() const {
  Options o = opts_;
  o.elimination_block = 0;
  return make(p_, names_, std::move(o));
}

bool Ring::same_as(const Ring& o) const noexcept {
  return p_ == o.p_ && names_ == o.names_ && order_ == o.order_ && elim_ == o.elim_ && weights_ == o.weights_;
}

}  // namespace linkagelab
