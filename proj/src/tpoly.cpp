#include "mcqc/tpoly.hpp"

#include <sstream>

namespace mcqc {

int TSpace::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i) {
    if (names[i] == name) return i;
  }
  return -1;
}

TSpacePtr TSpace::couplings(const std::string& stem, int count, int cutoff) {
  std::vector<std::string> names;
  std::vector<int> weights;
  for (int k = 1; k <= count; ++k) {
    names.push_back(stem + std::to_string(k));
    weights.push_back(1);
  }
  return make(std::move(names), std::move(weights), cutoff);
}

TSpacePtr TSpace::make(std::vector<std::string> names, std::vector<int> weights, int cutoff) {
  if (names.size() != weights.size() || static_cast<int>(names.size()) > kMaxVars) {
    throw Error(ErrorKind::ConfigError, "coupling space needs matching names/weights and at most 8 variables");
  }
  for (int w : weights) {
    if (w < 1) throw Error(ErrorKind::ConfigError, "coupling weights must be positive");
  }
  if (cutoff < 0 || cutoff > 200) throw Error(ErrorKind::ConfigError, "coupling cutoff out of range");
  auto s = std::make_shared<TSpace>();
  s->names = std::move(names);
  s->weights = std::move(weights);
  s->cutoff = cutoff;
  return s;
}

TPoly::TPoly(const Scalar& c) {
  if (sgn(c) != 0) terms_.emplace(0, c);
}

TPoly TPoly::variable(const TSpacePtr& space, int index, const Scalar& coeff, int power) {
  TPoly p;
  p.space_ = space;
  if (index < 0 || index >= space->size()) throw Error(ErrorKind::ConfigError, "coupling index out of range");
  Monomial m = static_cast<Monomial>(power) << (8 * index);
  if (sgn(coeff) != 0 && p.degree_of(m) <= space->cutoff) p.terms_.emplace(m, coeff);
  return p;
}

TPoly TPoly::constant(const TSpacePtr& space, const Scalar& c) {
  TPoly p(c);
  p.space_ = space;
  return p;
}

bool TPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Scalar TPoly::constant_term() const {
  auto it = terms_.find(0);
  return it == terms_.end() ? Scalar(0) : it->second;
}

Scalar TPoly::coefficient(const std::vector<int>& exponents) const {
  Monomial m = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) m |= static_cast<Monomial>(exponents[i]) << (8 * i);
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

int TPoly::degree_of(Monomial m) const {
  if (!space_) return 0;
  int d = 0;
  for (int i = 0; i < space_->size(); ++i) d += exponent(m, i) * space_->weights[i];
  return d;
}

int TPoly::valuation() const {
  int v = kUnbounded;
  for (const auto& [m, c] : terms_) v = std::min(v, degree_of(m));
  return v;
}

TSpacePtr TPoly::merge(const TSpacePtr& a, const TSpacePtr& b) {
  if (!a) return b;
  if (!b || a == b) return a;
  if (a->names != b->names || a->weights != b->weights) {
    throw Error(ErrorKind::Precondition, "mixing coupling polynomials from different spaces");
  }
  return a->cutoff <= b->cutoff ? a : b;
}

void TPoly::drop_zeros() {
  const int cut = cutoff();
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (sgn(it->second) == 0 || (cut != kUnbounded && degree_of(it->first) > cut)) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

TPoly& TPoly::operator+=(const TPoly& o) {
  space_ = merge(space_, o.space_);
  for (const auto& [m, c] : o.terms_) terms_[m] += c;
  drop_zeros();
  return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
  space_ = merge(space_, o.space_);
  for (const auto& [m, c] : o.terms_) terms_[m] -= c;
  drop_zeros();
  return *this;
}

TPoly operator-(const TPoly& a) {
  TPoly r = a;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
  TPoly r;
  r.space_ = TPoly::merge(a.space_, b.space_);
  if (a.terms_.empty() || b.terms_.empty()) return r;
  if (a.is_constant() && b.is_constant()) {
    r.terms_.emplace(0, a.terms_.begin()->second * b.terms_.begin()->second);
    return r;
  }
  int cut = r.cutoff();
  for (const auto& [ma, ca] : a.terms_) {
    int da = r.degree_of(ma);
    if (da > cut) continue;
    for (const auto& [mb, cb] : b.terms_) {
      if (da + r.degree_of(mb) > cut) continue;
      r.terms_[ma + mb] += ca * cb;
    }
  }
  r.drop_zeros();
  return r;
}

TPoly operator*(TPoly a, const Scalar& c) {
  if (sgn(c) == 0) {
    a.terms_.clear();
    return a;
  }
  for (auto& [m, x] : a.terms_) x *= c;
  return a;
}

TPoly TPoly::derivative(int var) const {
  TPoly r;
  r.space_ = space_;
  if (!space_) return r;
  auto reduced = std::make_shared<TSpace>(*space_);
  reduced->cutoff = std::max(0, space_->cutoff - space_->weights[var]);
  r.space_ = reduced;
  for (const auto& [m, c] : terms_) {
    int e = exponent(m, var);
    if (e == 0) continue;
    Monomial nm = m - (Monomial(1) << (8 * var));
    if (r.degree_of(nm) > reduced->cutoff) continue;
    r.terms_[nm] += c * e;
  }
  r.drop_zeros();
  return r;
}

TPoly TPoly::zero_out(const std::vector<int>& vars) const {
  TPoly r;
  r.space_ = space_;
  for (const auto& [m, c] : terms_) {
    bool keep = true;
    for (int v : vars) keep = keep && exponent(m, v) == 0;
    if (keep) r.terms_.emplace(m, c);
  }
  return r;
}

std::string TPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << mcqc::to_string(c) << ")";
    if (!space_) continue;
    for (int i = 0; i < space_->size(); ++i) {
      int e = exponent(m, i);
      if (e == 0) continue;
      os << "*" << space_->names[i];
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

TPoly tpoly_exp(const TPoly& p) {
  if (sgn(p.constant_term()) != 0) {
    throw Error(ErrorKind::NonZeroConstantTerm, "exp of a coupling polynomial needs a zero constant term");
  }
  TPoly result = TPoly::constant(p.space(), Scalar(1));
  if (p.is_zero()) return result;
  int v = p.valuation();
  int steps = p.cutoff() / v;
  TPoly term = result;
  for (int n = 1; n <= steps; ++n) {
    term = term * p * Scalar(1, n);
    if (term.is_zero()) break;
    result += term;
  }
  return result;
}

}  // namespace mcqc
