#include "skewrank/lambda_ring.hpp"

#include <sstream>
#include <stdexcept>

namespace skewrank {

LambdaScalar::LambdaScalar(long q, const Rational& constant) : q_(q) {
  if (constant != 0) terms_.emplace(0, constant);
}

LambdaScalar::LambdaScalar(long q, std::map<int, Rational> terms) : q_(q), terms_(std::move(terms)) { prune(); }

LambdaScalar LambdaScalar::monomial(long q, int e, const Rational& c) {
  LambdaScalar s;
  s.q_ = q;
  if (c != 0) s.terms_.emplace(e, c);
  return s;
}

bool LambdaScalar::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rational LambdaScalar::coefficient(int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LambdaScalar::adopt_q(const LambdaScalar& o) {
  if (o.q_ == 0 || o.q_ == q_) return;
  if (q_ == 0) {
    q_ = o.q_;
    return;
  }
  throw std::invalid_argument("LambdaScalar: mismatched q (" + std::to_string(q_) + " vs " + std::to_string(o.q_) + ")");
}

void LambdaScalar::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

LambdaScalar& LambdaScalar::operator+=(const LambdaScalar& o) {
  adopt_q(o);
  for (const auto& [e, c] : o.terms_) terms_[e] += c;
  prune();
  return *this;
}

LambdaScalar& LambdaScalar::operator-=(const LambdaScalar& o) {
  adopt_q(o);
  for (const auto& [e, c] : o.terms_) terms_[e] -= c;
  prune();
  return *this;
}

LambdaScalar& LambdaScalar::operator*=(const LambdaScalar& o) {
  adopt_q(o);
  std::map<int, Rational> out;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) out[ea + eb] += ca * cb;
  }
  terms_ = std::move(out);
  prune();
  return *this;
}

LambdaScalar& LambdaScalar::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LambdaScalar LambdaScalar::operator-() const {
  LambdaScalar r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

std::string LambdaScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << it->second.get_str();
    if (it->first != 0) os << "*Q^" << it->first;
  }
  return os.str();
}

LambdaScalar shift(const LambdaScalar& s, int j) {
  if (j == 0 || s.is_zero()) return s;
  std::map<int, Rational> out;
  for (const auto& [e, c] : s.terms()) out.emplace(e, c * qpow(s.q(), -2L * j * e));
  return LambdaScalar(s.q(), std::move(out));
}

Rational eval_lambda(const LambdaScalar& s, long lambda) {
  Rational r = 0;
  for (const auto& [e, c] : s.terms()) r += c * qpow(s.q(), lambda * e);
  return r;
}

LambdaScalar gamma_lambda(long q, long k) {
  if (k < 0) throw std::invalid_argument("gamma_lambda: k must be >= 0");
  LambdaScalar r(q, Rational(1));
  const LambdaScalar big_q = LambdaScalar::big_q(q);
  for (long i = 0; i < k; ++i) r *= big_q - LambdaScalar(q, Rational(ipow(q, 2 * i)));
  return r;
}

}  // namespace skewrank
