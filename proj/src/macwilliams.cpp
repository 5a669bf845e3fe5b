#include "skewrank/macwilliams.hpp"

#include <future>
#include <stdexcept>

#include "skewrank/errors.hpp"
#include "skewrank/homopoly.hpp"
#include "skewrank/krawtchouk.hpp"

namespace skewrank {

namespace {

void check_input(const WeightDist& w, const Integer& code_size) {
  if (w.counts.size() != static_cast<size_t>(w.params.n) + 1) {
    throw std::invalid_argument("distribution needs n+1 = " + std::to_string(w.params.n + 1) + " entries, got " +
                                std::to_string(w.counts.size()));
  }
  for (const auto& c : w.counts) {
    if (c < 0) throw std::invalid_argument("distribution entries must be nonnegative");
  }
  if (code_size <= 0) throw std::invalid_argument("code size must be positive");
  if (w.total() != code_size) {
    throw std::invalid_argument("distribution sums to " + w.total().get_str() + " but the code size is " +
                                code_size.get_str());
  }
}

WeightDist finish(const SchemeParams& params, const std::vector<Rational>& scaled, const Integer& code_size,
                  const char* route) {
  WeightDist out{params, {}};
  for (size_t i = 0; i < scaled.size(); ++i) {
    const Rational v = scaled[i] / code_size;
    if (!is_integer(v) || v < 0) {
      throw InconsistentDistribution(std::string(route) + ": dual entry " + std::to_string(i) + " is " + v.get_str() +
                                     ", not a nonnegative integer");
    }
    out.counts.push_back(v.get_num());
  }
  return out;
}

void compare(const char* name, const WeightDist& expected, const WeightDist& got, std::vector<std::string>& out) {
  for (size_t i = 0; i < expected.counts.size(); ++i) {
    const Integer g = i < got.counts.size() ? got.counts[i] : Integer(0);
    if (g != expected.counts[i]) {
      out.push_back(std::string(name) + "[" + std::to_string(i) + "] = " + g.get_str() + ", enumeration gives " +
                    expected.counts[i].get_str());
    }
  }
}

}  // namespace

WeightDist transform_matrix(const WeightDist& w, const Integer& code_size) {
  check_input(w, code_size);
  const auto P = p_matrix(w.params);
  const size_t n1 = w.counts.size();
  std::vector<Rational> acc(n1, 0);
  for (size_t x = 0; x < n1; ++x) {
    for (size_t k = 0; k < n1; ++k) acc[k] += Rational(w.counts[x] * P.entries[x][k]);
  }
  return finish(w.params, acc, code_size, "transform_matrix");
}

WeightDist transform_functional(const WeightDist& w, const Integer& code_size) {
  check_input(w, code_size);
  const long q = w.params.q;
  std::vector<Rational> cs(w.counts.begin(), w.counts.end());
  const HPoly enumerator = HPoly::from_rationals(q, cs);
  const HPoly image = skew_q_transform(enumerator, mu(q), nu(q));
  return finish(w.params, coefficients_at(image, w.params.m), code_size, "transform_functional");
}

VerifyReport verify_code(const LinearCode& c, const EnumOptions& options) {
  const LinearCode d = dual(c);
  // The two enumerations are independent; run the dual's alongside.
  auto dual_enum = std::async(std::launch::async, [&] { return weight_distribution(d, options); });
  VerifyReport r;
  r.w = weight_distribution(c, options);
  r.code_size = c.size();
  r.dual_size = d.size();
  r.dual_enumerated = dual_enum.get();
  r.size_product_ok = r.code_size * r.dual_size == c.params().space_size();
  if (!r.size_product_ok) r.mismatches.push_back("|C| |C^perp| != q^{mn}");
  try {
    r.dual_matrix = transform_matrix(r.w, r.code_size);
    compare("matrix", r.dual_enumerated, r.dual_matrix, r.mismatches);
  } catch (const InconsistentDistribution& e) {
    r.mismatches.push_back(e.what());
  }
  try {
    r.dual_functional = transform_functional(r.w, r.code_size);
    compare("functional", r.dual_enumerated, r.dual_functional, r.mismatches);
  } catch (const InconsistentDistribution& e) {
    r.mismatches.push_back(e.what());
  }
  return r;
}

}  // namespace skewrank
