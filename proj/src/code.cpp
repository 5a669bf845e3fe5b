#include "skewrank/code.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>

#include "skewrank/errors.hpp"

namespace skewrank {

namespace {

void check_shape(const GaloisField& f, const SchemeParams& params, const SkewMat& a) {
  if (a.t != params.t) throw std::invalid_argument("codeword has t=" + std::to_string(a.t) + ", expected " + std::to_string(params.t));
  for (Elem v : a.upper) {
    if (v >= f.q()) throw std::invalid_argument("entry " + std::to_string(v) + " is not in F_" + std::to_string(f.q()));
  }
}

// Rank of a t x t matrix held in a flat buffer, destroyed in the process.
int flat_rank(const GaloisField& f, Elem* m, int t) {
  int r = 0;
  for (int c = 0; c < t && r < t; ++c) {
    int piv = r;
    while (piv < t && m[piv * t + c] == 0) ++piv;
    if (piv == t) continue;
    if (piv != r) {
      for (int j = 0; j < t; ++j) std::swap(m[piv * t + j], m[r * t + j]);
    }
    const Elem inv = f.inv(m[r * t + c]);
    for (int i = r + 1; i < t; ++i) {
      const Elem v = m[i * t + c];
      if (v == 0) continue;
      const Elem factor = f.neg(f.mul(v, inv));
      for (int j = c; j < t; ++j) m[i * t + j] = f.add(m[i * t + j], f.mul(factor, m[r * t + j]));
    }
    ++r;
  }
  return r;
}

int fast_skew_rank(const GaloisField& f, const Row& upper, int t, std::vector<Elem>& buf) {
  buf.assign(static_cast<size_t>(t) * static_cast<size_t>(t), 0);
  size_t k = 0;
  for (int i = 0; i < t; ++i) {
    for (int j = i + 1; j < t; ++j, ++k) {
      buf[static_cast<size_t>(i * t + j)] = upper[k];
      buf[static_cast<size_t>(j * t + i)] = f.neg(upper[k]);
    }
  }
  const int r = flat_rank(f, buf.data(), t);
  if (r % 2 != 0) throw std::logic_error("alternating matrix of odd rank " + std::to_string(r));
  return r / 2;
}

std::uint64_t checked_count(long q, int k, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (int i = 0; i < k; ++i) {
    if (total > budget / static_cast<std::uint64_t>(q)) {
      throw BudgetExceeded("enumerating " + std::to_string(q) + "^" + std::to_string(k) +
                           " codewords exceeds the budget of " + std::to_string(budget));
    }
    total *= static_cast<std::uint64_t>(q);
  }
  return total;
}

// Counts weights for coefficient vectors with lexicographic index in [begin, end).
std::vector<std::uint64_t> count_range(const LinearCode& c, std::uint64_t begin, std::uint64_t end) {
  const GaloisField& f = c.field();
  const auto q = static_cast<std::uint64_t>(f.q());
  const int k = c.dimension();
  const int t = c.params().t;
  const size_t N = upper_size(t);
  std::vector<std::uint64_t> counts(static_cast<size_t>(c.params().n) + 1, 0);
  if (begin >= end) return counts;

  std::vector<Elem> digit(static_cast<size_t>(k), 0);
  std::uint64_t v = begin;
  for (int i = k - 1; i >= 0; --i) {
    digit[static_cast<size_t>(i)] = static_cast<Elem>(v % q);
    v /= q;
  }
  // partial[l] = sum_{i<l} digit_i * basis_i.
  std::vector<Row> partial(static_cast<size_t>(k) + 1, Row(N, 0));
  for (int l = 0; l < k; ++l) {
    partial[static_cast<size_t>(l) + 1] = partial[static_cast<size_t>(l)];
    axpy(f, partial[static_cast<size_t>(l) + 1], digit[static_cast<size_t>(l)], c.basis()[static_cast<size_t>(l)].upper);
  }
  std::vector<Elem> buf;
  for (std::uint64_t idx = begin;;) {
    ++counts[static_cast<size_t>(fast_skew_rank(f, partial[static_cast<size_t>(k)], t, buf))];
    if (++idx == end) break;
    int l = k - 1;
    while (digit[static_cast<size_t>(l)] == q - 1) digit[static_cast<size_t>(l--)] = 0;
    ++digit[static_cast<size_t>(l)];
    for (int i = l; i < k; ++i) {
      partial[static_cast<size_t>(i) + 1] = partial[static_cast<size_t>(i)];
      axpy(f, partial[static_cast<size_t>(i) + 1], digit[static_cast<size_t>(i)], c.basis()[static_cast<size_t>(i)].upper);
    }
  }
  return counts;
}

}  // namespace

Integer WeightDist::total() const {
  Integer s = 0;
  for (const auto& c : counts) s += c;
  return s;
}

LinearCode::LinearCode(FieldPtr field, SchemeParams params, std::vector<SkewMat> basis)
    : field_(std::move(field)), params_(params), basis_(std::move(basis)) {
  if (!field_) throw std::invalid_argument("LinearCode: null field");
  if (field_->q() != params_.q) throw std::invalid_argument("LinearCode: field order differs from params.q");
  for (const auto& b : basis_) check_shape(*field_, params_, b);
  if (rank(*field_, coordinates()) != basis_.size()) throw std::invalid_argument("LinearCode: basis is linearly dependent");
}

LinearCode LinearCode::from_rows(FieldPtr field, SchemeParams params, const std::vector<SkewMat>& rows, size_t* dropped) {
  std::vector<SkewMat> basis;
  Matrix echelon;
  for (const auto& r : rows) {
    check_shape(*field, params, r);
    Matrix trial = echelon;
    trial.push_back(r.upper);
    if (rank(*field, trial) > echelon.size()) {
      echelon = std::move(trial);
      basis.push_back(r);
    }
  }
  if (dropped) *dropped = rows.size() - basis.size();
  return LinearCode(std::move(field), params, std::move(basis));
}

LinearCode LinearCode::zero(FieldPtr field, SchemeParams params) { return LinearCode(std::move(field), params, {}); }

LinearCode LinearCode::full(FieldPtr field, SchemeParams params) {
  std::vector<SkewMat> basis;
  const size_t N = upper_size(params.t);
  for (size_t i = 0; i < N; ++i) {
    SkewMat e = SkewMat::zero(params.t);
    e.upper[i] = 1;
    basis.push_back(std::move(e));
  }
  return LinearCode(std::move(field), params, std::move(basis));
}

Matrix LinearCode::coordinates() const {
  Matrix m;
  for (const auto& b : basis_) m.push_back(b.upper);
  return m;
}

bool LinearCode::same_code(const LinearCode& o) const {
  if (!(*field_ == o.field()) || !(params_ == o.params_) || dimension() != o.dimension()) return false;
  Matrix a = coordinates();
  Matrix b = o.coordinates();
  rref(*field_, a);
  rref(*field_, b);
  return a == b;
}

bool LinearCode::contains(const SkewMat& a) const {
  Matrix m = coordinates();
  m.push_back(a.upper);
  return rank(*field_, m) == basis_.size();
}

Elem coordinate_pairing(const GaloisField& f, const SkewMat& a, const SkewMat& b) {
  Elem acc = 0;
  for (size_t i = 0; i < a.upper.size(); ++i) acc = f.add(acc, f.mul(a.upper[i], b.upper[i]));
  return acc;
}

Elem trace_inner_product(const GaloisField& f, const SkewMat& a, const SkewMat& b) {
  Elem acc = 0;
  for (int i = 0; i < a.t; ++i) {
    for (int j = 0; j < a.t; ++j) acc = f.add(acc, f.mul(a.at(f, i, j), b.at(f, i, j)));
  }
  return acc;
}

LinearCode dual(const LinearCode& c) {
  const int t = c.params().t;
  const Matrix ker = kernel(c.field(), c.coordinates(), upper_size(t));
  std::vector<SkewMat> basis;
  for (const auto& r : ker) basis.emplace_back(t, r);
  return LinearCode(c.field_ptr(), c.params(), std::move(basis));
}

WeightDist weight_distribution(const LinearCode& c, const EnumOptions& options) {
  const std::uint64_t total = checked_count(c.params().q, c.dimension(), options.budget);
  unsigned workers = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  // Small jobs are not worth a thread.
  constexpr std::uint64_t kMinPerWorker = 4096;
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(1, total / kMinPerWorker)));

  std::vector<std::vector<std::uint64_t>> partial(workers);
  if (workers == 1) {
    partial[0] = count_range(c, 0, total);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t b = total * w / workers;
      const std::uint64_t e = total * (w + 1) / workers;
      pool.emplace_back([&, w, b, e] { partial[w] = count_range(c, b, e); });
    }
    for (auto& th : pool) th.join();
  }
  WeightDist out{c.params(), std::vector<Integer>(static_cast<size_t>(c.params().n) + 1, 0)};
  for (const auto& p : partial) {
    for (size_t i = 0; i < p.size(); ++i) out.counts[i] += Integer(static_cast<unsigned long>(p[i]));
  }
  return out;
}

std::optional<int> min_distance(const WeightDist& w) {
  for (size_t i = 1; i < w.counts.size(); ++i) {
    if (w.counts[i] != 0) return static_cast<int>(i);
  }
  return std::nullopt;
}

int diameter(const WeightDist& w) {
  for (size_t i = w.counts.size(); i-- > 1;) {
    if (w.counts[i] != 0) return static_cast<int>(i);
  }
  return 0;
}

LinearCode random_code(FieldPtr field, SchemeParams params, int k, std::mt19937_64& rng) {
  const size_t N = upper_size(params.t);
  if (k < 0 || static_cast<size_t>(k) > N) throw std::invalid_argument("random_code: k out of range");
  std::uniform_int_distribution<int> elem(0, static_cast<int>(field->q()) - 1);
  for (;;) {
    std::vector<SkewMat> basis;
    for (int i = 0; i < k; ++i) {
      Row r(N);
      for (auto& v : r) v = static_cast<Elem>(elem(rng));
      basis.emplace_back(params.t, std::move(r));
    }
    Matrix m;
    for (const auto& b : basis) m.push_back(b.upper);
    if (rank(*field, m) == static_cast<size_t>(k)) return LinearCode(field, params, std::move(basis));
  }
}

}  // namespace skewrank
