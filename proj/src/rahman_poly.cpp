#include "rahman/rahman_poly.hpp"

#include <stdexcept>
#include <string>

#include "rahman/combinatorics.hpp"
#include "rahman/errors.hpp"
#include "rahman/lattice.hpp"

namespace rahman {

namespace {

// Everything in a summand of P that does not involve the four arguments.
class SeriesWeights {
 public:
  SeriesWeights(const DerivedParams& dp, int N) : N_(N) {
    for (int n = 0; n <= N; ++n) {
      t_.push_back(dp.t.pow(n));
      u_.push_back(dp.u.pow(n));
      v_.push_back(dp.v.pow(n));
      w_.push_back(dp.w.pow(n));
      inv_fact_.push_back(factorial(n).inverse());
      // (-N)_n is nonzero for n <= N.
      inv_minus_N_.push_back(pochhammer(Rational(-N), n).inverse());
    }
  }

  Rational operator()(int i, int j, int k, int l) const {
    return t_[i] * u_[j] * v_[k] * w_[l] * inv_fact_[i] * inv_fact_[j] * inv_fact_[k] *
           inv_fact_[l] * inv_minus_N_[i + j + k + l];
  }

  template <class Visit>
  void for_each_index(Visit&& visit) const {
    for (int i = 0; i <= N_; ++i)
      for (int j = 0; i + j <= N_; ++j)
        for (int k = 0; i + j + k <= N_; ++k)
          for (int l = 0; i + j + k + l <= N_; ++l) visit(i, j, k, l);
  }

 private:
  int N_;
  std::vector<Rational> t_, u_, v_, w_, inv_fact_, inv_minus_N_;
};

std::vector<Rational> shifted_factorials(int arg, int N) {
  std::vector<Rational> out;
  for (int n = 0; n <= N; ++n) out.push_back(pochhammer(Rational(-arg), n));
  return out;
}

// Coefficients of (-x)_n = (-x)(-x+1)...(-x+n-1) as a polynomial in x.
std::vector<Rational> symbolic_shifted_factorial(int n) {
  std::vector<Rational> poly{Rational(1)};
  for (int r = 0; r < n; ++r) {
    std::vector<Rational> next(poly.size() + 1);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k] += poly[k] * Rational(r);
      next[k + 1] -= poly[k];
    }
    poly = std::move(next);
  }
  return poly;
}

std::vector<ModuleOperator> operator_shifted_factorials(const ModuleOperator& X, int N) {
  std::vector<ModuleOperator> out{ModuleOperator::identity(X.basis(), X.degree())};
  const ModuleOperator minus_X = X * Rational(-1);
  for (int n = 1; n <= N; ++n) out.push_back(out.back() * minus_X.shifted(Rational(n - 1)));
  return out;
}

}  // namespace

Rational eval_P(int a, int b, int c, int d, const DerivedParams& dp, int N) {
  if (a < 0 || b < 0 || c < 0 || d < 0) throw std::out_of_range("eval_P: negative argument");
  if (N < 0) throw std::out_of_range("eval_P: negative degree");
  const SeriesWeights weights(dp, N);
  const auto pa = shifted_factorials(a, N), pb = shifted_factorials(b, N);
  const auto pc = shifted_factorials(c, N), pd = shifted_factorials(d, N);
  Rational sum;
  weights.for_each_index([&](int i, int j, int k, int l) {
    const Rational head = pa[i + j] * pb[k + l] * pc[i + k] * pd[j + l];
    if (!head.is_zero()) sum += head * weights(i, j, k, l);
  });
  return sum;
}

void BivariatePoly::add_term(int i, int j, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational BivariatePoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

int BivariatePoly::total_degree() const {
  int deg = 0;
  for (const auto& [key, c] : terms_) deg = std::max(deg, key.first + key.second);
  return deg;
}

Rational BivariatePoly::evaluate(const Rational& x, const Rational& y) const {
  Rational acc;
  for (const auto& [key, c] : terms_) acc += c * x.pow(key.first) * y.pow(key.second);
  return acc;
}

BivariatePoly as_bivariate(int m, int n, const DerivedParams& dp, int N, ArgumentPair pair) {
  if (m < 0 || n < 0 || m + n > N) throw std::out_of_range("as_bivariate: (m, n) outside the lattice");
  const SeriesWeights weights(dp, N);
  const auto pm = shifted_factorials(m, N), pn = shifted_factorials(n, N);
  std::vector<std::vector<Rational>> symbolic;
  for (int q = 0; q <= N; ++q) symbolic.push_back(symbolic_shifted_factorial(q));

  BivariatePoly out;
  weights.for_each_index([&](int i, int j, int k, int l) {
    // cd: scalars (-m)_{i+j} (-n)_{k+l}, symbols (-c)_{i+k} (-d)_{j+l}.
    // ab: symbols (-a)_{i+j} (-b)_{k+l}, scalars (-m)_{i+k} (-n)_{j+l}.
    const bool cd = pair == ArgumentPair::cd;
    const Rational scalar = cd ? pm[i + j] * pn[k + l] : pm[i + k] * pn[j + l];
    if (scalar.is_zero()) return;
    const auto& first = symbolic[cd ? i + k : i + j];
    const auto& second = symbolic[cd ? j + l : k + l];
    const Rational c = scalar * weights(i, j, k, l);
    for (std::size_t x = 0; x < first.size(); ++x)
      for (std::size_t y = 0; y < second.size(); ++y)
        out.add_term(static_cast<int>(x), static_cast<int>(y), c * first[x] * second[y]);
  });
  return out;
}

ModuleOperator eval_P_operator(int m, int n, const ModuleOperator& C, const ModuleOperator& D,
                               const DerivedParams& dp, int N, Slot slot) {
  if (m < 0 || n < 0) throw std::out_of_range("eval_P_operator: negative argument");
  if (C * D != D * C) throw NonCommutingOperators();
  const SeriesWeights weights(dp, N);
  const auto pm = shifted_factorials(m, N), pn = shifted_factorials(n, N);
  const auto opC = operator_shifted_factorials(C, N);
  const auto opD = operator_shifted_factorials(D, N);

  ModuleOperator out(C.basis(), C.degree());
  weights.for_each_index([&](int i, int j, int k, int l) {
    const bool back = slot == Slot::back;
    const Rational scalar = back ? pm[i + j] * pn[k + l] : pm[i + k] * pn[j + l];
    if (scalar.is_zero()) return;
    const ModuleOperator& x = opC[back ? i + k : i + j];
    const ModuleOperator& y = opD[back ? j + l : k + l];
    out += (x * y) * (scalar * weights(i, j, k, l));
  });
  return out;
}

RahmanTable::RahmanTable(const DerivedParams& dp, int N)
    : N_(N), dim_(lattice_size(N)), values_(dim_ * dim_) {
  const auto idx = lattice(N);
  for (const auto& row : idx)
    for (const auto& col : idx)
      values_[slot(row.s, row.t) * dim_ + slot(col.s, col.t)] = eval_P(row.s, row.t, col.s, col.t, dp, N);
}

std::size_t RahmanTable::slot(int a, int b) const { return lattice_position({N_ - a - b, a, b}); }

const Rational& RahmanTable::at(int a, int b, int c, int d) const {
  if (!in_range(a, b, N_) || !in_range(c, d, N_)) {
    throw std::out_of_range("RahmanTable: (" + std::to_string(a) + "," + std::to_string(b) + "," +
                            std::to_string(c) + "," + std::to_string(d) + ") outside the lattice");
  }
  return values_[slot(a, b) * dim_ + slot(c, d)];
}

}  // namespace rahman
