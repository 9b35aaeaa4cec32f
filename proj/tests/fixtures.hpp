#pragma once
// Small explicit modules shared by the unit tests and the acceptance run.

#include "nw/seminormal.hpp"

#include <utility>

namespace nw::fixtures {

using QSparse = SparseMatrix<Rational>;

inline QSparse dense2(Rational a, Rational b, Rational c, Rational d) {
  return QSparse::from_dense({{a, b}, {c, d}});
}

/// S = eps, E = 0, X_1 = u_i, X_2 = u_i + eps.
inline GeneratorMatrices<Rational> one_dim(const Rational& eps, const Rational& ui) {
  GeneratorMatrices<Rational> m;
  m.n = 2;
  m.S = {QSparse::from_dense({{eps}})};
  m.E = {QSparse(1, 1)};
  m.X = {QSparse::from_dense({{ui}}), QSparse::from_dense({{ui + eps}})};
  return m;
}

/// E = 0, X_1 = diag(u_i, u_j), X_2 = diag(u_j, u_i), S = [[-1, b], [c, 1]] / (u_i - u_j)
/// with bc = (u_i - u_j)^2 - 1 unless c is given.
inline GeneratorMatrices<Rational> two_dim(const Rational& ui, const Rational& uj, const Rational& b) {
  const Rational d = ui - uj;
  const Rational c = (d * d - 1) / b;
  GeneratorMatrices<Rational> m;
  m.n = 2;
  m.S = {dense2(-1 / d, b / d, c / d, 1 / d)};
  m.E = {QSparse(2, 2)};
  m.X = {dense2(ui, 0, 0, uj), dense2(uj, 0, 0, ui)};
  return m;
}

/// omega_0 = 1, omega_1 = 0, omega_{a+2} = omega_{a+1}/2 - omega_a/16.
inline std::vector<Rational> recursive_omega(int N) {
  std::vector<Rational> omega{Rational(1), Rational(0)};
  for (int a = 0; a + 2 <= N; ++a) omega.push_back(omega[a + 1] / 2 - omega[a] / 16);
  return omega;
}

/// The two-dimensional module at u = (1/4, 1/4) where X_1 - 1/4 is nilpotent.
inline std::pair<ParamSet, GeneratorMatrices<Rational>> nilpotent_module() {
  ParamSet ps = ParamSet::user_supplied({Rational(1, 4), Rational(1, 4)}, recursive_omega(12));
  GeneratorMatrices<Rational> m;
  m.n = 2;
  m.E = {dense2(1, 0, 0, 0)};
  m.S = {dense2(1, 0, 0, -1)};
  m.X = {dense2(0, Rational(1, 4), Rational(-1, 4), Rational(1, 2)),
         dense2(0, Rational(-1, 4), Rational(1, 4), Rational(-1, 2))};
  return {ps, m};
}

template <class T>
bool all_zero(const RelationResiduals<T>& res) {
  for (const auto& [fam, v] : res.family)
    if (v != 0) return false;
  return !res.family.empty();
}

}  // namespace nw::fixtures
