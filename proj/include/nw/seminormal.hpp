#pragma once
// Seminormal representations Delta(lambda): exact coefficient tables,
// generator matrices, a relation checker for arbitrary matrix modules,
// and exact checks of the coefficient identities.

#include "nw/combinat.hpp"
#include "nw/linalg.hpp"
#include "nw/params.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace nw {

/// Generator matrices S_1..S_{n-1}, E_1..E_{n-1}, X_1..X_n (0-based vectors).
template <class T>
struct GeneratorMatrices {
  int n = 0;
  std::vector<SparseMatrix<T>> S, E, X;
  int dim() const { return X.empty() ? 0 : X[0].rows(); }
};

/// Per (k, t) coefficients; outer index k-1, inner index the basis position.
struct SemiCoeffs {
  std::vector<std::vector<std::optional<Rational>>> e_diag;
  std::vector<std::vector<std::optional<Rational>>> a;
  std::vector<std::vector<std::optional<Rational>>> b_sq;
  std::vector<std::vector<int>> partner;  // index of S_k t, or -1
  std::vector<std::vector<std::vector<int>>> klass;  // indices of the ~k class when t_{k-1} = t_{k+1}
};

struct SeminormalRep {
  Multipartition lambda;
  int n = 0;
  unsigned precision_bits = 256;
  std::vector<UpDownTableau> basis;
  std::vector<std::vector<Rational>> contents;  // contents[i][k-1] = c_{t_i}(k)
  SemiCoeffs coeffs;
  GeneratorMatrices<Real> mats;

  int dim() const { return static_cast<int>(basis.size()); }
  int index_of(const UpDownTableau& t) const;
  nlohmann::json to_json() const;
};

/// (2c - (-1)^r) prod (c + c(alpha))/(c - c(alpha)) over the nodes alpha of
/// t_{k-1} with c(alpha) != c, where c = c_t(k). Requires t_{k-1} = t_{k+1}.
Rational e_diag(const UpDownTableau& t, int k, const ParamSet& ps);

/// Throws std::domain_error naming the violated clause unless u is generic
/// and in the real regime where nonnegative square roots are valid.
void require_real_regime(const ParamSet& ps, int n);

/// Builds Delta(lambda) at the current mpfr precision (set ps.precision_bits
/// with a PrecisionGuard around the whole computation).
SeminormalRep build_rep(const Multipartition& lambda, int n, const ParamSet& ps);

template <class T>
struct RelationResiduals {
  std::map<std::string, T> family;  // family name -> max residual norm
};

/// Residuals of every defining relation, the unwrapping relations for
/// 1 <= a <= unwrap_max, and the cyclotomic relation in X_1.
template <class T>
RelationResiduals<T> relation_residuals(const GeneratorMatrices<T>& m, const ParamSet& ps, int unwrap_max);

/// Residuals of E_k X_k^a E_k = omega_k^(a) E_k with omega_k^(a) read from the
/// series W_k(y, t) on each basis vector, for 0 <= a <= amax.
RelationResiduals<Real> exe_residuals(const SeminormalRep& rep, const ParamSet& ps, int amax);

struct FamilyVerdict {
  Real max_residual;
  Real tolerance;  // the tolerance at the largest dimension seen
  bool pass = true;
};

struct RelationReport {
  std::map<std::string, FamilyVerdict> families;
  bool all_pass() const;
};

/// Relative tolerance 2^-(p-40); a family passes when residual < tol * dim.
Real relation_tolerance(unsigned precision_bits);

/// Runs every relation family (and the exe family) over the given representations.
RelationReport verify_relations(const std::vector<SeminormalRep>& reps, const ParamSet& ps);

/// Checks a user-supplied module; exact when T = Rational.
template <class T>
RelationResiduals<T> check_module(const GeneratorMatrices<T>& m, const ParamSet& ps);

struct Tally {
  int instances = 0;
  int failures = 0;
};

struct IdentityReport {
  std::map<std::string, Tally> checks;
  bool all_ok() const;
};

/// Exact checks of the coefficient identities over all tableaux of shape lambda.
IdentityReport check_identities(const Multipartition& lambda, int n, const ParamSet& ps);

struct BranchingReport {
  std::map<Multipartition, std::vector<int>> blocks;
  Real off_block_residual;  // max off-block entry of generators below n-1
  Real block_residual;      // max deviation of each block from Delta(mu) at n-1
  bool sizes_match = true;  // block sizes equal the updown counts at n-1
};

/// Groups basis indices by t_{n-1} and compares the restriction with Delta(mu).
BranchingReport branching_blocks(const SeminormalRep& rep, const ParamSet& ps);

/// Numerical dimension of the commutant of all generator matrices.
int commutant_dimension(const SeminormalRep& rep);

}  // namespace nw
