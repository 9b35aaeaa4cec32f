#pragma once
// Degenerate cyclotomic Hecke algebra H_{r,n}(u): exact arithmetic on the
// normal-form basis Y^alpha T_w (0 <= alpha_i < r), the Murphy basis, Gram
// matrices of cell modules, the gamma recurrence and semisimplicity.

#include "nw/combinat.hpp"
#include "nw/linalg.hpp"
#include "nw/numeric.hpp"
#include "nw/perm.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include <json.hpp>

namespace nw {

class HeckeAlgebra {
 public:
  /// Keys are alpha_index * n! + perm_index, alpha_index = sum alpha_j r^(j-1).
  using Element = std::map<long, Rational>;

  HeckeAlgebra(int r, int n, std::vector<Rational> u);

  int r() const { return r_; }
  int n() const { return n_; }
  const std::vector<Rational>& u() const { return u_; }
  long dim() const { return alpha_count_ * nfact_; }
  const std::vector<Perm>& perms() const { return perms_; }
  int perm_index(const Perm& w) const;

  long key(const std::vector<int>& alpha, int perm_idx) const;
  std::pair<std::vector<int>, int> decode(long key) const;

  Element one() const;
  Element T(int i) const;
  Element Tw(const Perm& w) const;
  Element Y(int j) const;
  Element monomial(const std::vector<int>& alpha, const Perm& w) const;

  Element mul(const Element& a, const Element& b) const;
  Element left_T(int i, const Element& a) const;
  Element left_Y(int j, const Element& a) const;
  Element right_Tw(const Element& a, int perm_idx) const;
  /// The anti-involution fixing every T_i and Y_j.
  Element star(const Element& a) const;

  static Element add(const Element& a, const Element& b);
  static Element sub(const Element& a, const Element& b);
  static Element scale(const Element& a, const Rational& c);
  static void accumulate(Element& into, long key, const Rational& c);

  nlohmann::json to_json(const Element& a) const;

  /// Y_j^r in normal form.
  const Element& power_r(int j) const;

 private:
  void add_left_Y(int j, long key, const Rational& c, Element& out) const;

  int r_, n_;
  std::vector<Rational> u_;
  long nfact_ = 1;
  long alpha_count_ = 1;
  std::vector<Perm> perms_;
  std::vector<std::vector<int>> words_;          // reduced word per perm index
  std::vector<std::vector<int>> left_simple_;    // [i-1][w] -> index of s_i w
  std::vector<int> inverse_;
  mutable std::mutex cache_mu_;
  mutable std::vector<std::optional<Element>> power_cache_;
};

struct MurphyLabel {
  Multipartition lambda;
  int s;  // index into standard_tableaux(lambda)
  int t;
};

/// m_st = T_{d(s)^-1} u_lambda x_lambda T_{d(t)}.
HeckeAlgebra::Element murphy_m(const HeckeAlgebra& H, const Multipartition& lambda, const UpDownTableau& s,
                               const UpDownTableau& t);

struct MurphyBasis {
  std::vector<MurphyLabel> labels;
  std::vector<HeckeAlgebra::Element> elements;
  std::map<Multipartition, std::vector<UpDownTableau>> tableaux;
  int rank = 0;
  QMatrix inverse;  // rows: monomial coordinates -> Murphy coordinates (valid when full rank)
  int index_of(const Multipartition& lambda, int s, int t) const;
};

MurphyBasis build_murphy_basis(const HeckeAlgebra& H);
std::vector<Rational> coordinates(const HeckeAlgebra& H, const HeckeAlgebra::Element& a);
/// Murphy coordinates of a (requires a full-rank basis).
std::vector<Rational> murphy_coordinates(const HeckeAlgebra& H, const MurphyBasis& mb, const HeckeAlgebra::Element& a);

/// Y_k m_st = c_s(k) m_st + (terms m_vt with v strictly dominating s) mod higher shapes.
bool yk_spectral_check(const HeckeAlgebra& H, const MurphyBasis& mb, const Multipartition& lambda);

/// <m_s, m_t> read from m_{t^lambda s} m_{t t^lambda}.
QMatrix gram_matrix(const HeckeAlgebra& H, const MurphyBasis& mb, const Multipartition& lambda);

struct GammaResult {
  std::vector<Rational> values;  // aligned with standard_tableaux(lambda)
  bool path_independent = true;
  int edges_checked = 0;
};

Rational gamma_top(const Multipartition& lambda, const std::vector<Rational>& u);
/// All gamma_t by the recurrence along S_k edges that descend in dominance,
/// checking every such edge for consistency. Throws std::domain_error if u is
/// not generic for the Hecke algebra.
GammaResult gammas(const Multipartition& lambda, const std::vector<Rational>& u);
/// prod_t gamma_t.
Rational gram_det(const Multipartition& lambda, const std::vector<Rational>& u);

/// u_i - u_j is never an integer d with |d| < n.
bool is_semisimple(int r, int n, const std::vector<Rational>& u);
/// n! prod_{t >= 2} prod_{d=0}^{n-1} (u_1 + d - u_t).
Rational m_lambda_square_scalar(int n, const std::vector<Rational>& u);

/// Dimension of the span reached from 1 by repeated left multiplication by generators.
int closure_dimension(const HeckeAlgebra& H);

/// Numeric realization on the sum of Delta(lambda), |lambda| = n.
struct HeckeRealization {
  int n = 0;
  std::vector<std::pair<int, int>> blocks;  // (offset, size)
  std::vector<SparseMatrix<Real>> T, Y;     // block diagonal
  std::vector<SparseMatrix<Real>> Tw;       // indexed like H.perms()
  SparseMatrix<Real> evaluate(const HeckeAlgebra& H, const HeckeAlgebra::Element& a) const;
  /// Concatenated diagonal blocks.
  std::vector<Real> vectorize(const SparseMatrix<Real>& m) const;
};

/// Needs the current mpfr precision set and u in the real regime.
HeckeRealization build_hecke_realization(const HeckeAlgebra& H);

}  // namespace nw
