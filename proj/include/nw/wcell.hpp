#pragma once
// W_{r,n}(u) realized on the direct sum of seminormal representations:
// word evaluation, numeric rank, r-regular monomials, and the cellular
// elements C^{(f,lambda)} built from E^f and M_st.

#include "nw/combinat.hpp"
#include "nw/diagrams.hpp"
#include "nw/linalg.hpp"
#include "nw/params.hpp"
#include "nw/seminormal.hpp"

#include <vector>

#include <json.hpp>

namespace nw {

struct RegularMonomial {
  std::vector<int> alpha, beta;
  BrauerDiagram gamma;

  /// X^alpha B_gamma X^beta with B_gamma = word_for_diagram(gamma).
  GeneratorWord word() const;
  nlohmann::json to_json() const;
};

/// All r-regular monomials: diagrams in enumeration order, then alpha, then
/// beta lexicographically.
std::vector<RegularMonomial> enumerate_r_regular(int r, int n);
bool is_r_regular(const RegularMonomial& m, int r);
int degree(const RegularMonomial& m);

/// Block-diagonal realization over every shape of updown tableaux of length n.
class Realization {
 public:
  using Value = std::vector<SparseMatrix<Real>>;  // one matrix per block

  /// Builds every block at the current mpfr precision.
  Realization(int n, const ParamSet& ps);

  int n() const { return n_; }
  const ParamSet& params() const { return ps_; }
  const std::vector<SeminormalRep>& blocks() const { return reps_; }
  /// Sum of block dimensions.
  int total_dim() const;
  /// Sum of squared block dimensions (the length of vectorize()).
  int vector_dim() const;

  Value identity() const;
  Value zero() const;
  Value letter(const Letter& l) const;
  Value evaluate(const GeneratorWord& w) const;
  Value evaluate(const WordProduct& p) const;
  std::vector<Real> vectorize(const Value& v) const;

 private:
  int n_;
  ParamSet ps_;
  std::vector<SeminormalRep> reps_;
};

Realization::Value value_mul(const Realization::Value& a, const Realization::Value& b);
Realization::Value value_axpy(const Realization::Value& a, const Real& c, const Realization::Value& b);
Realization::Value value_transpose(const Realization::Value& a);
/// Frobenius norm over all blocks.
Real value_norm(const Realization::Value& a);

/// Rank with singular-value threshold 2^(-p/2) * sigma_max at the current precision p.
NumericRank rank_of_vectors(const std::vector<std::vector<Real>>& rows);
NumericRank rank_of(const std::vector<GeneratorWord>& words, const Realization& R);
NumericRank rank_of(const std::vector<WordProduct>& products, const Realization& R);
nlohmann::json rank_report(int count, const NumericRank& nr);

/// One element (t, kappa, d) of delta(f, lambda).
struct CellIndex {
  UpDownTableau t;     // standard tableau of shape lambda
  std::vector<int> kappa;  // length n, nonzero only at n-1, n-3, ..., n-2f+1
  Perm d;              // coset representative in D_f
  nlohmann::json to_json() const;
};

/// E_{n-1} E_{n-3} ... E_{n-2f+1}.
GeneratorWord ef_word(int n, int f);
/// X_{n-1}^kappa_{n-1} X_{n-3}^kappa_{n-3} ... (decreasing index).
GeneratorWord kappa_word(const std::vector<int>& kappa);
std::vector<std::vector<int>> kappa_set(int r, int n, int f);
std::vector<CellIndex> delta_set(int r, int n, int f, const Multipartition& lambda);
/// #T^std(lambda) * r^f * n! / ((n-2f)! 2^f f!).
BigInt delta_count(int r, int n, int f, const Multipartition& lambda);
/// Sum over f and lambda of (#delta(f, lambda))^2.
BigInt cellular_count(int r, int n);

/// M_st = S_{d(s)^-1} prod_{c=2}^r prod_{i <= a_{c-1}} (X_i - u_c) sum_{w in S_lambda} S_w S_{d(t)},
/// embedded in W_{r,n} through the first |lambda| strands.
WordProduct m_word(int n, const Multipartition& lambda, const UpDownTableau& s, const UpDownTableau& t,
                   const std::vector<Rational>& u);

/// S_e^* X^rho E^f M_st X^kappa S_d for left = (s, rho, e) and right = (t, kappa, d).
WordProduct cellular_element(int n, int f, const Multipartition& lambda, const CellIndex& left, const CellIndex& right,
                             const std::vector<Rational>& u);

struct CellularWord {
  int f;
  Multipartition lambda;
  int left, right;  // positions in delta_set(r, n, f, lambda)
  WordProduct product;
};
std::vector<CellularWord> all_cellular_words(int r, int n, const std::vector<Rational>& u);

struct CellularRankReport {
  BigInt count;   // sum of (#delta)^2
  BigInt target;  // r^n (2n-1)!!
  int words = 0;
  NumericRank rank;
  bool pass() const;
  nlohmann::json to_json() const;
};
/// Requires the current mpfr precision set to ps.precision_bits.
CellularRankReport cellular_rank_check(int r, int n, const ParamSet& ps);

struct StarReport {
  Real word_transpose;   // max over words of |evaluate(w*) - evaluate(w)^T|
  Real swapped_pairs;    // max over pairs of |evaluate(C_LR^*) - evaluate(C_RL)|, all blocks
  Real swapped_pairs_top;  // same, restricted to blocks of size |lambda| >= n - 2f
};
StarReport cellular_star_check(const Realization& R, const std::vector<CellularWord>& words);

/// max |E^f M_st - M_st E^f| over all f, lambda, s, t.
Real ef_commutation_residual(const Realization& R);

/// On the block of each lambda with |lambda| = n - 2f:
/// C_{(s,0,1)(t,0,1)} C_{(v,0,1)(s,0,1)} = omega_0^f <m_t, m_v> C_{(s,0,1)(s,0,1)},
/// with the pairing computed in the Hecke algebra H_{r,n-2f}. Returns the max residual.
Real hecke_compatibility_residual(const Realization& R, int fmax);

}  // namespace nw
