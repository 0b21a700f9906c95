#ifndef STEERCERT_SDP_HPP
#define STEERCERT_SDP_HPP

#include <string>
#include <utility>
#include <vector>

#include "steercert/hermitian.hpp"

namespace steercert {

// Block-structured semidefinite programming in standard form:
//
//   optimize   sum_b <C_b, Y_b>
//   subject to sum_b <A_{k,b}, Y_b> = rhs_k   for every equality k
//              Y_b in cone(kind_b)
//
// where <.,.> is the (real) Frobenius pairing. PSD blocks are constrained
// to their cone; free-hermitian blocks are unconstrained Hermitian matrices.

enum class BlockKind { ComplexHermitianPsd, RealSymmetricPsd, FreeHermitian };

struct BlockSpec {
  struct Block {
    std::string label;
    int dim = 0;
    BlockKind kind = BlockKind::ComplexHermitianPsd;
  };

  std::vector<Block> blocks;

  int add(std::string label, int dim, BlockKind kind);
  int index_of(const std::string& label) const;  // -1 if absent
};

/// Linear functional M -> sum_t coeff_t * entry(block_t, row_t, col_t).
/// The per-block coefficient pattern must be Hermitian so that the value is
/// real on Hermitian arguments; add() inserts the conjugate mirror term.
class LinearFunctional {
 public:
  struct Term {
    int block = 0;
    int row = 0;
    int col = 0;
    Complex coeff;
  };

  // Adds coeff*entry(r,c) + conj(coeff)*entry(c,r) for r != c, or the
  // real part at a diagonal position.
  void add(int block, int row, int col, Complex coeff);
  // For tr(K * Y_block) with K Hermitian.
  void add_trace_pair(int block, const Matrix& k);

  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  double evaluate(const std::vector<Matrix>& block_values) const;

 private:
  std::vector<Term> terms_;
};

enum class Sense { Minimize, Maximize };

struct SdpProblem {
  BlockSpec variables;
  LinearFunctional objective;
  Sense sense = Sense::Maximize;
  std::vector<std::pair<LinearFunctional, double>> equalities;

  // Throws std::invalid_argument on malformed data (bad block references,
  // non-finite right-hand sides, dimension violations).
  void validate() const;
};

enum class SolveStatus { Optimal, PrimalInfeasible, DualInfeasible, NumericalFailure };

std::string to_string(SolveStatus status);

struct SolveSettings {
  double tolerance = 1e-8;
  int max_iterations = 200;
  bool keep_trace = false;  // record per-iteration objective/residual history
};

struct IterationStat {
  int iteration = 0;
  double primal_objective = 0.0;
  double dual_objective = 0.0;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  double mu = 0.0;
};

struct SdpSolution {
  SolveStatus status = SolveStatus::NumericalFailure;
  double objective_value = 0.0;
  std::vector<Matrix> block_values;   // aligned with problem blocks
  std::vector<double> dual_values;    // one multiplier per equality
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  double duality_gap = 0.0;
  int iterations = 0;
  std::vector<IterationStat> trace;
};

/// Infeasible-start primal-dual path-following solver (HKM direction with
/// Mehrotra predictor-corrector, dense per-block factorizations).
SdpSolution solve(const SdpProblem& problem, const SolveSettings& settings = {});

/// Replaces every complex Hermitian block H = A + iB by the real symmetric
/// embedding [[A, -B], [B, A]] and rewrites all functionals so their values
/// are preserved exactly.
SdpProblem realify(const SdpProblem& problem);

/// Maps a solution of realify(p) back to block values of p.
std::vector<Matrix> derealify_blocks(const SdpProblem& original,
                                     const std::vector<Matrix>& realified_values);

}  // namespace steercert

#endif  // STEERCERT_SDP_HPP
