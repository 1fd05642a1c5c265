#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hardylab/projections.hpp"
#include "hardylab/theta.hpp"

namespace hardylab {

enum class Truth { kTrue, kFalse, kVacuous };

std::string to_string(Truth value);

/// One computed side of an equivalence: its truth value at the stated
/// threshold plus the raw residual so borderline cases stay auditable.
struct ConditionOutcome {
  Truth value = Truth::kVacuous;
  double residual = 0.0;
  double threshold = 0.0;
  std::string note;
};

/// Result of one theorem check.  `consistent` is true when every non-vacuous
/// condition in the equivalence class carries the same truth value (vacuous
/// conditions count as true); a false flag means the computation contradicts
/// the theorem and is treated as a defect.
struct Verdict {
  std::string check;
  bool applicable = true;
  std::string skip_reason;
  std::vector<std::pair<std::string, ConditionOutcome>> conditions;
  bool consistent = true;
  std::vector<std::string> notes;

  std::optional<Truth> shared_truth() const;
  const ConditionOutcome* find(const std::string& name) const;
};

/// Tolerances shared by every check of a scenario.
struct ToleranceSet {
  double residual = kResidualTol;
  double rank = kRankTol;
  double identity = kIdentityTol;
};

/// A fully built scenario: boxes, multiplier, family and masks.
struct ScenarioInstance {
  BoxTruncation full_box;      // n variables (only when a seq is present)
  BoxTruncation family_box;    // family's own box
  std::optional<InnerSeq> seq; // terms on the leading seq_vars variables
  int seq_vars = 1;
  ProjectionFamily family;
  ToleranceSet tol;
  InteriorMask full_mask;      // on full_box
  InteriorMask family_mask;    // on family_box
};

/// Tail/head spaces S_j of the family in the orientation that matches the
/// declared direction of the paired inner sequence (tails for decreasing,
/// heads for increasing).
std::vector<Subspace> sequence_spaces(const ProjectionFamily& family, SeqDirection direction);

/// Certificate for the projection-family lemma: (i) every tail doubly
/// commuting, (ii) tail-compressed cross terms vanish, (iii) member-compressed
/// cross terms vanish.  Tails must be invariant first; otherwise the lemma
/// does not apply and the verdict is skipped with reason "hypothesis failed".
Verdict check_lemma31(const ProjectionFamily& family, double tol, const InteriorMask& mask);

/// Invariance transfer for a decreasing chain: range(Theta) invariant on the
/// full box iff every tail S_j is invariant on the family box.  Also records
/// the multiplier isometry certificate.
Verdict check_thm32a(const ScenarioInstance& sc);

/// Four-way equivalence for a decreasing chain (requires the invariance
/// transfer to hold on both sides first): (i) Rudin-type representation with
/// an increasing chain, (ii) tails doubly commuting, (iii)/(iv) compressed
/// cross terms vanish.  A candidate chain, when provided, certifies (i) by
/// direct comparison; otherwise generators are extracted from the tails.
Verdict check_thm32b(const ScenarioInstance& sc,
                     const std::optional<InnerSeq>& candidate_phis);

/// Mirror statements for an increasing chain with head spaces: the
/// invariance transfer plus, when it holds on both sides, the Rudin-type
/// representation paired with a decreasing chain on the remaining variables.
Verdict check_thm33(const ScenarioInstance& sc,
                    const std::optional<InnerSeq>& candidate_psis);

/// Invariance transfer for multi-variable terms (k leading variables).
Verdict check_remark_k(const ScenarioInstance& sc);

/// Orthonormalized model of the Rudin-type span
/// \/ _j  first_j H^2(box of leading vars) (x) second_j H^2(remaining box).
/// The two chains must have opposite directions.
Subspace build_rudin(const BoxTruncation& full_box, const InnerSeq& first_chain,
                     const InnerSeq& second_chain, int split, double tau_rank = kRankTol);

/// Projection of the orthogonal-sum form: sum_j (band of chain step j) (x)
/// (tail/head space S_j); equal to the Rudin span's projection on the box.
Matrix rudin_direct_sum_projection(const BoxTruncation& full_box, const InnerSeq& first_chain,
                                   const ProjectionFamily& family, int split,
                                   double tau_rank = kRankTol);

/// Data for the unitary-equivalence check: two Rudin scenarios whose
/// remaining-variable chains both start at the constant 1, plus an optional
/// witness eta(z_1) and a monomial search bound.
struct Thm41Instance {
  BoxTruncation full_box;
  InnerSeq z1_chain;        // decreasing, one variable
  InnerSeq rest_chain;      // increasing, first term == 1
  InnerSeq z1_chain_tilde;
  InnerSeq rest_chain_tilde;
  std::optional<InnerFunction1D> eta;
  int max_m = 3;
  ToleranceSet tol;
};

struct EtaSearchResult {
  bool found = false;
  int m = 0;
  bool swapped = false;  // true when S_tilde = z_1^m S instead of S = z_1^m S_tilde
};

/// Smallest m <= max_m with P_S equal to P_{z_1^m S_tilde} on the interior,
/// searched in both directions.  Not finding one does not refute equivalence;
/// the search class is restricted to monomials.
EtaSearchResult find_eta_monomial(const Subspace& s, const Subspace& s_tilde, int max_m,
                                  double tol);

Verdict check_thm41(const Thm41Instance& inst);

}  // namespace hardylab
