#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tuvote/model.hpp"
#include "tuvote/rational.hpp"
#include "tuvote/structure.hpp"

namespace tuvote {

// Non-negative, non-increasing scores indexed by rank (w_1 for rank 1).
class ScoringVector {
 public:
  explicit ScoringVector(std::vector<Rational> values);
  static ScoringVector borda(std::size_t m);
  // (1, 0, ..., 0); also the approval reading (1, 0) for dichotomous input.
  static ScoringVector plurality(std::size_t m);

  const std::vector<Rational>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  // Repeats the last entry past the end; ranks are 1-based.
  Rational at_rank(std::size_t rank) const;
  std::vector<Rational> padded(std::size_t m) const;

 private:
  std::vector<Rational> values_;
};

// Non-negative, non-increasing OWA weights of length k.
class OwaVector {
 public:
  explicit OwaVector(std::vector<Rational> values);
  static OwaVector harmonic(std::size_t k);
  static OwaVector constant(std::size_t k);
  // (1, 0, ..., 0) of length k.
  static OwaVector first(std::size_t k);

  const std::vector<Rational>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  // alpha_1 + ... + alpha_t; t = 0 gives 0.
  Rational prefix_sum(std::size_t t) const;

 private:
  std::vector<Rational> values_;
};

struct CcRule {
  ScoringVector w;
};
struct PavRule {
  OwaVector alpha;
};
struct OwaRule {
  ScoringVector w;
  OwaVector alpha;
};

struct RuleSpec {
  std::variant<CcRule, PavRule, OwaRule> rule;
  std::size_t k = 1;

  std::string name() const;
};

enum class VarRole { committee, point, deletion };
enum class Sense { le, eq, ge };
enum class ObjectiveSense { maximize, minimize };

struct Variable {
  std::string name;
  VarRole role = VarRole::point;
  // Alternative index for committee variables, voter index otherwise.
  std::size_t subject = 0;
  Rational lower = 0;
  std::optional<Rational> upper;  // nullopt = +infinity
  bool integral = true;
};

struct Term {
  std::size_t var;
  Rational coef;
};

struct Constraint {
  std::vector<Term> terms;
  Sense sense = Sense::le;
  Rational rhs = 0;
  std::string label;
};

enum class Formulation { pav, cc, owa, young, egalitarian_cc, egalitarian_pav, generic };

struct IPInstance {
  Formulation kind = Formulation::generic;
  ObjectiveSense sense = ObjectiveSense::maximize;
  std::vector<Variable> variables;
  std::vector<Rational> objective;  // one coefficient per variable
  std::vector<Constraint> constraints;
  std::vector<std::string> alternatives;
  std::size_t num_voters = 0;
  std::optional<std::size_t> committee_size;

  std::size_t add_variable(Variable v, Rational objective_coef = 0);
  void add_constraint(Constraint c);
  Rational evaluate(const std::vector<Rational>& values) const;
  // Every constraint and bound holds exactly.
  bool is_feasible(const std::vector<Rational>& values) const;
  // Coefficient matrix over all variables, bounds excluded. Throws if a
  // coefficient falls outside {-1, 0, 1}.
  SignedMatrix constraint_matrix() const;
};

struct ExtractedSolution {
  std::optional<std::vector<AltIndex>> committee;
  std::optional<std::vector<VoterIndex>> deleted_voters;
  Rational objective = 0;
};

class ExtractionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// w'_r = w_r - w_{r+1} for r < m, w'_m = w_m (w padded to length m). Throws
// std::invalid_argument if w increases anywhere.
std::vector<Rational> marginal_weights(const ScoringVector& w, std::size_t m);

IPInstance pav_ip(const ApprovalProfile& profile, const OwaVector& alpha, std::size_t k);
IPInstance cc_ip(const Profile& profile, const ScoringVector& w, std::size_t k);
IPInstance owa_ip(const Profile& profile, const ScoringVector& w, const OwaVector& alpha, std::size_t k);
IPInstance young_ip(const Profile& profile, AltIndex target);

// Committee formulation for a rule spec; PAV needs the approval profile.
IPInstance committee_ip(const RuleSpec& spec, const Profile& profile);
IPInstance committee_ip(const RuleSpec& spec, const ApprovalProfile& profile);

// "Is there a committee whose worst-off voter gets at least L?" CC and PAV
// only. Unreachable thresholds yield an empty constraint 0 >= 1.
IPInstance egalitarian_feasibility_ip(const Profile& profile, const ScoringVector& w, std::size_t k,
                                      const Rational& level);
IPInstance egalitarian_feasibility_ip(const ApprovalProfile& profile, const OwaVector& alpha, std::size_t k,
                                      const Rational& level);

// Copy with integrality dropped on point variables.
IPInstance relax_point_integrality(IPInstance instance);

// Reads the committee or deletion set off an integral assignment and checks it
// against the instance. reported_objective, if given, must match exactly.
ExtractedSolution extract_solution(const IPInstance& instance, const std::vector<Rational>& values,
                                   const std::optional<Rational>& reported_objective = std::nullopt);

// LP-style text: objective, constraints, bounds and integrality sections with
// rationals written as p/q.
std::string to_lp_format(const IPInstance& instance);

std::string to_string(Formulation kind);

}  // namespace tuvote
