#include "tuvote/formulate.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace tuvote {
namespace {

void require_non_increasing(const std::vector<Rational>& values, const char* what) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0) throw std::invalid_argument(std::string(what) + " has a negative entry");
    if (i > 0 && values[i] > values[i - 1]) {
      throw std::invalid_argument(std::string(what) + " must be non-increasing");
    }
  }
}

bool plain_identifier(const std::string& s) {
  return std::all_of(s.begin(), s.end(),
                     [](char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; });
}

std::string committee_var_name(const std::vector<std::string>& names, AltIndex c) {
  return "y_" + (plain_identifier(names[c]) ? names[c] : std::to_string(c + 1));
}

void check_committee_size(std::size_t k, std::size_t m) {
  if (k < 1 || k > m) {
    throw std::invalid_argument("committee size " + std::to_string(k) + " outside 1.." + std::to_string(m));
  }
}

// y_c for every alternative plus the cardinality constraint sum y_c = k.
void add_committee_block(IPInstance& inst, const std::vector<std::string>& names, std::size_t k) {
  Constraint card{{}, Sense::eq, Rational(k), "committee_size"};
  for (AltIndex c = 0; c < names.size(); ++c) {
    std::size_t v = inst.add_variable({committee_var_name(names, c), VarRole::committee, c, 0, Rational(1), true});
    card.terms.push_back({v, 1});
  }
  inst.committee_size = k;
  inst.add_constraint(std::move(card));
}

std::string voter_tag(VoterIndex i) { return "v" + std::to_string(i + 1); }

}  // namespace

// ---------------------------------------------------------------------------
// Vectors and rule specs
// ---------------------------------------------------------------------------

ScoringVector::ScoringVector(std::vector<Rational> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("scoring vector is empty");
  require_non_increasing(values_, "scoring vector");
}

ScoringVector ScoringVector::borda(std::size_t m) {
  std::vector<Rational> w;
  for (std::size_t r = 0; r < m; ++r) w.emplace_back(m - r);
  return ScoringVector(std::move(w));
}

ScoringVector ScoringVector::plurality(std::size_t m) {
  std::vector<Rational> w(std::max<std::size_t>(m, 1), Rational(0));
  w[0] = 1;
  return ScoringVector(std::move(w));
}

Rational ScoringVector::at_rank(std::size_t rank) const {
  if (rank < 1) throw std::out_of_range("ranks start at 1");
  return rank <= values_.size() ? values_[rank - 1] : values_.back();
}

std::vector<Rational> ScoringVector::padded(std::size_t m) const {
  std::vector<Rational> out;
  out.reserve(m);
  for (std::size_t r = 1; r <= m; ++r) out.push_back(at_rank(r));
  return out;
}

OwaVector::OwaVector(std::vector<Rational> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("OWA vector is empty");
  require_non_increasing(values_, "OWA vector");
}

OwaVector OwaVector::harmonic(std::size_t k) {
  std::vector<Rational> a;
  for (std::size_t l = 1; l <= k; ++l) a.emplace_back(1, l);
  return OwaVector(std::move(a));
}

OwaVector OwaVector::constant(std::size_t k) { return OwaVector(std::vector<Rational>(k, Rational(1))); }

OwaVector OwaVector::first(std::size_t k) {
  std::vector<Rational> a(k, Rational(0));
  if (k > 0) a[0] = 1;
  return OwaVector(std::move(a));
}

Rational OwaVector::prefix_sum(std::size_t t) const {
  Rational sum = 0;
  for (std::size_t l = 0; l < t && l < values_.size(); ++l) sum += values_[l];
  return sum;
}

std::string RuleSpec::name() const {
  if (std::holds_alternative<CcRule>(rule)) return "cc";
  if (std::holds_alternative<PavRule>(rule)) return "pav";
  return "owa";
}

std::string to_string(Formulation kind) {
  switch (kind) {
    case Formulation::pav: return "pav";
    case Formulation::cc: return "cc";
    case Formulation::owa: return "owa";
    case Formulation::young: return "young";
    case Formulation::egalitarian_cc: return "egalitarian_cc";
    case Formulation::egalitarian_pav: return "egalitarian_pav";
    case Formulation::generic: return "generic";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// IPInstance
// ---------------------------------------------------------------------------

std::size_t IPInstance::add_variable(Variable v, Rational objective_coef) {
  variables.push_back(std::move(v));
  objective.push_back(std::move(objective_coef));
  return variables.size() - 1;
}

void IPInstance::add_constraint(Constraint c) {
  for (const auto& t : c.terms) {
    if (t.var >= variables.size()) throw std::invalid_argument("constraint references an undeclared variable");
  }
  constraints.push_back(std::move(c));
}

Rational IPInstance::evaluate(const std::vector<Rational>& values) const {
  Rational total = 0;
  for (std::size_t j = 0; j < objective.size(); ++j) {
    if (objective[j] != 0) total += objective[j] * values.at(j);
  }
  return total;
}

bool IPInstance::is_feasible(const std::vector<Rational>& values) const {
  if (values.size() != variables.size()) return false;
  for (std::size_t j = 0; j < variables.size(); ++j) {
    if (values[j] < variables[j].lower) return false;
    if (variables[j].upper && values[j] > *variables[j].upper) return false;
  }
  for (const auto& c : constraints) {
    Rational lhs = 0;
    for (const auto& t : c.terms) lhs += t.coef * values[t.var];
    switch (c.sense) {
      case Sense::le: if (lhs > c.rhs) return false; break;
      case Sense::eq: if (lhs != c.rhs) return false; break;
      case Sense::ge: if (lhs < c.rhs) return false; break;
    }
  }
  return true;
}

SignedMatrix IPInstance::constraint_matrix() const {
  SignedMatrix out(constraints.size(), variables.size());
  for (std::size_t r = 0; r < constraints.size(); ++r) {
    for (const auto& t : constraints[r].terms) {
      Rational value = t.coef + out(r, t.var);
      if (value != 0 && value != 1 && value != -1) {
        throw std::invalid_argument("constraint coefficient outside {-1,0,1} in '" + constraints[r].label + "'");
      }
      out.set(r, t.var, value.convert_to<int>());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Formulations
// ---------------------------------------------------------------------------

std::vector<Rational> marginal_weights(const ScoringVector& w, std::size_t m) {
  std::vector<Rational> padded = w.padded(m);
  require_non_increasing(padded, "scoring vector");
  std::vector<Rational> out(m);
  for (std::size_t r = 0; r < m; ++r) out[r] = r + 1 < m ? padded[r] - padded[r + 1] : padded[r];
  return out;
}

IPInstance pav_ip(const ApprovalProfile& profile, const OwaVector& alpha, std::size_t k) {
  const std::size_t m = profile.num_alternatives();
  check_committee_size(k, m);
  if (alpha.size() != k) throw std::invalid_argument("OWA vector length must equal the committee size");

  IPInstance inst;
  inst.kind = Formulation::pav;
  inst.sense = ObjectiveSense::maximize;
  inst.alternatives = profile.alternatives();
  inst.num_voters = profile.num_voters();
  add_committee_block(inst, profile.alternatives(), k);

  for (VoterIndex i = 0; i < profile.num_voters(); ++i) {
    Constraint row{{}, Sense::le, 0, "approvals_" + voter_tag(i)};
    for (std::size_t l = 1; l <= k; ++l) {
      std::string name = "x_" + std::to_string(i + 1) + "_" + std::to_string(l);
      std::size_t v = inst.add_variable({name, VarRole::point, i, 0, Rational(1), true}, alpha.values()[l - 1]);
      row.terms.push_back({v, 1});
    }
    for (AltIndex c : profile.ballot(i)) row.terms.push_back({c, -1});
    inst.add_constraint(std::move(row));
  }
  return inst;
}

IPInstance cc_ip(const Profile& profile, const ScoringVector& w, std::size_t k) {
  const std::size_t m = profile.num_alternatives();
  check_committee_size(k, m);
  const std::vector<Rational> marginal = marginal_weights(w, m);

  IPInstance inst;
  inst.kind = Formulation::cc;
  inst.sense = ObjectiveSense::maximize;
  inst.alternatives = profile.alternatives();
  inst.num_voters = profile.num_voters();
  add_committee_block(inst, profile.alternatives(), k);

  // Point (i, r) is earned iff some member has rank_i <= r.
  for (VoterIndex i = 0; i < profile.num_voters(); ++i) {
    const WeakOrder& v = profile.voter(i);
    for (std::size_t r = 1; r <= m; ++r) {
      std::string name = "x_" + std::to_string(i + 1) + "_" + std::to_string(r);
      std::size_t x = inst.add_variable({name, VarRole::point, i, 0, Rational(1), true}, marginal[r - 1]);
      Constraint row{{{x, 1}}, Sense::le, 0, "point_" + voter_tag(i) + "_r" + std::to_string(r)};
      for (AltIndex c = 0; c < m; ++c) {
        if (v.rank(c) <= r) row.terms.push_back({c, -1});
      }
      inst.add_constraint(std::move(row));
    }
  }
  return inst;
}

IPInstance owa_ip(const Profile& profile, const ScoringVector& w, const OwaVector& alpha, std::size_t k) {
  const std::size_t m = profile.num_alternatives();
  check_committee_size(k, m);
  if (alpha.size() != k) throw std::invalid_argument("OWA vector length must equal the committee size");
  const std::vector<Rational> marginal = marginal_weights(w, m);

  IPInstance inst;
  inst.kind = Formulation::owa;
  inst.sense = ObjectiveSense::maximize;
  inst.alternatives = profile.alternatives();
  inst.num_voters = profile.num_voters();
  add_committee_block(inst, profile.alternatives(), k);

  // x_{i,l,r} = 1 iff the committee holds at least l members of rank_i <= r.
  for (VoterIndex i = 0; i < profile.num_voters(); ++i) {
    const WeakOrder& v = profile.voter(i);
    for (std::size_t r = 1; r <= m; ++r) {
      Constraint row{{}, Sense::le, 0, "points_" + voter_tag(i) + "_r" + std::to_string(r)};
      for (std::size_t l = 1; l <= k; ++l) {
        std::string name = "x_" + std::to_string(i + 1) + "_" + std::to_string(l) + "_" + std::to_string(r);
        Rational coef = alpha.values()[l - 1] * marginal[r - 1];
        std::size_t x = inst.add_variable({name, VarRole::point, i, 0, Rational(1), true}, coef);
        row.terms.push_back({x, 1});
      }
      for (AltIndex c = 0; c < m; ++c) {
        if (v.rank(c) <= r) row.terms.push_back({c, -1});
      }
      inst.add_constraint(std::move(row));
    }
  }
  return inst;
}

IPInstance young_ip(const Profile& profile, AltIndex target) {
  const std::size_t m = profile.num_alternatives();
  if (target >= m) throw std::invalid_argument("target alternative out of range");

  IPInstance inst;
  inst.kind = Formulation::young;
  inst.sense = ObjectiveSense::minimize;
  inst.alternatives = profile.alternatives();
  inst.num_voters = profile.num_voters();
  for (VoterIndex i = 0; i < profile.num_voters(); ++i) {
    inst.add_variable({"d_" + std::to_string(i + 1), VarRole::deletion, i, 0, Rational(1), true}, 1);
  }
  for (AltIndex b = 0; b < m; ++b) {
    if (b == target) continue;
    long long rhs = profile.majority_margin(b, target) + 1;
    Constraint row{{}, Sense::ge, Rational(rhs), "beat_" + profile.name(b)};
    if (rhs <= 0) row.label += ":redundant";
    for (VoterIndex i = 0; i < profile.num_voters(); ++i) {
      if (profile.voter(i).prefers(b, target)) row.terms.push_back({i, 1});
    }
    inst.add_constraint(std::move(row));
  }
  return inst;
}

IPInstance committee_ip(const RuleSpec& spec, const Profile& profile) {
  if (const auto* cc = std::get_if<CcRule>(&spec.rule)) return cc_ip(profile, cc->w, spec.k);
  if (const auto* owa = std::get_if<OwaRule>(&spec.rule)) return owa_ip(profile, owa->w, owa->alpha, spec.k);
  throw std::invalid_argument("PAV needs approval ballots");
}

IPInstance committee_ip(const RuleSpec& spec, const ApprovalProfile& profile) {
  if (const auto* pav = std::get_if<PavRule>(&spec.rule)) return pav_ip(profile, pav->alpha, spec.k);
  return committee_ip(spec, profile.to_profile());
}

IPInstance egalitarian_feasibility_ip(const Profile& profile, const ScoringVector& w, std::size_t k,
                                      const Rational& level) {
  const std::size_t m = profile.num_alternatives();
  check_committee_size(k, m);
  if (level < 0) throw std::invalid_argument("egalitarian level must be non-negative");
  const std::vector<Rational> padded = w.padded(m);

  IPInstance inst;
  inst.kind = Formulation::egalitarian_cc;
  inst.sense = ObjectiveSense::maximize;
  inst.alternatives = profile.alternatives();
  inst.num_voters = profile.num_voters();
  add_committee_block(inst, profile.alternatives(), k);

  // Deepest rank whose score still reaches the level.
  std::size_t depth = 0;
  while (depth < m && padded[depth] >= level) ++depth;

  for (VoterIndex i = 0; i < profile.num_voters(); ++i) {
    if (depth == 0) {
      inst.add_constraint({{}, Sense::ge, 1, "unreachable_" + voter_tag(i)});
      continue;
    }
    Constraint row{{}, Sense::ge, 1, "represented_" + voter_tag(i)};
    for (AltIndex c = 0; c < m; ++c) {
      if (profile.voter(i).rank(c) <= depth) row.terms.push_back({c, 1});
    }
    inst.add_constraint(std::move(row));
  }
  return inst;
}

IPInstance egalitarian_feasibility_ip(const ApprovalProfile& profile, const OwaVector& alpha, std::size_t k,
                                      const Rational& level) {
  const std::size_t m = profile.num_alternatives();
  check_committee_size(k, m);
  if (alpha.size() != k) throw std::invalid_argument("OWA vector length must equal the committee size");
  if (level < 0) throw std::invalid_argument("egalitarian level must be non-negative");

  IPInstance inst;
  inst.kind = Formulation::egalitarian_pav;
  inst.sense = ObjectiveSense::maximize;
  inst.alternatives = profile.alternatives();
  inst.num_voters = profile.num_voters();
  add_committee_block(inst, profile.alternatives(), k);

  // Fewest approved members whose prefix sum reaches the level.
  std::optional<std::size_t> needed;
  for (std::size_t t = 0; t <= k; ++t) {
    if (alpha.prefix_sum(t) >= level) {
      needed = t;
      break;
    }
  }
  for (VoterIndex i = 0; i < profile.num_voters(); ++i) {
    if (!needed) {
      inst.add_constraint({{}, Sense::ge, 1, "unreachable_" + voter_tag(i)});
      continue;
    }
    Constraint row{{}, Sense::ge, Rational(*needed), "approved_" + voter_tag(i)};
    for (AltIndex c : profile.ballot(i)) row.terms.push_back({c, 1});
    inst.add_constraint(std::move(row));
  }
  return inst;
}

IPInstance relax_point_integrality(IPInstance instance) {
  for (auto& v : instance.variables) {
    if (v.role == VarRole::point) v.integral = false;
  }
  return instance;
}

ExtractedSolution extract_solution(const IPInstance& instance, const std::vector<Rational>& values,
                                   const std::optional<Rational>& reported_objective) {
  if (values.size() != instance.variables.size()) {
    throw ExtractionError("assignment has " + std::to_string(values.size()) + " values for " +
                          std::to_string(instance.variables.size()) + " variables");
  }
  std::vector<AltIndex> committee;
  std::vector<VoterIndex> deleted;
  bool has_committee = false, has_deletions = false;
  for (std::size_t j = 0; j < values.size(); ++j) {
    const Variable& v = instance.variables[j];
    if (v.integral && !is_integer(values[j])) {
      throw ExtractionError("variable " + v.name + " is fractional (" + to_string(values[j]) + ")");
    }
    if (v.role == VarRole::committee) {
      has_committee = true;
      if (values[j] != 0 && values[j] != 1) throw ExtractionError("committee variable " + v.name + " is not 0/1");
      if (values[j] == 1) committee.push_back(v.subject);
    } else if (v.role == VarRole::deletion) {
      has_deletions = true;
      if (values[j] != 0 && values[j] != 1) throw ExtractionError("deletion variable " + v.name + " is not 0/1");
      if (values[j] == 1) deleted.push_back(v.subject);
    }
  }
  if (!instance.is_feasible(values)) throw ExtractionError("assignment violates the instance");

  ExtractedSolution out;
  out.objective = instance.evaluate(values);
  if (reported_objective && *reported_objective != out.objective) {
    throw ExtractionError("objective mismatch: reported " + to_string(*reported_objective) + ", recomputed " +
                          to_string(out.objective));
  }
  if (has_committee) {
    if (instance.committee_size && committee.size() != *instance.committee_size) {
      throw ExtractionError("committee has " + std::to_string(committee.size()) + " members, expected " +
                            std::to_string(*instance.committee_size));
    }
    std::sort(committee.begin(), committee.end());
    out.committee = std::move(committee);
  }
  if (has_deletions) {
    std::sort(deleted.begin(), deleted.end());
    out.deleted_voters = std::move(deleted);
  }
  return out;
}

// ---------------------------------------------------------------------------
// LP text
// ---------------------------------------------------------------------------

namespace {

std::string linear_expression(const std::vector<Term>& terms, const IPInstance& inst) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const Rational& coef = terms[k].coef;
    if (k == 0) out += coef < 0 ? "- " : "";
    else out += coef < 0 ? " - " : " + ";
    out += to_string(Rational(abs(coef))) + " " + inst.variables[terms[k].var].name;
  }
  return out;
}

}  // namespace

std::string to_lp_format(const IPInstance& inst) {
  std::string out = "\\ " + to_string(inst.kind) + " instance: " + std::to_string(inst.variables.size()) +
                    " variables, " + std::to_string(inst.constraints.size()) + " constraints\n";
  out += inst.sense == ObjectiveSense::maximize ? "Maximize\n" : "Minimize\n";
  std::vector<Term> objective;
  for (std::size_t j = 0; j < inst.objective.size(); ++j) {
    if (inst.objective[j] != 0) objective.push_back({j, inst.objective[j]});
  }
  out += " obj: " + linear_expression(objective, inst) + "\n";

  out += "Subject To\n";
  for (const auto& c : inst.constraints) {
    const char* op = c.sense == Sense::le ? "<=" : c.sense == Sense::eq ? "=" : ">=";
    out += " " + c.label + ": " + linear_expression(c.terms, inst) + " " + op + " " + to_string(c.rhs) + "\n";
  }

  out += "Bounds\n";
  for (const auto& v : inst.variables) {
    out += " " + to_string(v.lower) + " <= " + v.name;
    if (v.upper) out += " <= " + to_string(*v.upper);
    out += "\n";
  }

  std::string generals;
  for (const auto& v : inst.variables) {
    if (v.integral) generals += " " + v.name + "\n";
  }
  if (!generals.empty()) out += "General\n" + generals;
  out += "End\n";
  return out;
}

}  // namespace tuvote
