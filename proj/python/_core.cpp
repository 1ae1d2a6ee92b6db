#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <variant>

#include "tuvote/cli.hpp"
#include "tuvote/egalitarian.hpp"
#include "tuvote/formulate.hpp"
#include "tuvote/model.hpp"
#include "tuvote/oracle.hpp"
#include "tuvote/simplex.hpp"
#include "tuvote/structure.hpp"

namespace py = pybind11;
using namespace tuvote;

namespace {

using AnyProfile = std::variant<Profile, ApprovalProfile>;

py::object fraction(const Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(to_string(r));
}

std::vector<Rational> rationals_from(const py::object& obj) {
  if (py::isinstance<py::str>(obj)) return parse_rational_list(obj.cast<std::string>());
  std::vector<Rational> out;
  for (auto item : obj) out.push_back(parse_rational(py::str(item).cast<std::string>()));
  return out;
}

ScoringVector weights_from(const py::object& obj, std::size_t m) {
  if (obj.is_none()) return ScoringVector::borda(m);
  if (py::isinstance<py::str>(obj)) {
    auto s = obj.cast<std::string>();
    if (s == "borda") return ScoringVector::borda(m);
    if (s == "plurality" || s == "approval") return ScoringVector::plurality(m);
  }
  return ScoringVector(rationals_from(obj));
}

OwaVector owa_from(const py::object& obj, std::size_t k) {
  if (obj.is_none()) return OwaVector::harmonic(k);
  if (py::isinstance<py::str>(obj)) {
    auto s = obj.cast<std::string>();
    if (s == "harmonic") return OwaVector::harmonic(k);
    if (s == "constant") return OwaVector::constant(k);
    if (s == "first") return OwaVector::first(k);
  }
  return OwaVector(rationals_from(obj));
}

std::size_t alternatives_of(const AnyProfile& p) {
  return std::visit([](const auto& x) { return x.num_alternatives(); }, p);
}

const std::vector<std::string>& names_of(const AnyProfile& p) {
  return std::visit([](const auto& x) -> const std::vector<std::string>& { return x.alternatives(); }, p);
}

RuleSpec rule_from(const AnyProfile& p, const std::string& rule, std::size_t k, const py::object& weights,
                   const py::object& owa) {
  const std::size_t m = alternatives_of(p);
  if (rule == "cc") return RuleSpec{CcRule{weights_from(weights, m)}, k};
  if (rule == "pav") return RuleSpec{PavRule{owa_from(owa, k)}, k};
  if (rule == "owa") return RuleSpec{OwaRule{weights_from(weights, m), owa_from(owa, k)}, k};
  throw std::invalid_argument("unknown rule '" + rule + "'");
}

Profile ranked_view(const AnyProfile& p) {
  if (const auto* a = std::get_if<ApprovalProfile>(&p)) return a->to_profile();
  return std::get<Profile>(p);
}

py::list names(const std::vector<std::string>& all, const std::vector<AltIndex>& idx) {
  py::list out;
  for (auto c : idx) out.append(all.at(c));
  return out;
}

py::list voters(const std::vector<VoterIndex>& idx) {
  py::list out;
  for (auto i : idx) out.append(i + 1);
  return out;
}

py::dict solve_dict(const SolveReport& sr) {
  py::dict d;
  d["status"] = to_string(sr.final.status);
  d["lp_integral"] = sr.lp_integral;
  d["lp_objective"] = sr.lp.status == LpStatus::optimal ? fraction(sr.lp.objective) : py::none();
  d["branch_nodes"] = sr.branch_nodes;
  d["pivots"] = sr.total_pivots;
  d["objective"] = sr.extracted ? fraction(sr.extracted->objective) : py::none();
  return d;
}

AnyProfile profile_from(const py::object& obj) {
  if (py::isinstance<Profile>(obj)) return obj.cast<Profile>();
  if (py::isinstance<ApprovalProfile>(obj)) return obj.cast<ApprovalProfile>();
  throw py::type_error("expected a Profile or ApprovalProfile");
}

SignedMatrix matrix_from(const std::vector<std::vector<int>>& rows) { return SignedMatrix(rows); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact committee and Young-score solvers with structure recognition";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Profile>(m, "Profile")
      .def_property_readonly("alternatives", &Profile::alternatives)
      .def_property_readonly("num_voters", &Profile::num_voters)
      .def("rank", [](const Profile& p, std::size_t voter, const std::string& alt) {
        return p.rank_of(voter - 1, p.index_of(alt));
      }, py::arg("voter"), py::arg("alternative"), "1-based voter, class rank of the alternative")
      .def("__str__", [](const Profile& p) { return serialize(p); });

  py::class_<ApprovalProfile>(m, "ApprovalProfile")
      .def_property_readonly("alternatives", &ApprovalProfile::alternatives)
      .def_property_readonly("num_voters", &ApprovalProfile::num_voters)
      .def("__str__", [](const ApprovalProfile& p) { return serialize(p); });

  m.def("parse_profile", [](const std::string& text, const std::string& format) -> py::object {
    if (format == "ranked") return py::cast(parse_ranked_profile(text));
    if (format == "approval") return py::cast(parse_approval_profile(text));
    throw std::invalid_argument("format must be 'ranked' or 'approval'");
  }, py::arg("text"), py::arg("format") = "ranked");

  m.def("generate", [](const std::string& kind, std::size_t alts, std::size_t n, std::uint64_t seed) {
    if (kind == "sp") return serialize(generate_single_peaked(alts, n, seed).profile);
    if (kind == "sc") return serialize(generate_single_crossing(alts, n, seed).profile);
    if (kind == "ci") return serialize(generate_candidate_interval(alts, n, seed).profile);
    if (kind == "ic") return serialize(generate_impartial_culture(alts, n, seed));
    if (kind == "approval") return serialize(generate_random_approval(alts, n, seed));
    throw std::invalid_argument("unknown kind '" + kind + "'");
  }, py::arg("kind"), py::arg("m"), py::arg("n"), py::arg("seed") = 0, "Profile text in the file format");

  m.def("committee", [](const py::object& obj, const std::string& rule, std::size_t k, const py::object& weights,
                        const py::object& owa) {
    AnyProfile p = profile_from(obj);
    RuleSpec spec = rule_from(p, rule, k, weights, owa);
    IPInstance inst = std::visit([&](const auto& x) { return committee_ip(spec, x); }, p);
    SolveReport sr = solve_ip(inst);
    py::dict d = solve_dict(sr);
    d["committee"] = sr.extracted ? py::object(names(names_of(p), *sr.extracted->committee)) : py::none();
    return d;
  }, py::arg("profile"), py::arg("rule") = "cc", py::arg("k") = 1, py::arg("weights") = py::none(),
     py::arg("owa") = py::none());

  m.def("brute_force", [](const py::object& obj, const std::string& rule, std::size_t k, const py::object& weights,
                          const py::object& owa) {
    AnyProfile p = profile_from(obj);
    RuleSpec spec = rule_from(p, rule, k, weights, owa);
    OracleResult res = std::visit([&](const auto& x) { return brute_force_committee(spec, x); }, p);
    py::list argmax;
    for (const auto& c : res.argmax) argmax.append(names(names_of(p), c));
    return py::make_tuple(fraction(res.best_value), argmax);
  }, py::arg("profile"), py::arg("rule") = "cc", py::arg("k") = 1, py::arg("weights") = py::none(),
     py::arg("owa") = py::none(), "(best value, list of optimal committees)");

  m.def("egalitarian", [](const py::object& obj, const std::string& rule, std::size_t k, const py::object& weights,
                          const py::object& owa) {
    AnyProfile p = profile_from(obj);
    RuleSpec spec = rule_from(p, rule, k, weights, owa);
    EgalitarianResult res = std::visit([&](const auto& x) { return egalitarian_solve(spec, x); }, p);
    py::dict d;
    d["level"] = fraction(res.level);
    d["committee"] = names(names_of(p), res.committee);
    d["probes"] = res.probes.size();
    return d;
  }, py::arg("profile"), py::arg("rule") = "cc", py::arg("k") = 1, py::arg("weights") = py::none(),
     py::arg("owa") = py::none());

  m.def("young", [](const py::object& obj, const std::string& candidate) {
    Profile r = ranked_view(profile_from(obj));
    SolveReport sr = solve_ip(young_ip(r, r.index_of(candidate)));
    py::dict d = solve_dict(sr);
    d["deleted_voters"] = sr.extracted ? py::object(voters(*sr.extracted->deleted_voters)) : py::none();
    return d;
  }, py::arg("profile"), py::arg("candidate"));

  m.def("young_bruteforce", [](const py::object& obj, const std::string& candidate) {
    Profile r = ranked_view(profile_from(obj));
    YoungScore ys = young_score_bruteforce(r, r.index_of(candidate));
    return py::make_tuple(ys.score, voters(ys.witness));
  }, py::arg("profile"), py::arg("candidate"), "(score, 1-based voters kept)");

  m.def("single_peaked_axis", [](const Profile& p) -> py::object {
    auto axis = is_single_peaked(p);
    return axis ? py::object(names(p.alternatives(), *axis)) : py::none();
  });
  m.def("single_crossing_ordering", [](const Profile& p) -> py::object {
    auto ordering = is_single_crossing(p);
    return ordering ? py::object(voters(*ordering)) : py::none();
  });
  m.def("candidate_interval_axis", [](const ApprovalProfile& p) -> py::object {
    auto axis = is_candidate_interval(p);
    return axis ? py::object(names(p.alternatives(), *axis)) : py::none();
  });

  m.def("is_totally_unimodular", [](const std::vector<std::vector<int>>& rows, std::size_t budget) {
    return to_string(is_totally_unimodular(matrix_from(rows), budget).verdict);
  }, py::arg("rows"), py::arg("budget") = kDefaultTuRowBudget, "'tu', 'not_tu' or 'budget_exceeded'");

  m.def("has_c1p", [](const std::vector<std::vector<int>>& rows) -> py::object {
    auto order = has_c1p(to_binary(matrix_from(rows)));
    return order ? py::cast(*order) : py::none();
  }, py::arg("rows"), "Column order making every row's ones consecutive, or None");

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "(exit code, stdout, stderr)");
}
