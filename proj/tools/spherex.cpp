#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "spherex/boundary.hpp"
#include "spherex/catalogue.hpp"
#include "spherex/dual_group.hpp"
#include "spherex/error.hpp"
#include "spherex/io.hpp"
#include "spherex/lfactors.hpp"
#include "spherex/multiplicity.hpp"

using namespace spherex;

namespace {

constexpr int kOk = 0;
constexpr int kValidationFailure = 1;
constexpr int kUsage = 2;
constexpr int kDatumError = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

void emit(const json& j, const std::string& text, const std::string& format) {
  if (format == "json") std::cout << j.dump(2) << "\n";
  else std::cout << text;
}

std::string rational_text(const LaurentRational& f) { return f.to_string(f.has_q_form()); }

int two_s_of(const std::string& s) {
  mpq_class v;
  try {
    v = mpq_class(s);
    v.canonicalize();
  } catch (const std::invalid_argument&) {
    throw UsageError("--s expects a rational number");
  }
  mpq_class twice = 2 * v;
  if (twice.get_den() != 1) throw UsageError("--s must be a half-integer");
  return static_cast<int>(twice.get_num().get_si());
}

SatakeParam chi_of(const std::string& spec, const std::string& q, std::size_t rank) {
  SatakeParam chi = parse_chi(spec, rank);
  if (!q.empty() && q != "formal") {
    try {
      chi.q = std::stol(q);
    } catch (const std::exception&) {
      throw UsageError("--q expects an integer or 'formal'");
    }
    if (*chi.q < 2) throw UsageError("--q must be at least 2");
  }
  return chi;
}

json fans_of(const std::filesystem::path& path) {
  json j = load_json_file(path);
  if (j.contains("fans")) return j.at("fans");
  return json::array();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spherex: combinatorial invariants, dual groups and unramified L-factors of spherical varieties"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string datum_path;
  auto add_datum = [&](CLI::App* sub) { sub->add_option("datum", datum_path, "Datum or catalogue entry (JSON)")->required(); };

  auto* inv = app.add_subcommand("invariants", "Spherical roots, little Weyl group, wavefront");
  add_datum(inv);
  auto* dual = app.add_subcommand("dual-group", "Dual root datum, distinguished morphism, rho_X");
  add_datum(dual);
  auto* bnd = app.add_subcommand("boundary", "Boundary degenerations and transitivity");
  add_datum(bnd);
  std::string theta_spec;
  bnd->add_option("--theta", theta_spec, "Comma separated indices into Delta_X");
  auto* fan = app.add_subcommand("fan", "Fan validation, smooth subdivision and orbit poset");
  add_datum(fan);
  std::string fan_path;
  fan->add_option("--fan", fan_path, "Fan JSON (defaults to the fans of the entry)");

  std::string chi_spec, q_spec = "formal", rep_spec = "ad", s_spec = "0";
  auto* lf = app.add_subcommand("lfactor", "Evaluate L(s, rep, chi)");
  add_datum(lf);
  lf->add_option("--chi", chi_spec, "Satake parameter, e.g. t1=1/2,t2=3 (default formal)");
  lf->add_option("--q", q_spec, "Residue field size or 'formal'");
  lf->add_option("--rep", rep_spec, "ad, rho, or a weight multiset JSON file");
  lf->add_option("--s", s_spec, "Half-integer shift");
  auto* pl = app.add_subcommand("plancherel", "Plancherel density and relative character");
  add_datum(pl);
  pl->add_option("--chi", chi_spec, "Satake parameter");
  pl->add_option("--q", q_spec, "Residue field size or 'formal'");

  std::string places_path, s_list;
  std::size_t bound = 25;
  auto* gl = app.add_subcommand("global", "Partial-product assembly and S-independence");
  add_datum(gl);
  gl->add_option("--places", places_path, "Places JSON")->required();
  gl->add_option("--S", s_list, "Comma separated places in S (default: every split)");
  gl->add_option("--bound", bound, "Number of Euler factors kept in the complement");

  auto* mult = app.add_subcommand("mult", "Multiplicity formulas");
  mult->require_subcommand(1);
  std::string case_path;
  auto* ggp = mult->add_subcommand("ggp", "Gross-Prasad character");
  ggp->add_option("case", case_path)->required();
  auto* prasad = mult->add_subcommand("prasad", "Prasad's conjecture for Galois pairs");
  prasad->add_option("case", case_path)->required();
  auto* bc = mult->add_subcommand("bc", "Base-change degree for unitary periods");
  bc->add_option("case", case_path)->required();

  std::string catalogue_dir;
  auto* val = app.add_subcommand("validate", "Check every catalogue expectation");
  val->add_option("dir", catalogue_dir, "Catalogue directory (default: SPHEREX_CATALOGUE or the shipped one)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*val) {
      auto dir = catalogue_dir.empty() ? default_catalogue_dir() : std::filesystem::path(catalogue_dir);
      ValidationReport r = validate_all(dir);
      emit(r.to_json(), r.to_text(), format);
      return r.failures() ? kValidationFailure : kOk;
    }
    if (*mult) {
      CatalogueEntry e = load_entry(case_path);
      std::string want = *ggp ? "ggp" : *prasad ? "prasad" : "bc";
      if (e.kind != want) throw UsageError("case file is of kind '" + e.kind + "', expected '" + want + "'");
      json out{{"name", e.name}, {"kind", e.kind}};
      std::ostringstream text;
      text << "case: " << e.name << "\n";
      if (want == "ggp") {
        auto M = constituents_from_json(e.body.at("M"));
        auto N = constituents_from_json(e.body.at("N"));
        auto oracle = oracle_from_json(e.body.at("oracle"));
        bool is_char = gp_is_character(M, N, oracle);
        out["is_character"] = is_char;
        text << "character: " << (is_char ? "yes" : "no") << "\n";
        json vals = json::object();
        for (std::size_t mask = 0; mask < (std::size_t{1} << M.size()); ++mask) {
          std::set<std::size_t> s;
          std::string label;
          for (std::size_t i = 0; i < M.size(); ++i)
            if (mask >> i & 1) {
              s.insert(i);
              label += (label.empty() ? "" : "+") + M[i].label;
            }
          int v = gp_character(M, N, oracle, s);
          vals[label.empty() ? "{}" : label] = v;
          text << "chi(" << (label.empty() ? "{}" : label) << ") = " << v << "\n";
        }
        out["left"] = vals;
      } else if (want == "prasad") {
        ComponentGroupDatum cg = component_group_from_json(e.body);
        std::vector<Subgroup> fibers;
        for (const auto& n : e.body.value("fibers", json::array())) fibers.push_back(cg.subgroups.at(n.get<std::string>()));
        for (const auto& [name, rho] : cg.characters) {
          long m = prasad_multiplicity(cg, rho, fibers);
          long fp = fixed_point_multiplicity(cg, rho, fibers);
          out["multiplicity"][name] = m;
          out["fixed_point"][name] = fp;
          text << "m(" << name << ") = " << m << " (fixed points: " << fp << ")\n";
          if (e.body.contains("refined")) {
            auto ref = prasad_refined(cg, rho, refined_from_json(e.body.at("refined"), cg));
            for (const auto& [beta, v] : ref) {
              out["refined"][name][std::to_string(beta)] = v.get_str();
              text << "  beta " << beta << ": " << v.get_str() << "\n";
            }
          }
        }
        if (!cg.characters.empty()) {
          long st = stable_multiplicity(cg, fibers);
          out["stable"] = st;
          text << "stable multiplicity: " << st << "\n";
        }
        if (e.body.contains("weighted")) {
          json w{{"weighted_count", compute_invariant(e, "weighted_count")},
                 {"recorded_stable", compute_invariant(e, "recorded_stable")}};
          out["weighted"] = w;
          text << "degree-weighted count: " << w["weighted_count"] << ", recorded: " << w["recorded_stable"] << "\n";
        }
      } else {
        BcDegree r = bc_degree(bc_from_json(e.body.at("constituents")));
        out["deg"] = r.deg.get_si();
        out["fiber"] = r.fiber.get_si();
        out["m_qs"] = r.m_qs.get_si();
        out["m_nqs"] = r.m_nqs.get_si();
        out["m_X"] = r.m_X.get_si();
        text << "deg BC = " << r.deg << ", |BC^-1| = " << r.fiber << ", m_qs = " << r.m_qs << ", m_nqs = " << r.m_nqs
             << ", m_X = " << r.m_X << "\n";
      }
      ValidationReport rep = validate_entry(e);
      if (!rep.checks.empty()) {
        out["validation"] = rep.to_json();
        text << rep.to_text();
      }
      emit(out, text.str(), format);
      return rep.failures() ? kValidationFailure : kOk;
    }

    SphericalDatum d = load_datum(datum_path);
    if (*inv) {
      ReportSections s{true, false, false, false, false, false};
      emit(report_json(d, s), report_text(d, s), format);
    } else if (*dual) {
      ReportSections s{false, true, true, false, false, false};
      emit(report_json(d, s), report_text(d, s), format);
    } else if (*bnd) {
      validate(d);
      if (!theta_spec.empty()) {
        std::vector<int> theta;
        for (const auto& t : split(theta_spec, ',')) theta.push_back(std::stoi(t));
        auto bd = boundary_degeneration(d, theta);
        json j{{"theta", bd.theta}, {"center", bd.center_lattice}, {"datum", datum_to_json(bd.datum)}};
        emit(j, "X_" + json(bd.theta).dump() + ": center " + json(bd.center_lattice).dump() + "\n", format);
      } else {
        ReportSections s{false, false, false, true, false, false};
        auto tr = transitivity_check(d);
        json j = report_json(d, s);
        j["transitivity"] = {{"pairs", tr.pairs}, {"failures", tr.failures}};
        emit(j, report_text(d, s) + "transitivity: " + std::to_string(tr.pairs) + " chains, " +
                    std::to_string(tr.failures) + " failures\n",
             format);
        if (!tr.ok()) return kValidationFailure;
      }
    } else if (*fan) {
      json fans = fan_path.empty() ? fans_of(datum_path) : json::array({load_json_file(fan_path)});
      ReportSections s{false, false, false, false, true, false};
      json j = report_json(d, s, fans);
      emit(j, report_text(d, s, fans), format);
      for (const auto& f : j["fans"])
        if (!f["valid"].get<bool>()) return kValidationFailure;
    } else if (*lf) {
      SatakeParam chi = chi_of(chi_spec, q_spec, d.r());
      GradedWeightMultiset rep;
      if (rep_spec == "ad") rep = adjoint_weights(d, 0, true);
      else if (rep_spec == "rho") rep = rho_X(d);
      else rep = weights_from_json(load_json_file(rep_spec));
      LaurentRational L = eval_L(rep, chi, two_s_of(s_spec));
      json j = L.to_json();
      emit(j, "L(" + s_spec + ", " + rep_spec + ", chi) = " + rational_text(L) + "\n", format);
    } else if (*pl) {
      SatakeParam chi = chi_of(chi_spec, q_spec, d.r());
      auto mu = plancherel_density(d, chi);
      auto rc = relative_character_unramified(d, chi);
      json j{{"plancherel", mu.to_json()}, {"J", rc.J.to_json()}, {"omega", rc.omega.to_json()}};
      emit(j,
           "μ_X(χ) = " + rational_text(mu) + "\nJ(χ) = " + rational_text(rc.J) + "\nΩ(χ) = " + rational_text(rc.omega) +
               "\n",
           format);
    } else if (*gl) {
      auto places = places_from_json(load_json_file(places_path), d.r());
      std::vector<std::vector<std::string>> splits;
      if (s_list.empty()) splits = all_splits(places);
      else splits.push_back(split(s_list, ','));
      GlobalReport r = global_assembly(d, places, splits, std::nullopt, bound);
      json j{{"s_independent", r.s_independent},
             {"tail_places", r.tail_places},
             {"rational_constant", r.rational_constant},
             {"splits", json::array()}};
      std::ostringstream text;
      text << "complement tail: " << r.tail_places << " formal places; constant " << r.rational_constant
           << " left symbolic\n";
      for (const auto& sp : r.splits) {
        j["splits"].push_back({{"S", sp.S}, {"matches", sp.matches_reference}});
        text << "S = " << json(sp.S).dump() << ": " << (sp.matches_reference ? "unchanged" : "CHANGED") << "\n";
      }
      text << "S-independent: " << (r.s_independent ? "yes" : "no") << "\n";
      emit(j, text.str(), format);
      return r.s_independent ? kOk : kValidationFailure;
    }
    return kOk;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kDatumError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDatumError;
  }
}
