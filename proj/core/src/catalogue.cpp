#include "spherex/catalogue.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <sstream>

#include "spherex/boundary.hpp"
#include "spherex/dual_group.hpp"
#include "spherex/error.hpp"
#include "spherex/io.hpp"
#include "spherex/lfactors.hpp"
#include "spherex/multiplicity.hpp"

#ifndef SPHEREX_CATALOGUE_DIR
#define SPHEREX_CATALOGUE_DIR "catalogue"
#endif

namespace spherex {

std::filesystem::path default_catalogue_dir() {
  if (const char* env = std::getenv("SPHEREX_CATALOGUE"); env && *env) return env;
  return SPHEREX_CATALOGUE_DIR;
}

CatalogueEntry entry_from_json(const json& j) {
  CatalogueEntry e;
  e.name = j.at("name").get<std::string>();
  e.kind = j.value("kind", std::string("datum"));
  if (e.kind == "datum") {
    e.datum = datum_from_json(j.at("datum"));
    if (e.datum->name.empty()) e.datum->name = e.name;
  }
  const json expected = j.value("expected", json::object());
  for (const auto& [key, v] : expected.items()) {
    if (!v.is_object() || !v.contains("value") || !v.contains("provenance"))
      throw Error(ErrorCode::ParseError, "key '" + key + "': expectation needs value and provenance");
    std::string prov = v.at("provenance").get<std::string>();
    if (prov != "paper" && prov != "derived" && prov != "trivial")
      throw Error(ErrorCode::ParseError, "key '" + key + "': provenance must be paper, derived or trivial");
    e.expected.push_back({key, v.at("value"), prov});
  }
  e.body = json::object();
  for (const auto& [key, v] : j.items())
    if (key != "name" && key != "kind" && key != "datum" && key != "expected") e.body[key] = v;
  return e;
}

json entry_to_json(const CatalogueEntry& e) {
  json j = e.body;
  j["name"] = e.name;
  j["kind"] = e.kind;
  if (e.datum) j["datum"] = datum_to_json(*e.datum);
  json ex = json::object();
  for (const auto& x : e.expected) ex[x.key] = {{"value", x.value}, {"provenance", x.provenance}};
  j["expected"] = ex;
  return j;
}

CatalogueEntry load_entry(const std::filesystem::path& file) {
  json j = load_json_file(file);
  CatalogueEntry e = with_schema_context(file, [&] { return entry_from_json(j); });
  e.file = file;
  return e;
}

std::vector<CatalogueEntry> load_catalogue(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir))
    throw Error(ErrorCode::ParseError, dir.string() + ": catalogue directory not found");
  std::vector<std::filesystem::path> files;
  for (const auto& f : std::filesystem::recursive_directory_iterator(dir))
    if (f.is_regular_file() && f.path().extension() == ".json") files.push_back(f.path());
  std::sort(files.begin(), files.end());
  std::vector<CatalogueEntry> out;
  for (const auto& f : files) out.push_back(load_entry(f));
  return out;
}

namespace {

std::string root_name(const SphericalDatum& d, const IntVec& coords) {
  std::string s;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] == 0) continue;
    std::string name = i < d.g.names.size() ? d.g.names[i] : "a" + std::to_string(i + 1);
    if (!s.empty()) s += coords[i] > 0 ? "+" : "-";
    else if (coords[i] < 0) s += "-";
    Int c = coords[i] < 0 ? -coords[i] : coords[i];
    if (c != 1) s += std::to_string(c) + "*";
    s += name;
  }
  return s.empty() ? "0" : s;
}

std::string rational_string(const LaurentRational& f) { return f.to_string(f.has_q_form()); }

std::string error_label(const std::exception& ex) {
  if (auto* e = dynamic_cast<const Error*>(&ex)) return error_name(e->code());
  return "error";
}

std::vector<Place> entry_places(const CatalogueEntry& e) {
  if (e.body.contains("places")) return places_from_json(e.body.at("places"), e.datum->r());
  std::vector<Place> out;
  for (int i = 1; i <= 3; ++i) {
    std::string name = "v" + std::to_string(i);
    out.push_back({name, SatakeParam::formal(e.datum->r(), "_" + name)});
  }
  return out;
}

std::optional<GradedWeightMultiset> entry_sx(const CatalogueEntry& e) {
  if (e.body.contains("S_X")) return weights_from_json(e.body.at("S_X"));
  return std::nullopt;
}

json fan_summary(const SphericalDatum& d, const json& spec) {
  json out;
  out["name"] = spec.value("name", std::string("fan"));
  Fan f = fan_from_json(spec, d.r());
  try {
    FanReport r = fan_validate(d, f);
    out["valid"] = true;
    out["maximal_cones"] = r.maximal_cones;
    out["cones"] = r.cones;
    out["smooth"] = r.smooth;
    out["complete"] = r.complete;
    SubdivisionCheck s = check_smooth_subdivision(d, f);
    out["subdivision_maximal_cones"] = s.result.cones.size();
    out["subdivision_rays"] = rays(s.result);
    out["subdivision_smooth"] = s.smooth;
    out["subdivision_support"] = s.support;
    out["anti_isomorphism"] = s.anti_isomorphism;
  } catch (const Error& ex) {
    out["valid"] = false;
    out["error"] = error_name(ex.code());
    out["message"] = ex.what();
  }
  return out;
}

json flip_value(const CatalogueEntry& e, const std::string& spec) {
  // chi:<left|right>:<label>+<label>...
  auto M = constituents_from_json(e.body.at("M"));
  auto N = constituents_from_json(e.body.at("N"));
  auto oracle = oracle_from_json(e.body.at("oracle"));
  auto first = spec.find(':');
  std::string side = spec.substr(0, first);
  std::string labels = first == std::string::npos ? "" : spec.substr(first + 1);
  const auto& flipped = side == "right" ? N : M;
  std::set<std::size_t> s;
  std::stringstream ss(labels);
  std::string l;
  while (std::getline(ss, l, '+')) {
    if (l.empty()) continue;
    auto it = std::find_if(flipped.begin(), flipped.end(), [&](const auto& c) { return c.label == l; });
    if (it == flipped.end()) throw Error(ErrorCode::InvalidDatum, "unknown constituent " + l);
    s.insert(static_cast<std::size_t>(it - flipped.begin()));
  }
  return gp_character(M, N, oracle, s, side == "right" ? Side::Right : Side::Left);
}

json prasad_value(const CatalogueEntry& e, const std::string& key) {
  const json& b = e.body;
  if (key == "weighted_count" || key == "recorded_stable" || key == "weighted_matches_recorded") {
    std::vector<WeightedFiber> fibers;
    for (const auto& f : b.at("weighted").at("fibers"))
      fibers.push_back({f.at("degree").get<long>(), f.at("components").get<long>()});
    long weighted = degree_weighted_count(fibers);
    long recorded = 0;
    for (const auto& m : b.at("weighted").at("recorded_multiplicities")) recorded += m.get<long>();
    if (key == "weighted_count") return weighted;
    if (key == "recorded_stable") return recorded;
    return weighted == recorded;
  }
  ComponentGroupDatum cg = component_group_from_json(b);
  std::vector<Subgroup> fibers;
  for (const auto& name : b.at("fibers")) fibers.push_back(cg.subgroups.at(name.get<std::string>()));
  auto rho_of = [&](const std::string& name) -> const ClassFunction& {
    auto it = cg.characters.find(name);
    if (it == cg.characters.end()) throw Error(ErrorCode::InvalidDatum, "unknown character " + name);
    return it->second;
  };
  if (key == "stable") return stable_multiplicity(cg, fibers);
  if (key.rfind("m:", 0) == 0) return prasad_multiplicity(cg, rho_of(key.substr(2)), fibers);
  if (key.rfind("fixed:", 0) == 0) return fixed_point_multiplicity(cg, rho_of(key.substr(6)), fibers);
  RefinedInput in = refined_from_json(b.at("refined"), cg);
  if (key == "refined_sum") {
    // Summing the refined count over beta gives back the first version, for every character.
    for (const auto& [name, rho] : cg.characters) {
      mpq_class sum = 0;
      for (const auto& [beta, m] : prasad_refined(cg, rho, in)) sum += m;
      std::vector<Subgroup> psi;
      for (const auto& f : in.fibers) psi.push_back(f.s_psi);
      if (sum != prasad_multiplicity(cg, rho, psi)) return false;
    }
    return true;
  }
  if (key.rfind("refined:", 0) == 0) {
    auto rest = key.substr(8);
    auto colon = rest.find(':');
    auto values = prasad_refined(cg, rho_of(rest.substr(0, colon)), in);
    auto m = values.at(static_cast<std::uint32_t>(std::stoul(rest.substr(colon + 1))));
    return m.get_den() == 1 ? json(m.get_num().get_si()) : json(m.get_str());
  }
  throw Error(ErrorCode::InvalidDatum, "unknown invariant " + key);
}

json bc_value(const CatalogueEntry& e, const std::string& key) {
  BcDegree r = bc_degree(bc_from_json(e.body.at("constituents")));
  const mpz_class* v = nullptr;
  if (key == "deg") v = &r.deg;
  else if (key == "fiber") v = &r.fiber;
  else if (key == "m_qs") v = &r.m_qs;
  else if (key == "m_nqs") v = &r.m_nqs;
  else if (key == "m_X") v = &r.m_X;
  else throw Error(ErrorCode::InvalidDatum, "unknown invariant " + key);
  return v->get_si();
}

json datum_value(const CatalogueEntry& e, const std::string& key) {
  const SphericalDatum& d = *e.datum;
  if (key == "valid") {
    validate(d);
    return true;
  }
  if (key == "spherical_roots") return d.spherical_roots;
  if (key == "spherical_root_types" || key == "d2_flags" || key == "spherical_coroots") {
    SphericalSystem sys = spherical_system(d);
    json a = json::array();
    for (const auto& r : sys.roots) {
      if (key == "spherical_root_types") a.push_back(to_string(r.type));
      else if (key == "d2_flags") a.push_back(r.is_d2);
      else a.push_back(r.coroot);
    }
    return a;
  }
  if (key == "little_weyl_order") return little_weyl_group(d).size();
  if (key == "wavefront") return wavefront(d);
  if (key == "coroot_containment") return check_coroot_containment(d).ok;
  if (key == "center_rank") return center(d).rank();
  if (key == "dual_type") {
    try {
      auto dual = build_dual(d);
      std::string t = cartan_type(dual.datum.cartan());
      return t.empty() ? std::string("torus") : t;
    } catch (const Error& ex) {
      return std::string(error_name(ex.code()));
    }
  }
  if (key == "sl2_cocharacter") return distinguished_morphism(d).sl2_cocharacter;
  if (key == "torus_map") return distinguished_morphism(d).torus_map;
  if (key == "target_signs") {
    json a = json::array();
    for (const auto& t : distinguished_morphism(d).targets) a.push_back(t.signs);
    return a;
  }
  if (key == "pinning_fixable") return galois_action(d).pinning_fixable;
  if (key == "rho_adjoint") return weights_to_json(derive_rho_adjoint_part(d));
  if (key == "rho") {
    auto sx = entry_sx(e);
    GradedWeightMultiset r = sx ? *sx : d.symplectic;
    r += derive_rho_adjoint_part(d);
    return weights_to_json(r);
  }
  SatakeParam chi = SatakeParam::formal(d.r());
  if (key == "tamagawa") return rational_string(tamagawa_factor(d.g));
  if (key == "plancherel") return rational_string(plancherel_density(d, chi));
  if (key == "J") return rational_string(relative_character_unramified(d, chi, entry_sx(e)).J);
  if (key == "omega") return rational_string(relative_character_unramified(d, chi, entry_sx(e)).omega);
  if (key == "transitivity") return transitivity_check(d).ok();
  if (key == "fundamental_domain") return check_fundamental_domain(d, 200, 1).ok();
  if (key == "global_s_independent") {
    auto places = entry_places(e);
    return global_assembly(d, places, all_splits(places), entry_sx(e)).s_independent;
  }
  if (key.rfind("fan:", 0) == 0) {
    // fan:<name>:<field>
    auto rest = key.substr(4);
    auto colon = rest.find(':');
    std::string name = rest.substr(0, colon), fieldname = rest.substr(colon + 1);
    for (const auto& spec : e.body.value("fans", json::array()))
      if (spec.value("name", std::string()) == name) {
        json s = fan_summary(d, spec);
        if (!s.contains(fieldname)) return nullptr;
        return s.at(fieldname);
      }
    throw Error(ErrorCode::InvalidDatum, "no fan named " + name);
  }
  throw Error(ErrorCode::InvalidDatum, "unknown invariant " + key);
}

}  // namespace

json compute_invariant(const CatalogueEntry& e, const std::string& key) {
  if (e.kind == "datum") return datum_value(e, key);
  if (e.kind == "ggp") {
    if (key == "is_character")
      return gp_is_character(constituents_from_json(e.body.at("M")), constituents_from_json(e.body.at("N")),
                             oracle_from_json(e.body.at("oracle")));
    if (key.rfind("chi:", 0) == 0) return flip_value(e, key.substr(4));
    throw Error(ErrorCode::InvalidDatum, "unknown invariant " + key);
  }
  if (e.kind == "prasad") return prasad_value(e, key);
  if (e.kind == "bc") return bc_value(e, key);
  throw Error(ErrorCode::InvalidDatum, "unknown entry kind " + e.kind);
}

std::size_t ValidationReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.ok; }));
}

json ValidationReport::to_json() const {
  json a = json::array();
  for (const auto& c : checks) {
    json x{{"entry", c.entry}, {"key", c.key}, {"provenance", c.provenance}, {"ok", c.ok}};
    if (!c.ok) {
      x["expected"] = c.expected;
      x["actual"] = c.actual;
    }
    a.push_back(x);
  }
  return {{"checks", checks.size()}, {"failures", failures()}, {"results", a}};
}

std::string ValidationReport::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.ok ? "ok   " : "FAIL ") << c.entry << " " << c.key << " [" << c.provenance << "]";
    if (!c.ok) out << " expected " << c.expected.dump() << " got " << c.actual.dump();
    out << "\n";
  }
  out << checks.size() << " checks, " << failures() << " failures\n";
  return out.str();
}

ValidationReport validate_entry(const CatalogueEntry& e) {
  ValidationReport r;
  for (const auto& x : e.expected) {
    CheckResult c{e.name, x.key, x.provenance, x.value, nullptr, false};
    try {
      c.actual = compute_invariant(e, x.key);
    } catch (const std::exception& ex) {
      c.actual = std::string("error: ") + ex.what();
      if (x.value.is_string() && x.value.get<std::string>() == error_label(ex)) c.actual = x.value;
    }
    c.ok = c.actual == c.expected;
    r.checks.push_back(std::move(c));
  }
  return r;
}

ValidationReport validate_all(const std::vector<CatalogueEntry>& entries) {
  std::vector<std::future<ValidationReport>> jobs;
  for (const auto& e : entries) jobs.push_back(std::async(std::launch::async, [&e] { return validate_entry(e); }));
  ValidationReport all;
  for (auto& j : jobs) {
    ValidationReport r = j.get();
    all.checks.insert(all.checks.end(), r.checks.begin(), r.checks.end());
  }
  return all;
}

ValidationReport validate_all(const std::filesystem::path& dir) { return validate_all(load_catalogue(dir)); }

json report_json(const SphericalDatum& d, const ReportSections& s, const json& fans) {
  json j;
  j["name"] = d.name;
  validate(d);
  SphericalSystem sys = spherical_system(d);
  if (s.invariants) {
    json inv;
    std::string gt = cartan_type(d.g.cartan());
    inv["group_type"] = gt.empty() ? "torus" : gt;
    inv["torus_rank"] = d.g.rank;
    inv["lambda"] = d.lambda;
    inv["rank"] = d.r();
    json roots = json::array();
    for (const auto& r : sys.roots)
      roots.push_back({{"root", root_name(d, r.root)},
                       {"coords", r.root},
                       {"type", to_string(r.type)},
                       {"d2", r.is_d2},
                       {"coroot", r.coroot}});
    inv["spherical_roots"] = roots;
    json par = json::array();
    for (int p : d.parabolic) {
      IntVec c(d.g.semisimple_rank(), 0);
      c[static_cast<std::size_t>(p)] = 1;
      par.push_back(root_name(d, c));
    }
    inv["parabolic"] = par;
    inv["whittaker"] = d.whittaker;
    inv["little_weyl_order"] = little_weyl_group(d).size();
    inv["wavefront"] = wavefront(d);
    inv["warnings"] = sys.warnings;
    j["invariants"] = inv;
  }
  std::optional<std::string> dual_error;
  try {
    build_dual(d);
  } catch (const Error& ex) {
    dual_error = ex.what();
  }
  if (s.dual_group) {
    json dg;
    if (dual_error) {
      dg["error"] = *dual_error;
    } else {
      auto dual = build_dual(d);
      std::string t = cartan_type(dual.datum.cartan());
      dg["type"] = t.empty() ? "torus" : t;
      dg["simple_roots"] = dual.datum.simple_roots;
      dg["simple_coroots"] = dual.datum.simple_coroots;
      if (d.galois) {
        auto ga = galois_action(d);
        dg["galois"] = {{"perm", ga.perm}, {"lattice", ga.lattice}, {"pinning_fixable", ga.pinning_fixable}};
      }
    }
    j["dual_group"] = dg;
  }
  if (s.morphism && !dual_error) {
    auto dm = distinguished_morphism(d);
    json targets = json::array();
    for (const auto& t : dm.targets)
      targets.push_back({{"type", to_string(t.type)}, {"coroots", t.coroots}, {"signs", t.signs}, {"d2", t.is_d2}});
    j["morphism"] = {{"torus_map", dm.torus_map},
                     {"sl2_cocharacter", dm.sl2_cocharacter},
                     {"targets", targets},
                     {"rho_adjoint", weights_to_json(derive_rho_adjoint_part(d))},
                     {"rho", weights_to_json(rho_X(d))}};
  }
  if (s.boundary) {
    json b;
    b["center"] = center(d).basis;
    b["positive_cone"] = positive_cone(d).gens;
    json degs = json::array();
    for (std::size_t i = 0; i < d.spherical_roots.size(); ++i) {
      auto bd = boundary_degeneration(d, {static_cast<int>(i)});
      degs.push_back({{"theta", bd.theta}, {"center", bd.center_lattice}});
    }
    b["degenerations"] = degs;
    j["boundary"] = b;
  }
  if (s.fans) {
    json a = json::array();
    for (const auto& spec : fans) a.push_back(fan_summary(d, spec));
    j["fans"] = a;
  }
  if (s.lfactors) {
    json l;
    l["tamagawa"] = rational_string(tamagawa_factor(d.g));
    if (!dual_error) {
      SatakeParam chi = SatakeParam::formal(d.r());
      auto rc = relative_character_unramified(d, chi);
      l["plancherel"] = rational_string(plancherel_density(d, chi));
      l["J"] = rational_string(rc.J);
      l["omega"] = rational_string(rc.omega);
    }
    j["lfactors"] = l;
  }
  return j;
}

namespace {

std::string weights_text(const json& w) {
  std::string s;
  for (const auto& e : w) {
    if (!s.empty()) s += ", ";
    s += "deg " + std::to_string(e.at("degree").get<int>()) + " " + e.at("weight").dump();
    if (e.at("mult").get<long>() != 1) s += " x" + std::to_string(e.at("mult").get<long>());
  }
  return s;
}

}  // namespace

std::string report_text(const SphericalDatum& d, const ReportSections& s, const json& fans) {
  json j = report_json(d, s, fans);
  std::ostringstream out;
  out << "datum: " << j["name"].get<std::string>() << "\n";
  if (j.contains("invariants")) {
    const json& inv = j["invariants"];
    out << "G: " << inv["group_type"].get<std::string>() << ", torus rank " << inv["torus_rank"] << "\n";
    out << "Lambda_X: " << inv["lambda"].dump() << " (rank " << inv["rank"] << ")\n";
    for (const auto& r : inv["spherical_roots"])
      out << "spherical root " << r["root"].get<std::string>() << ": type " << r["type"].get<std::string>()
          << (r["d2"].get<bool>() ? ", D2" : "") << ", coroot " << r["coroot"].dump() << "\n";
    if (inv["spherical_roots"].empty()) out << "spherical roots: none\n";
    out << "Delta(X): " << inv["parabolic"].dump() << (inv["whittaker"].get<bool>() ? " (Whittaker)" : "") << "\n";
    out << "|W_X| = " << inv["little_weyl_order"] << "\n";
    out << "wavefront: " << (inv["wavefront"].get<bool>() ? "yes" : "no") << "\n";
    for (const auto& w : inv["warnings"]) out << "warning: " << w.get<std::string>() << "\n";
  }
  if (j.contains("dual_group")) {
    const json& dg = j["dual_group"];
    if (dg.contains("error")) {
      out << "dual group: undefined (" << dg["error"].get<std::string>() << ")\n";
    } else {
      out << "dual group: " << dg["type"].get<std::string>() << ", roots " << dg["simple_roots"].dump()
          << ", coroots " << dg["simple_coroots"].dump() << "\n";
      if (dg.contains("galois"))
        out << "Galois action: perm " << dg["galois"]["perm"].dump() << ", pinning fixable: "
            << (dg["galois"]["pinning_fixable"].get<bool>() ? "yes" : "no") << "\n";
    }
  }
  if (j.contains("morphism")) {
    const json& m = j["morphism"];
    out << "torus map: " << m["torus_map"].dump() << "\n";
    out << "SL2 cocharacter: " << m["sl2_cocharacter"].dump() << "\n";
    for (const auto& t : m["targets"])
      out << "target: type " << t["type"].get<std::string>() << ", coroots " << t["coroots"].dump() << ", signs "
          << t["signs"].dump() << (t["d2"].get<bool>() ? ", D2" : "") << "\n";
    if (m["rho"].empty()) out << "ρ_X = 0\n";
    else out << "ρ_X: " << weights_text(m["rho"]) << "\n";
  }
  if (j.contains("boundary")) {
    const json& b = j["boundary"];
    out << "center of X: " << b["center"].dump() << "\n";
    out << "A_X^+: " << b["positive_cone"].dump() << "\n";
    for (const auto& x : b["degenerations"])
      out << "X_" << x["theta"].dump() << ": center " << x["center"].dump() << "\n";
  }
  if (j.contains("fans"))
    for (const auto& f : j["fans"]) {
      out << "fan " << f["name"].get<std::string>() << ": ";
      if (!f["valid"].get<bool>()) {
        out << "invalid (" << f["error"].get<std::string>() << ")\n";
        continue;
      }
      out << f["maximal_cones"] << " maximal cones, smooth " << (f["smooth"].get<bool>() ? "yes" : "no")
          << ", complete " << (f["complete"].get<bool>() ? "yes" : "no") << ", smooth subdivision with "
          << f["subdivision_maximal_cones"] << " cones\n";
    }
  if (j.contains("lfactors")) {
    const json& l = j["lfactors"];
    out << "Δ_G = " << l["tamagawa"].get<std::string>() << "\n";
    if (l.contains("J")) {
      out << "μ_X(χ) = " << l["plancherel"].get<std::string>() << "\n";
      out << "J(χ) = " << l["J"].get<std::string>() << "\n";
      out << "Ω(χ) = " << l["omega"].get<std::string>() << "\n";
    }
  }
  return out.str();
}

}  // namespace spherex
