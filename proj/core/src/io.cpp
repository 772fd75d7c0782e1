#include "spherex/io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

namespace spherex {

namespace {

[[noreturn]] void schema(const std::string& key, const std::string& what) {
  throw Error(ErrorCode::ParseError, "key '" + key + "': " + what);
}

const json& req(const json& j, const std::string& key) {
  if (!j.is_object()) schema(key, "enclosing value is not an object");
  auto it = j.find(key);
  if (it == j.end()) schema(key, "missing");
  return *it;
}

template <class T>
T get_as(const json& j, const std::string& key) {
  try {
    return j.get<T>();
  } catch (const json::exception& e) {
    schema(key, e.what());
  }
}

template <class T>
T field(const json& j, const std::string& key) {
  return get_as<T>(req(j, key), key);
}

template <class T>
T field_or(const json& j, const std::string& key, T fallback) {
  if (!j.is_object() || !j.contains(key)) return fallback;
  return get_as<T>(j.at(key), key);
}

IntMat int_matrix(const json& j, const std::string& key) {
  if (!j.is_array()) schema(key, "expected an array of integer rows");
  IntMat m;
  for (const auto& row : j) m.push_back(get_as<IntVec>(row, key));
  return m;
}

// Simple-root references may be given by index or by name.
std::vector<int> root_indices(const json& j, const RootDatum& g, const std::string& key) {
  std::vector<int> out;
  if (!j.is_array()) schema(key, "expected an array");
  for (const auto& x : j) {
    if (x.is_number_integer()) {
      out.push_back(x.get<int>());
    } else if (x.is_string()) {
      int i = g.index_of(x.get<std::string>());
      if (i < 0) schema(key, "unknown simple root " + x.get<std::string>());
      out.push_back(i);
    } else {
      schema(key, "expected an index or a root name");
    }
  }
  return out;
}

}  // namespace

json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, path.string() + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorCode::ParseError,
                path.string() + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + e.what());
  }
}

void rethrow_in_file(const std::filesystem::path& file) {
  try {
    throw;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ParseError) throw;
    std::string msg = e.what();
    std::string prefix = std::string(error_name(ErrorCode::ParseError)) + ": ";
    if (msg.rfind(prefix, 0) == 0) msg = msg.substr(prefix.size());
    std::size_t line = 0;
    std::smatch m;
    std::ifstream in(file);
    if (in && std::regex_search(msg, m, std::regex("key '([^']+)'"))) {
      std::string needle = "\"" + m[1].str() + "\"", text;
      for (std::size_t n = 1; std::getline(in, text); ++n)
        if (text.find(needle) != std::string::npos) {
          line = n;
          break;
        }
    }
    throw Error(ErrorCode::ParseError,
                file.string() + (line ? ":" + std::to_string(line) : std::string()) + ": " + msg);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, file.string() + ": " + e.what());
  }
}

mpq_class rational_from_json(const json& j) {
  if (j.is_number_integer()) return mpq_class(j.get<long>());
  if (j.is_string()) {
    try {
      mpq_class q(j.get<std::string>());
      q.canonicalize();
      return q;
    } catch (const std::invalid_argument&) {
    }
  }
  schema("value", "expected an integer or a \"p/q\" string, got " + j.dump());
}

RootDatum root_datum_from_json(const json& j) {
  RootDatum rd;
  rd.rank = field<std::size_t>(j, "rank");
  rd.simple_roots = int_matrix(req(j, "simple_roots"), "simple_roots");
  rd.simple_coroots = int_matrix(req(j, "simple_coroots"), "simple_coroots");
  rd.names = field_or<std::vector<std::string>>(j, "names", {});
  for (const auto& v : rd.simple_roots)
    if (v.size() != rd.rank) schema("simple_roots", "row length differs from rank");
  for (const auto& v : rd.simple_coroots)
    if (v.size() != rd.rank) schema("simple_coroots", "row length differs from rank");
  return rd;
}

json root_datum_to_json(const RootDatum& rd) {
  json j{{"rank", rd.rank}, {"simple_roots", rd.simple_roots}, {"simple_coroots", rd.simple_coroots}};
  if (!rd.names.empty()) j["names"] = rd.names;
  return j;
}

GradedWeightMultiset weights_from_json(const json& j) {
  GradedWeightMultiset m;
  if (!j.is_array()) schema("weights", "expected an array");
  for (const auto& e : j) {
    int degree = field<int>(e, "degree");
    if (degree < 0) schema("degree", "must be nonnegative");
    m.add(field<IntVec>(e, "weight"), degree, field_or<Int>(e, "mult", 1));
  }
  return m;
}

json weights_to_json(const GradedWeightMultiset& m) {
  json a = json::array();
  for (const auto& [key, mult] : m.entries) a.push_back({{"weight", key.second}, {"degree", key.first}, {"mult", mult}});
  return a;
}

SphericalDatum datum_from_json(const json& j) {
  SphericalDatum d;
  d.name = field_or<std::string>(j, "name", "");
  d.g = root_datum_from_json(req(j, "group"));
  IntMat lambda = int_matrix(req(j, "lambda"), "lambda");
  for (const auto& v : lambda)
    if (v.size() != d.g.rank) schema("lambda", "row length differs from the rank of A");
  d.lambda = hnf(lambda);
  if (d.lambda.size() != lambda.size()) schema("lambda", "rows are linearly dependent");
  d.spherical_roots = int_matrix(field_or<json>(j, "spherical_roots", json::array()), "spherical_roots");
  for (const auto& v : d.spherical_roots)
    if (v.size() != d.g.semisimple_rank()) schema("spherical_roots", "expected simple-root coordinates");
  d.parabolic = root_indices(field_or<json>(j, "parabolic", json::array()), d.g, "parabolic");
  d.whittaker = field_or<bool>(j, "whittaker", false);
  if (j.contains("galois")) {
    const json& g = j.at("galois");
    GaloisData gd;
    gd.galois_case = field_or<bool>(g, "galois_case", false);
    gd.sigma = field_or<std::vector<int>>(g, "sigma", {});
    gd.lattice = int_matrix(field_or<json>(g, "lattice", json::array()), "lattice");
    d.galois = gd;
  }
  d.symplectic = weights_from_json(field_or<json>(j, "symplectic", json::array()));
  for (const auto& e : field_or<json>(j, "line_signs", json::array())) {
    auto signs = field<std::vector<int>>(e, "signs");
    if (signs.size() != 2) schema("signs", "expected two signs");
    d.line_signs.push_back({field<std::size_t>(e, "root"), {signs[0], signs[1]}});
  }
  return d;
}

json datum_to_json(const SphericalDatum& d) {
  json j;
  j["name"] = d.name;
  j["group"] = root_datum_to_json(d.g);
  j["lambda"] = d.lambda;
  j["spherical_roots"] = d.spherical_roots;
  j["parabolic"] = d.parabolic;
  j["whittaker"] = d.whittaker;
  if (d.galois)
    j["galois"] = {{"galois_case", d.galois->galois_case}, {"sigma", d.galois->sigma}, {"lattice", d.galois->lattice}};
  j["symplectic"] = weights_to_json(d.symplectic);
  json ls = json::array();
  for (const auto& [root, signs] : d.line_signs)
    ls.push_back({{"root", root}, {"signs", {signs.first, signs.second}}});
  j["line_signs"] = ls;
  return j;
}

SphericalDatum load_datum(const std::filesystem::path& path) {
  json j = load_json_file(path);
  return with_schema_context(path, [&] {
    const json& body = j.contains("datum") ? j.at("datum") : j;
    SphericalDatum d = datum_from_json(body);
    if (d.name.empty()) d.name = field_or<std::string>(j, "name", path.stem().string());
    return d;
  });
}

Fan fan_from_json(const json& j, std::size_t dim) {
  std::vector<IntMat> cones;
  const json& cs = j.is_object() ? req(j, "cones") : j;
  if (!cs.is_array()) schema("cones", "expected an array of cones");
  for (const auto& c : cs) {
    IntMat g = int_matrix(c, "cones");
    for (const auto& v : g)
      if (v.size() != dim) schema("cones", "generator of the wrong dimension");
    cones.push_back(g);
  }
  return make_fan(dim, cones);
}

json fan_to_json(const Fan& f) {
  json cs = json::array();
  for (const auto& c : f.cones) cs.push_back(c.gens);
  return {{"dim", f.dim}, {"cones", cs}};
}

SatakeParam parse_chi(const std::string& spec, std::size_t rank, const std::string& suffix) {
  SatakeParam p = SatakeParam::formal(rank, suffix);
  if (spec.empty() || spec == "formal") return p;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos || item.size() < 3 || item[0] != 't')
      throw Error(ErrorCode::ParseError, "chi entry '" + item + "' is not of the form t<i>=<rational>");
    std::size_t idx = 0;
    try {
      idx = std::stoul(item.substr(1, eq - 1));
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "chi entry '" + item + "' has no coordinate index");
    }
    if (idx == 0 || idx > rank) throw Error(ErrorCode::ParseError, "chi coordinate t" + std::to_string(idx) + " out of range");
    std::string value = item.substr(eq + 1);
    if (value == "formal") continue;
    try {
      mpq_class q(value);
      q.canonicalize();
      p.values[idx - 1] = q;
    } catch (const std::invalid_argument&) {
      throw Error(ErrorCode::ParseError, "chi value '" + value + "' is not rational");
    }
  }
  return p;
}

std::vector<Place> places_from_json(const json& j, std::size_t rank) {
  std::vector<Place> out;
  const json& list = j.is_object() ? req(j, "places") : j;
  if (!list.is_array()) schema("places", "expected an array");
  for (const auto& e : list) {
    Place p;
    p.name = field<std::string>(e, "name");
    p.chi = SatakeParam::formal(rank, "_" + p.name);
    if (e.contains("q") && !(e.at("q").is_string() && e.at("q").get<std::string>() == "formal")) {
      long q = get_as<long>(e.at("q"), "q");
      if (q < 2) schema("q", "must be at least 2");
      p.chi.q = q;
    }
    if (e.contains("chi")) {
      for (const auto& [k, v] : e.at("chi").items()) {
        if (k.size() < 2 || k[0] != 't') schema("chi", "coordinate names are t1, t2, ...");
        std::size_t idx = std::stoul(k.substr(1));
        if (idx == 0 || idx > rank) schema("chi", "coordinate " + k + " out of range");
        p.chi.values[idx - 1] = rational_from_json(v);
      }
    }
    out.push_back(p);
  }
  return out;
}

std::vector<SelfDualConstituent> constituents_from_json(const json& j) {
  std::vector<SelfDualConstituent> out;
  if (!j.is_array()) schema("constituents", "expected an array");
  for (const auto& e : j) {
    SelfDualConstituent c;
    c.label = field<std::string>(e, "label");
    c.dim = field<long>(e, "dim");
    std::string type = field_or<std::string>(e, "type", "symplectic");
    if (type == "symplectic") c.sign_type = SignType::Symplectic;
    else if (type == "orthogonal") c.sign_type = SignType::Orthogonal;
    else schema("type", "expected symplectic or orthogonal");
    c.det_at_minus1 = field_or<int>(e, "det", 1);
    c.mult = field_or<long>(e, "mult", 1);
    out.push_back(c);
  }
  validate_constituents(out);
  return out;
}

RootNumberOracle oracle_from_json(const json& j) {
  RootNumberOracle o;
  if (!j.is_array()) schema("oracle", "expected an array");
  for (const auto& e : j) o[{field<std::string>(e, "m"), field<std::string>(e, "n")}] = field<int>(e, "eps");
  return o;
}

ComponentGroupDatum component_group_from_json(const json& j) {
  ComponentGroupDatum cg;
  const json& g = req(j, "group");
  if (g.contains("elementary_abelian")) cg.group = FiniteGroup::elementary_abelian(field<int>(g, "elementary_abelian"));
  else if (g.contains("cyclic")) cg.group = FiniteGroup::cyclic(field<int>(g, "cyclic"));
  else cg.group.table = field<std::vector<std::vector<int>>>(g, "table");
  const json subgroups = field_or<json>(j, "subgroups", json::object());
  const json characters = field_or<json>(j, "characters", json::object());
  for (const auto& [name, h] : subgroups.items())
    cg.subgroups[name] = get_as<Subgroup>(h, name);
  for (const auto& [name, chi] : characters.items()) {
    ClassFunction f;
    for (const auto& v : chi) f.push_back(rational_from_json(v));
    cg.characters[name] = f;
  }
  cg.validate();
  return cg;
}

namespace {

const Subgroup& named_subgroup(const ComponentGroupDatum& cg, const std::string& name) {
  auto it = cg.subgroups.find(name);
  if (it == cg.subgroups.end()) schema("subgroups", "unknown subgroup " + name);
  return it->second;
}

}  // namespace

RefinedInput refined_from_json(const json& j, const ComponentGroupDatum& cg) {
  RefinedInput in;
  in.a_rank = field<int>(j, "a_rank");
  in.norm_image = field_or<std::vector<std::uint32_t>>(j, "norm_image", {0});
  for (const auto& f : req(j, "fibers")) {
    HeartDatum h;
    h.s_psi = named_subgroup(cg, field<std::string>(f, "s_psi"));
    h.s_heart = named_subgroup(cg, field<std::string>(f, "s_heart"));
    for (const auto& [k, v] : req(f, "theta").items()) h.theta[std::stoi(k)] = get_as<std::uint32_t>(v, "theta");
    in.fibers.push_back(h);
  }
  return in;
}

std::vector<BcConstituent> bc_from_json(const json& j) {
  std::vector<BcConstituent> out;
  if (!j.is_array()) schema("constituents", "expected an array");
  for (const auto& e : j)
    out.push_back({field<std::string>(e, "label"), field_or<bool>(e, "selfdual", false), field_or<long>(e, "mult", 1)});
  return out;
}

}  // namespace spherex
