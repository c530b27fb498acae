#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "unital/cone.hpp"
#include "unital/curves.hpp"
#include "unital/group.hpp"
#include "unital/unitals.hpp"
#include "unital/verify.hpp"

using namespace unital;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Options {
  std::optional<unsigned> p;
  std::optional<unsigned> e;
  std::optional<std::uint64_t> q;
  std::string modulus;
  std::uint64_t a = 0;
  std::optional<std::uint64_t> b;
  std::optional<std::uint64_t> epsilon;
  std::string kind = "bm";
  std::string model = "standard";
  std::string out;
  std::string format = "json";
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  bool pretty = false;
  bool all = false;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--p", o.p, "characteristic");
  cmd->add_option("--e", o.e, "q = p^e");
  cmd->add_option("--q", o.q, "q as a prime power (instead of --p/--e)");
  cmd->add_option("--modulus", o.modulus, "modulus override, coefficients constant term first, comma separated");
  cmd->add_option("--a", o.a, "parameter a (canonical integer)");
  cmd->add_option("--b", o.b, "parameter b (canonical integer)");
  cmd->add_option("--epsilon", o.epsilon, "epsilon for the Buekenhout-Tits construction");
  cmd->add_option("--kind", o.kind, "hermitian | bm | bt | random")->check(CLI::IsMember({"hermitian", "bm", "bt", "random"}));
  cmd->add_option("--model", o.model, "standard | a-model | eps-model")
      ->check(CLI::IsMember({"standard", "a-model", "eps-model"}));
  cmd->add_option("--out", o.out, "write the report here instead of stdout");
  cmd->add_option("--format", o.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--jobs", o.jobs, "worker threads for the parallel loops")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", o.seed, "seed for --kind random");
  cmd->add_flag("--pretty", o.pretty, "print elements as polynomials in t");
  cmd->add_flag("--all", o.all, "exhaustive variant of the command");
}

Field make_field(const Options& o) {
  std::optional<std::vector<unsigned>> modulus;
  if (!o.modulus.empty()) {
    std::vector<unsigned> c;
    std::stringstream ss(o.modulus);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        c.push_back(static_cast<unsigned>(std::stoul(item)));
      } catch (const std::exception&) {
        throw ParameterError("bad modulus coefficient '" + item + "'");
      }
    }
    modulus = c;
  }
  if (o.q) {
    if (o.p || o.e) throw ParameterError("give either --q or --p/--e");
    return Field::build_q(*o.q, modulus);
  }
  if (!o.p || !o.e) throw ParameterError("the field needs --q or both --p and --e");
  return Field::build(*o.p, *o.e, modulus);
}

Elem need_b(const Field& f, const Options& o) {
  if (!o.b) throw ParameterError("--b is required");
  return f.element(*o.b);
}

Elem epsilon_of(const Field& f, const Options& o) {
  if (o.epsilon) return f.element(*o.epsilon);
  return f.find_epsilon(Parity::even).epsilon;
}

// Rewrites element-valued fields as polynomials in t.
nlohmann::json prettify(const Field& f, nlohmann::json j) {
  static const std::set<std::string> keys{"a", "b", "m", "d", "k", "epsilon", "delta", "primitive", "coeff"};
  if (j.is_object()) {
    for (auto& [k, v] : j.items()) {
      if (keys.count(k) && v.is_number_unsigned() && v.get<std::uint64_t>() < f.order())
        v = f.pretty(Elem{v.get<std::uint32_t>()});
      else
        v = prettify(f, v);
    }
  } else if (j.is_array()) {
    bool point = j.size() >= 2 && j.size() <= 4;
    for (const auto& v : j) point = point && v.is_number_unsigned() && v.get<std::uint64_t>() < f.order();
    for (auto& v : j) v = point ? nlohmann::json(f.pretty(Elem{v.get<std::uint32_t>()})) : prettify(f, v);
  }
  return j;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(o.out);
  if (!os) throw ParameterError("cannot write " + o.out);
  os << text;
}

void emit_json(const Options& o, const Field& f, nlohmann::json j) {
  if (o.pretty) j = prettify(f, std::move(j));
  emit(o, j.dump() + "\n");
}

int emit_report(const Options& o, const Field& f, const VerificationReport& rep) {
  if (o.format == "csv")
    emit(o, rep.to_csv());
  else
    emit_json(o, f, rep.to_json());
  return rep.pass() ? kPass : kFail;
}

PointSet random_set(const Field& f, std::uint64_t seed) {
  const auto plane = enumerate(f);
  std::vector<std::uint32_t> codes;
  codes.reserve(plane.points.size());
  for (const auto& p : plane.points) codes.push_back(pack(f, p));
  std::mt19937_64 rng(seed);
  std::shuffle(codes.begin(), codes.end(), rng);
  const std::uint64_t q = f.q();
  codes.resize(q * q * q + 1);
  return PointSet(std::move(codes));
}

UnitalParams params_of(const Field& f, const Options& o) {
  UnitalParams s;
  s.kind = unital_kind_from_string(o.kind);
  s.a = f.element(o.a);
  if (s.kind != UnitalKind::bt) s.b = need_b(f, o);
  if (s.kind == UnitalKind::bt) {
    if (f.p() != 2 || f.e() < 3 || f.e() % 2 == 0)
      throw ParameterError("Buekenhout-Tits construction requires q = 2^e with e > 1 odd");
    const auto pair = f.find_epsilon(Parity::even);
    s.epsilon = o.epsilon ? f.element(*o.epsilon) : pair.epsilon;
    if (!o.epsilon) s.delta = pair.delta;
    if (o.b) s.b = f.element(*o.b);
  }
  return s;
}

int cmd_field_info(const Options& o) {
  const Field f = make_field(o);
  if (o.all) return emit_report(o, f, field_check(f));
  nlohmann::json j = f.to_json();
  j["q"] = f.q();
  j["order"] = f.order();
  j["primitive"] = f.primitive().v;
  j["tables"] = f.uses_tables();
  if (f.p() != 2) {
    j["epsilon"] = f.find_epsilon(Parity::odd).epsilon.v;
  } else if (f.e() > 1 && f.e() % 2 == 1) {
    const auto pair = f.find_epsilon(Parity::even);
    j["epsilon"] = pair.epsilon.v;
    j["delta"] = pair.delta->v;
  }
  emit_json(o, f, j);
  return kPass;
}

int cmd_construct(const Options& o) {
  const Field f = make_field(o);
  if (o.kind == "random") throw ParameterError("construct: --kind random is only for verify");
  const UnitalParams params = params_of(f, o);
  const PointSet s = realize(f, params);
  if (o.format == "csv") {
    std::string text = "x0,x1,x2\n";
    for (const auto& p : s.points(f)) {
      for (int i = 0; i < 3; ++i) {
        const Elem c = p.c[static_cast<std::size_t>(i)];
        text += (o.pretty ? f.pretty(c) : std::to_string(c.v)) + (i < 2 ? "," : "\n");
      }
    }
    emit(o, text);
  } else {
    emit_json(o, f, unital_to_json(f, params, s));
  }
  return kPass;
}

int cmd_check_ebert(const Options& o) {
  const Field f = make_field(o);
  if (o.all) {
    nlohmann::json rows = nlohmann::json::array();
    for (Elem a : f.elements())
      for (Elem b : f.elements())
        rows.push_back({{"a", a.v}, {"b", b.v}, {"ebert", ebert_check(f, a, b)}, {"class", to_string(classify(f, a, b))}});
    emit_json(o, f, {{"field", f.to_json()}, {"pairs", rows}});
    return kPass;
  }
  const Elem a = f.element(o.a);
  const Elem b = need_b(f, o);
  const bool ok = ebert_check(f, a, b);
  emit_json(o, f, {{"a", a.v}, {"b", b.v}, {"ebert", ok}, {"class", to_string(classify(f, a, b))}});
  return ok ? kPass : kFail;
}

int cmd_verify(const Options& o) {
  const Field f = make_field(o);
  if (o.model == "standard") {
    PointSet s;
    nlohmann::json meta;
    if (o.kind == "random") {
      s = random_set(f, o.seed);
      meta = {{"kind", "random"}, {"seed", o.seed}};
    } else {
      const UnitalParams params = params_of(f, o);
      s = realize(f, params);
      meta = unital_to_json(f, params, s);
      meta.erase("points");
    }
    VerificationReport rep = assert_unital(f, s, standard_lines(f));
    rep.metadata["construction"] = meta;
    return emit_report(o, f, rep);
  }
  if (o.kind != "hermitian") throw ParameterError("model planes are checked against --kind hermitian");
  const Elem b = need_b(f, o);
  if (o.model == "a-model") {
    const Elem a = f.element(o.a);
    const auto model = PlaneModel::a_model(f, a);
    std::vector<VerificationReport> parts{model_unital_check(model, b)};
    parts.push_back(parabola_count_check(f, a, b));
    parts.push_back(tangent_check(f, a, b));
    VerificationReport rep = combine("hermitian_in_A_a", parts);
    rep.profile = parts.front().profile;
    rep.profile_by_kind = parts.front().profile_by_kind;
    rep.metadata = {{"a", a.v}, {"b", b.v}, {"ebert_minus_a", ebert_check(f, f.neg(a), b)}};
    return emit_report(o, f, rep);
  }
  const auto model = PlaneModel::eps_model(f, epsilon_of(f, o), b);
  return emit_report(o, f, model_unital_check(model, b));
}

int cmd_enumerate(const Options& o) {
  const Field f = make_field(o);
  EnumerateOptions opt;
  opt.jobs = o.jobs;
  if (o.all) {
    opt.max_q = std::max<std::uint32_t>(opt.max_q, f.q());
    opt.cross_validate_max_q = f.q();
  }
  const auto records = enumerate_pairs(f, opt);
  bool consistent = true;
  std::map<std::string, std::uint64_t> counts;
  nlohmann::json rows = nlohmann::json::array();
  std::string csv = "a,b,ebert,class,two_character\n";
  for (const auto& r : records) {
    ++counts[to_string(r.cls)];
    nlohmann::json row = {{"a", r.a.v}, {"b", r.b.v}, {"ebert", r.ebert}, {"class", to_string(r.cls)}};
    if (r.two_character) {
      row["two_character"] = *r.two_character;
      consistent = consistent && *r.two_character == r.ebert;
    }
    csv += std::to_string(r.a.v) + "," + std::to_string(r.b.v) + "," + (r.ebert ? "1" : "0") + "," + to_string(r.cls) + "," +
           (r.two_character ? (*r.two_character ? "1" : "0") : "") + "\n";
    rows.push_back(std::move(row));
  }
  if (o.format == "csv") {
    emit(o, csv);
  } else {
    emit_json(o, f, {{"field", f.to_json()}, {"counts", counts}, {"consistent", consistent}, {"pairs", rows}});
  }
  return consistent ? kPass : kFail;
}

int cmd_model_check(const Options& o) {
  const Field f = make_field(o);
  if (o.model == "eps-model") return emit_report(o, f, plane_axiom_check(PlaneModel::eps_model(f, epsilon_of(f, o), need_b(f, o))));
  const Elem a = o.model == "standard" ? f.zero() : f.element(o.a);
  return emit_report(o, f, plane_axiom_check(PlaneModel::a_model(f, a)));
}

int cmd_group_check(const Options& o) {
  const Field f = make_field(o);
  return emit_report(o, f, verify_group_structure(f, f.element(o.a), need_b(f, o)));
}

int cmd_cone_check(const Options& o) {
  const Field f = make_field(o);
  ConeOptions opt;
  opt.jobs = o.jobs;
  opt.include_image = true;
  return emit_report(o, f, cone_pipeline(f, f.element(o.a), need_b(f, o), opt));
}

int cmd_curve_check(const Options& o) {
  const Field f = make_field(o);
  return emit_report(o, f, curve_check(f, f.element(o.a), need_b(f, o)));
}

int cmd_min_degree(const Options& o) {
  const Field f = make_field(o);
  return emit_report(o, f, min_degree_check(f, f.element(o.a), need_b(f, o)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hermitian, Buekenhout-Metz and Buekenhout-Tits unitals in PG(2,q^2)"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::pair<std::string, std::pair<std::string, int (*)(const Options&)>>> commands{
      {"field-info", {"describe GF(q^2); --all runs the field self-check", cmd_field_info}},
      {"construct", {"print a unital as a point set", cmd_construct}},
      {"check-ebert", {"Ebert's discriminant condition and the classification of (a, b)", cmd_check_ebert}},
      {"verify", {"unital test in the standard plane or in a model plane", cmd_verify}},
      {"enumerate", {"classify every pair (a, b)", cmd_enumerate}},
      {"model-check", {"projective-plane axioms of a model closure", cmd_model_check}},
      {"group-check", {"structure of the affinity group of A_a", cmd_group_check}},
      {"cone-check", {"lift to the cone in PG(3,q^2) and project back", cmd_cone_check}},
      {"curve-check", {"curve containment and birational transfer", cmd_curve_check}},
      {"min-degree", {"minimum degree of a curve through the unital", cmd_min_degree}},
  };
  std::map<CLI::App*, int (*)(const Options&)> handlers;
  for (const auto& [name, entry] : commands) {
    CLI::App* sub = app.add_subcommand(name, entry.first);
    add_common(sub, o);
    handlers[sub] = entry.second;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }
  try {
    for (const auto& [sub, fn] : handlers)
      if (sub->parsed()) return fn(o);
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const VerificationError& e) {
    std::cerr << "verification error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
