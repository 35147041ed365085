#include "ppring/cli.hpp"

#include <json.hpp>
#include <sstream>

#include "ppring/checks.hpp"
#include "ppring/lattice.hpp"

namespace ppring {

namespace {

using Json = nlohmann::ordered_json;

std::string rational_text(const Rational& r) { return r.get_num().get_str() + "/" + r.get_den().get_str(); }

Json cyclotomic_json(const Cyclotomic& c) {
  Json coeffs = Json::array();
  for (const auto& r : c.coeffs()) coeffs.push_back(rational_text(r));
  return Json{{"conductor", c.conductor()}, {"coeffs", coeffs}, {"text", c.to_string()}};
}

Json perm_list(const FiniteGroup& G, const std::vector<Elem>& xs) {
  Json out = Json::array();
  for (Elem x : xs) out.push_back(G.element(x).to_string());
  return out;
}

Json subgroup_json(const Subgroup& H) { return perm_list(H.group(), H.generators()); }

Json element_json(const PPElement& x) {
  Json out = Json::array();
  for (const auto& [gen, coeff] : x.terms()) {
    Json chi = Json::object();
    const auto& L = gen.subgroup();
    for (std::size_t i = 0; i < L.order(); ++i) chi[std::to_string(L.elements()[i])] = gen.character().exponents()[i];
    out.push_back(Json{{"subgroup", subgroup_json(L)}, {"character", chi}, {"coeff", cyclotomic_json(coeff)}});
  }
  return out;
}

Json pair_json(const SpeciesPair& pr) {
  return Json{{"label", pr.label()},
              {"P", subgroup_json(pr.P())},
              {"P_order", pr.P().order()},
              {"lift", pr.group().element(pr.lift()).to_string()},
              {"s_order", pr.s_order()},
              {"centralizer_order", pr.centralizer_order()},
              {"ps_order", pr.ps().order()}};
}

Json group_json(const std::string& spec, const FiniteGroup& G) {
  Json gens = Json::array();
  for (const auto& g : G.generators()) gens.push_back(g.to_string());
  return Json{{"spec", spec}, {"degree", G.degree()}, {"order", G.order()}, {"generators", gens}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join_perms(const FiniteGroup& G, const std::vector<Elem>& xs) {
  std::string out = "<";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + G.element(xs[i]).to_string();
  return out + ">";
}

std::string generator_label(const Generator& gen) {
  std::ostringstream os;
  os << "Ind(" << join_perms(gen.group(), gen.subgroup().generators()) << ", [";
  const auto& e = gen.character().exponents();
  for (std::size_t i = 0; i < e.size(); ++i) os << (i ? " " : "") << e[i];
  os << "])";
  return os.str();
}

struct Context {
  const RunConfig& config;
  GroupPtr G;
  Json header;
};

RunResult cmd_pairs(const Context& ctx) {
  const auto pairs = enumerate_pairs(ctx.G, ctx.config.p);
  std::ostringstream os;
  if (ctx.config.format == "csv") {
    os << "index,P_order,P,lift,s_order,centralizer_order,ps_order\n";
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto& pr = pairs[i];
      os << i << "," << pr.P().order() << "," << csv_field(join_perms(*ctx.G, pr.P().generators())) << ","
         << csv_field(ctx.G->element(pr.lift()).to_string()) << "," << pr.s_order() << "," << pr.centralizer_order()
         << "," << pr.ps().order() << "\n";
    }
  } else if (ctx.config.format == "pretty") {
    os << pairs.size() << " pairs\n";
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      os << "  [" << i << "] " << pairs[i].label() << "  |s|=" << pairs[i].s_order()
         << "  |C|=" << pairs[i].centralizer_order() << "\n";
    }
  } else {
    Json j = ctx.header;
    j["count"] = pairs.size();
    Json list = Json::array();
    for (const auto& pr : pairs) list.push_back(pair_json(pr));
    j["pairs"] = list;
    os << j.dump(2) << "\n";
  }
  return {0, os.str()};
}

RunResult cmd_lattice(const Context& ctx) {
  const FiniteGroup& G = *ctx.G;
  const SubgroupLattice& lat = G.lattice();
  const std::size_t top = lat.index_of(Subgroup::whole(G));
  std::vector<std::size_t> class_size(lat.size(), 0);
  for (std::size_t i = 0; i < lat.size(); ++i) ++class_size[lat.class_rep(i)];
  std::ostringstream os;
  if (ctx.config.format == "csv") {
    os << "index,order,generators,class_size,normal,mu_to_top\n";
    for (std::size_t i : lat.class_reps()) {
      os << i << "," << lat[i].order() << "," << csv_field(join_perms(G, lat[i].generators())) << ","
         << class_size[i] << "," << (is_normal(lat[i]) ? 1 : 0) << "," << lat.moebius(i, top) << "\n";
    }
  } else if (ctx.config.format == "pretty") {
    os << lat.size() << " subgroups in " << lat.class_reps().size() << " classes\n";
    for (std::size_t i : lat.class_reps()) {
      os << "  |H|=" << lat[i].order() << " " << join_perms(G, lat[i].generators()) << " x" << class_size[i]
         << (is_normal(lat[i]) ? " normal" : "") << " mu(H,G)=" << lat.moebius(i, top) << "\n";
    }
  } else {
    Json j = ctx.header;
    j["subgroups"] = lat.size();
    Json classes = Json::array();
    for (std::size_t i : lat.class_reps()) {
      classes.push_back(Json{{"index", i},
                             {"order", lat[i].order()},
                             {"generators", subgroup_json(lat[i])},
                             {"class_size", class_size[i]},
                             {"normal", is_normal(lat[i])},
                             {"mu_to_top", lat.moebius(i, top)}});
    }
    j["classes"] = classes;
    os << j.dump(2) << "\n";
  }
  return {0, os.str()};
}

RunResult cmd_burnside(const Context& ctx) {
  const FiniteGroup& G = *ctx.G;
  const SubgroupLattice& lat = G.lattice();
  std::vector<Subgroup> reps;
  for (std::size_t i : lat.class_reps()) reps.push_back(lat[i]);
  std::ostringstream os;
  if (ctx.config.format == "csv" || ctx.config.format == "pretty") {
    os << "G/L";
    for (const auto& H : reps) os << "," << csv_field(join_perms(G, H.generators()));
    os << "\n";
    for (const auto& L : reps) {
      os << csv_field("G/" + join_perms(G, L.generators()));
      for (const auto& H : reps) os << "," << mark(L, H);
      os << "\n";
    }
    return {0, os.str()};
  }
  Json j = ctx.header;
  Json classes = Json::array();
  for (const auto& H : reps) classes.push_back(subgroup_json(H));
  j["classes"] = classes;
  Json marks = Json::array();
  for (const auto& L : reps) {
    Json row = Json::array();
    for (const auto& H : reps) row.push_back(mark(L, H));
    marks.push_back(row);
  }
  j["marks"] = marks;
  Json idem = Json::array();
  for (const auto& H : reps) {
    Json terms = Json::array();
    const BurnsideElement e = gluck_yoshida(ctx.G, H);
    for (const auto& [L, c] : e.coeffs()) {
      terms.push_back(Json{{"subgroup", subgroup_json(L)}, {"order", L.order()}, {"coeff", rational_text(c)}});
    }
    idem.push_back(Json{{"H", subgroup_json(H)}, {"terms", terms}});
  }
  j["idempotents"] = idem;
  os << j.dump(2) << "\n";
  return {0, os.str()};
}

RunResult cmd_species_table(const Context& ctx) {
  const ModularSetting s = setting_for(*ctx.G, ctx.config.p);
  const auto pairs = enumerate_pairs(ctx.G, ctx.config.p);
  const auto gens = standard_generators(ctx.G, s);
  std::ostringstream os;
  if (ctx.config.format == "csv" || ctx.config.format == "pretty") {
    os << "generator";
    for (const auto& pr : pairs) os << "," << csv_field(pr.label());
    os << "\n";
    for (const auto& gen : gens) {
      os << csv_field(generator_label(gen));
      for (const auto& pr : pairs) os << "," << csv_field(tau_generator(pr, gen).to_string());
      os << "\n";
    }
    return {0, os.str()};
  }
  Json j = ctx.header;
  j["conductor"] = s.conductor;
  Json cols = Json::array();
  for (const auto& pr : pairs) cols.push_back(pr.label());
  j["pairs"] = cols;
  Json rows = Json::array();
  for (const auto& gen : gens) {
    Json vals = Json::array();
    for (const auto& pr : pairs) vals.push_back(cyclotomic_json(tau_generator(pr, gen)));
    rows.push_back(Json{{"generator", generator_label(gen)}, {"values", vals}});
  }
  j["rows"] = rows;
  os << j.dump(2) << "\n";
  return {0, os.str()};
}

RunResult cmd_idempotents(const Context& ctx) {
  const auto reports = idempotent_reports(ctx.G, ctx.config.p);
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.delta_ok && r.routes_agree;
  std::ostringstream os;
  if (ctx.config.format == "csv") {
    os << "pair,terms,delta_ok,routes_agree\n";
    for (const auto& r : reports) {
      os << csv_field(r.pair.label()) << "," << r.element.terms().size() << "," << r.delta_ok << "," << r.routes_agree
         << "\n";
    }
  } else if (ctx.config.format == "pretty") {
    for (const auto& r : reports) {
      os << r.pair.label() << "  delta " << (r.delta_ok ? "ok" : "FAIL") << ", routes "
         << (r.routes_agree ? "agree" : "DIFFER") << "\n";
      for (const auto& [gen, c] : r.element.terms()) os << "    (" << c.to_string() << ") " << generator_label(gen) << "\n";
    }
  } else {
    Json j = ctx.header;
    Json list = Json::array();
    for (const auto& r : reports) {
      Json species = Json::array();
      for (const auto& v : r.species.values) species.push_back(cyclotomic_json(v));
      list.push_back(Json{{"pair", pair_json(r.pair)},
                          {"element", element_json(r.element)},
                          {"species", species},
                          {"delta_ok", r.delta_ok},
                          {"routes_agree", r.routes_agree}});
    }
    j["idempotents"] = list;
    j["passed"] = ok;
    os << j.dump(2) << "\n";
  }
  return {ok ? 0 : 1, os.str()};
}

RunResult checks_report(const Context& ctx, const std::vector<CheckResult>& checks) {
  bool ok = true;
  for (const auto& c : checks) ok = ok && c.passed();
  std::ostringstream os;
  if (ctx.config.format == "csv") {
    os << "check,cases,failures,passed\n";
    for (const auto& c : checks) os << c.name << "," << c.cases << "," << c.failures << "," << c.passed() << "\n";
  } else if (ctx.config.format == "pretty") {
    for (const auto& c : checks) {
      os << (c.passed() ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases";
      if (!c.passed()) os << ", " << c.failures << " failed";
      os << ")\n";
      for (const auto& f : c.failed) os << "    " << f << "\n";
    }
  } else {
    Json j = ctx.header;
    Json list = Json::array();
    for (const auto& c : checks) {
      list.push_back(Json{
          {"name", c.name}, {"cases", c.cases}, {"failures", c.failures}, {"passed", c.passed()}, {"failed", c.failed}});
    }
    j["checks"] = list;
    j["passed"] = ok;
    os << j.dump(2) << "\n";
  }
  return {ok ? 0 : 1, os.str()};
}

}  // namespace

GroupPtr parse_group_spec(const std::string& text, std::size_t cap) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw Error(ErrorCode::ParseError, "empty group spec");
  if (text[first] != '{') return named_group(text.substr(first, text.find_last_not_of(" \t\r\n") - first + 1), cap);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("group spec is not valid JSON: ") + e.what());
  }
  try {
    if (j.contains("name")) return named_group(j.at("name").get<std::string>(), cap);
    const int degree = j.at("degree").get<int>();
    if (degree < 1) throw Error(ErrorCode::ParseError, "degree must be positive");
    std::vector<Permutation> gens;
    for (const auto& g : j.at("generators")) {
      gens.push_back(Permutation::from_cycles(degree, g.get<std::vector<std::vector<int>>>()));
    }
    return close_generators(degree, std::move(gens), cap);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed group spec: ") + e.what());
  }
}

RunResult run(const RunConfig& config) {
  try {
    if (!is_prime(config.p)) return {2, "error: p must be prime\n"};
    if (config.format != "json" && config.format != "csv" && config.format != "pretty") {
      return {2, "error: format must be json, csv or pretty\n"};
    }
    if (config.max_order == 0 || config.oracle_n_cap <= 0 || config.oracle_dim_cap == 0) {
      return {2, "error: caps must be positive\n"};
    }
    Context ctx{config, parse_group_spec(config.group, config.max_order), {}};
    ctx.header = Json{{"command", config.command}, {"group", group_json(config.group, *ctx.G)}, {"p", config.p}};
    const std::string& c = config.command;
    if (c == "pairs") return cmd_pairs(ctx);
    if (c == "lattice") return cmd_lattice(ctx);
    if (c == "burnside") return cmd_burnside(ctx);
    if (c == "species-table") return cmd_species_table(ctx);
    if (c == "idempotents") return cmd_idempotents(ctx);
    if (c == "verify") {
      ctx.header["samples"] = config.samples;
      ctx.header["seed"] = config.seed;
      return checks_report(ctx, full_suite(ctx.G, config.p, config.samples, config.seed));
    }
    if (c == "oracle-check") {
      ctx.header["samples"] = config.samples;
      ctx.header["seed"] = config.seed;
      Rng rng(config.seed);
      return checks_report(
          ctx, {check_oracle(ctx.G, config.p, config.samples, rng, config.oracle_n_cap, config.oracle_dim_cap)});
    }
    return {2, "error: unknown command '" + c + "'\n"};
  } catch (const Error& e) {
    return {2, std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace ppring
