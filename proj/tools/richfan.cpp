// Batch front end for the richfan library.
//
// Exit codes: 0 success, 1 domain error (JSON on stderr), 2 malformed input
// or bad usage, 3 a boolean check came out false.

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "richfan/error.hpp"
#include "richfan/io.hpp"
#include "richfan/subdivision.hpp"
#include "richfan/svg.hpp"
#include "richfan/tropical.hpp"

using namespace richfan;
using io::json;

namespace {

constexpr int kPropertyFails = 3;

struct Options {
  std::string input;
  std::string r = "1";
  std::string contract;
  std::string out;
  std::string format = "json";
  std::string fan;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return io::parse(buf.str());
}

void write_output(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  const std::filesystem::path target(opt.out);
  std::filesystem::path tmp = target;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    f << text;
    if (!f.flush()) throw std::runtime_error("write to '" + tmp.string() + "' failed");
  }
  std::filesystem::rename(tmp, target);
}

void write_json(const Options& opt, const json& j) { write_output(opt, j.dump(2) + "\n"); }

std::vector<std::string> split_ids(const std::string& list) {
  std::vector<std::string> ids;
  std::stringstream ss(list);
  for (std::string id; std::getline(ss, id, ',');)
    if (!id.empty()) ids.push_back(id);
  return ids;
}

TropicalGraph load_graph(const Options& opt) {
  TropicalGraph g = io::graph_from_json(read_json(opt.input));
  if (opt.contract.empty()) return g;
  return contract(g, g.edge_indices(split_ids(opt.contract)));
}

Int finite_r(const Options& opt) {
  const Level r = Level::parse(opt.r);
  if (r.is_infinite()) throw Error(ErrorCode::InvalidArgument, "this command needs a finite r");
  return r.value();
}

// A fan document, or a graph whose weakly rich fan is meant.
Fan load_fan(const Options& opt) {
  const json j = read_json(opt.input);
  if (j.is_object() && j.contains("cones")) return io::fan_from_json(j);
  TropicalGraph g = io::graph_from_json(j);
  if (!opt.contract.empty()) g = contract(g, g.edge_indices(split_ids(opt.contract)));
  return weakly_rich_fan(g, finite_r(opt));
}

json id_lists(const TropicalGraph& g, const std::vector<EdgeSet>& sets) {
  json out = json::array();
  for (const auto& s : sets) out.push_back(g.edge_ids(s));
  return out;
}

int run(const std::string& verb, const Options& opt) {
  if (verb == "cuts") {
    const TropicalGraph g = load_graph(opt);
    write_json(opt, {{"cuts", id_lists(g, enumerate_cuts(g))}});
  } else if (verb == "blocks") {
    const TropicalGraph g = load_graph(opt);
    write_json(opt, {{"components", id_lists(g, circuit_components(g))}});
  } else if (verb == "contract") {
    write_json(opt, io::to_json(load_graph(opt)));
  } else if (verb == "check-rich") {
    const TropicalCurve c = io::curve_from_json(read_json(opt.input));
    const Level r = Level::parse(opt.r);
    const bool rich = is_r_rich(c, r);
    write_json(opt, {{"r", r.str()}, {"rich", rich}});
    return rich ? 0 : kPropertyFails;
  } else if (verb == "check-weakly-rich") {
    const json j = read_json(opt.input);
    const Int r = finite_r(opt);
    const bool rich = j.is_object() && j.contains("sigma_rays")
                          ? family_is_weakly_r_rich(io::family_from_json(j), r)
                          : is_weakly_r_rich(io::curve_from_json(j), r);
    write_json(opt, {{"r", r}, {"weakly_rich", rich}});
    return rich ? 0 : kPropertyFails;
  } else if (verb == "basic-model") {
    const TropicalCurve c = io::curve_from_json(read_json(opt.input));
    const Level r = Level::parse(opt.r);
    const BasicModel b = basic_model(c, r);
    json multipliers = json::object();
    for (std::size_t e = 0; e < c.graph().edge_count(); ++e) multipliers[c.graph().edge(e).id] = b.multipliers[e];
    write_json(opt, {{"components", id_lists(c.graph(), b.components)},
                     {"multipliers", multipliers},
                     {"roots", b.roots},
                     {"is_basic", b.is_basic},
                     {"model", io::to_json(b.model)}});
  } else if (verb == "ideal") {
    write_json(opt, io::to_json(richness_ideal(load_graph(opt), finite_r(opt))));
  } else if (verb == "subdivide") {
    write_json(opt, io::to_json(weakly_rich_fan(load_graph(opt), finite_r(opt))));
  } else if (verb == "verify-fan") {
    const bool complete = is_complete_on_orthant(load_fan(opt));
    write_json(opt, {{"complete", complete}});
    return complete ? 0 : kPropertyFails;
  } else if (verb == "smoothness") {
    const SmoothnessReport rep = smoothness_report(load_fan(opt));
    write_json(opt, {{"unimodular", rep.unimodular}, {"smooth", rep.smooth}});
    return rep.smooth ? 0 : kPropertyFails;
  } else if (verb == "factors") {
    const RealFamily fam = io::family_from_json(read_json(opt.input));
    const Fan fan = opt.fan.empty() ? weakly_rich_fan(fam.graph(), finite_r(opt))
                                    : io::fan_from_json(read_json(opt.fan));
    const auto cone = factoring_cone(fam, fan);
    write_json(opt, {{"factors", cone.has_value()}, {"cone", cone ? json(*cone) : json(nullptr)}});
    return cone ? 0 : kPropertyFails;
  } else if (verb == "cross-section") {
    const CrossSection cs = cross_section(load_fan(opt));
    if (opt.format == "json")
      write_json(opt, io::to_json(cs));
    else
      write_output(opt, render_svg(cs));
  }
  return 0;
}

void report(ErrorCode code, const std::string& message) {
  std::cerr << json{{"error", to_string(code)}, {"message", message}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Richness conditions, richness ideals and weakly rich subdivisions of tropical curves"};
  app.require_subcommand(1);
  Options opt;

  struct Verb {
    const char* name;
    const char* help;
    bool graph_input;
  };
  const Verb verbs[] = {
      {"cuts", "list the cuts of a graph", true},
      {"blocks", "list the circuit-connected components of a graph", true},
      {"contract", "contract the edges given by --contract", true},
      {"check-rich", "is a curve r-rich (r may be inf)", false},
      {"check-weakly-rich", "is a curve or a family weakly r-rich", false},
      {"basic-model", "root map and basic model of an r-rich curve", false},
      {"ideal", "richness ideal of a graph", true},
      {"subdivide", "weakly rich subdivision of a graph", true},
      {"verify-fan", "is a fan complete on the orthant", true},
      {"smoothness", "unimodularity of every maximal cone", true},
      {"factors", "does a family factor through a fan", false},
      {"cross-section", "draw a rank 3 fan on the simplex", true},
  };
  for (const auto& v : verbs) {
    CLI::App* sub = app.add_subcommand(v.name, v.help);
    sub->add_option("input", opt.input, "input JSON")->required()->check(CLI::ExistingFile);
    sub->add_option("--r", opt.r, "richness level: positive integer, or inf where allowed");
    sub->add_option("--out", opt.out, "output path (default stdout)");
    if (v.graph_input) sub->add_option("--contract", opt.contract, "comma-separated edge ids to contract first");
    if (std::string(v.name) == "cross-section")
      sub->add_option("--format", opt.format, "svg or json")->check(CLI::IsMember({"svg", "json"}));
    else
      sub->add_option("--format", opt.format, "json")->check(CLI::IsMember({"json"}));
    if (std::string(v.name) == "factors") sub->add_option("--fan", opt.fan, "fan JSON (default: weakly rich fan)");
  }
  opt.format.clear();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  const std::string verb = app.get_subcommands().front()->get_name();
  if (opt.format.empty()) opt.format = verb == "cross-section" ? "svg" : "json";
  if (verb == "contract" && opt.contract.empty()) {
    report(ErrorCode::InvalidArgument, "contract needs --contract");
    return 2;
  }

  try {
    return run(verb, opt);
  } catch (const Error& e) {
    report(e.code(), e.what());
    return e.code() == ErrorCode::MalformedInput ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "Internal"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
}
