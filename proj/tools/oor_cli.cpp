// oor: decide, orient, draw and verify outside-obstacle representations.
//
// Exit codes: 0 success / representable, 1 negative answer, 2 invalid input,
// 3 internal error.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oor/embedder.hpp"
#include "oor/generators.hpp"
#include "oor/io.hpp"
#include "oor/obstacle.hpp"
#include "oor/orientation.hpp"
#include "oor/recognizer.hpp"
#include "oor/svg.hpp"
#include "oor/verify.hpp"

using namespace oor;

namespace {

struct Options {
  std::string input = "-";
  std::string output = "-";
  std::string format = "json";
  std::string family = "fan";
  std::vector<std::int64_t> sizes;
  std::uint64_t seed = 0;
  bool oracle = false;
  int max_oracle_chords = 20;
  int repeat = 1;
};

void emit(const Options& opt, const Json& j) { write_text(opt.output, j.dump(2) + "\n"); }

struct Decision {
  Recognition<InnerChordalGraph> recognition;
  std::optional<ConstructionTree> tree;
  std::optional<ChordOrientation> orientation;
  bool representable = false;
};

Decision decide(const Graph& g, const Options& opt) {
  Decision d{recognize(g), std::nullopt, std::nullopt, false};
  if (auto* ic = std::get_if<InnerChordalGraph>(&d.recognition)) {
    d.tree = build_construction_tree(*ic);
    d.orientation = opt.oracle ? enumerate_witness(*ic, opt.max_oracle_chords) : solve_dp(*d.tree);
    d.representable = d.orientation.has_value();
  }
  return d;
}

Json decision_json(const Decision& d, const Options& opt) {
  Json j;
  j["representable"] = d.representable;
  j["method"] = opt.oracle ? "enumeration" : "dp";
  if (auto* r = std::get_if<RejectReason>(&d.recognition)) j["reason"] = to_json(*r);
  if (d.tree) j["tree"] = to_json(*d.tree);
  if (d.orientation) j["orientation"] = to_json(*d.orientation);
  if (auto* ic = std::get_if<InnerChordalGraph>(&d.recognition)) {
    j["inner_chordal"] = to_json(*ic);
    if (!d.representable) j["reason"] = {{"kind", "no_orientation"}, {"detail", "no outside-obstacle chord orientation exists"}};
  }
  return j;
}

Graph read_graph(const Options& opt) { return graph_from_json(parse_json(read_text(opt.input))); }

int cmd_check(const Options& opt) {
  Decision d = decide(read_graph(opt), opt);
  emit(opt, decision_json(d, opt));
  return d.representable ? 0 : 1;
}

int cmd_orient(const Options& opt) {
  Decision d = decide(read_graph(opt), opt);
  if (!d.representable) {
    emit(opt, decision_json(d, opt));
    return 1;
  }
  emit(opt, to_json(*d.orientation));
  return 0;
}

// Drawing for a graph: the biconnected pipeline, or the outerplanar route for
// graphs with cut vertices.
std::optional<Drawing> draw_graph(const Graph& g, const Options& opt, Json& why) {
  Decision d = decide(g, opt);
  if (d.representable) return embed(std::get<InnerChordalGraph>(d.recognition), *d.orientation);
  if (auto* r = std::get_if<RejectReason>(&d.recognition); r && r->kind == RejectKind::not_biconnected) {
    auto drawn = represent_outerplanar(g);
    if (auto* dr = std::get_if<Drawing>(&drawn)) return *dr;
    why = to_json(std::get<RejectReason>(drawn));
    return std::nullopt;
  }
  why = decision_json(d, opt);
  return std::nullopt;
}

void emit_drawing(const Options& opt, const Drawing& d, const std::optional<SimplePolygon>& obstacle) {
  if (opt.format == "svg") {
    write_text(opt.output, render_svg(d, obstacle));
    return;
  }
  Json j = to_json(d);
  if (obstacle) j["obstacle"] = to_json(*obstacle);
  emit(opt, j);
}

int cmd_draw(const Options& opt) {
  Json why;
  auto d = draw_graph(read_graph(opt), opt, why);
  if (!d) {
    emit(opt, why);
    return 1;
  }
  emit_drawing(opt, *d, std::nullopt);
  return 0;
}

int cmd_verify(const Options& opt) {
  Drawing d = drawing_from_json(parse_json(read_text(opt.input)));
  VerificationReport r = is_plane_oor(d);
  emit(opt, to_json(r));
  return r.verdict ? 0 : 1;
}

// Accepts a drawing, or a graph that is drawn first.
int cmd_obstacle(const Options& opt) {
  Json in = parse_json(read_text(opt.input));
  Drawing d;
  if (in.contains("points")) {
    d = drawing_from_json(in);
  } else {
    Json why;
    auto drawn = draw_graph(graph_from_json(in), opt, why);
    if (!drawn) {
      emit(opt, why);
      return 1;
    }
    d = *drawn;
  }
  SimplePolygon poly = build_obstacle(d);
  if (opt.format == "svg") {
    emit_drawing(opt, d, poly);
  } else {
    Json j = to_json(poly);
    j["drawing"] = to_json(d);
    emit(opt, j);
  }
  return 0;
}

Family family_of(const Options& opt) {
  auto f = parse_family(opt.family);
  if (!f) throw InputError("unknown family '" + opt.family + "'");
  return *f;
}

int cmd_gen(const Options& opt) {
  InstanceSpec spec{family_of(opt), opt.sizes.empty() ? 6 : opt.sizes.front(), opt.seed};
  emit(opt, to_json(generate(spec), spec));
  return 0;
}

int cmd_bench(const Options& opt) {
  using Clock = std::chrono::steady_clock;
  auto ms = [](Clock::duration d) { return std::chrono::duration<double, std::milli>(d).count(); };
  std::vector<std::int64_t> sizes = opt.sizes;
  if (sizes.empty()) sizes = {1000, 10000, 100000};
  std::string out;
  for (std::int64_t n : sizes) {
    for (int rep = 0; rep < opt.repeat; ++rep) {
      InstanceSpec spec{family_of(opt), n, opt.seed + static_cast<std::uint64_t>(rep)};
      auto t0 = Clock::now();
      Instance inst = generate(spec);
      auto t1 = Clock::now();
      auto rec = recognize(inst.graph);
      auto t2 = Clock::now();
      bool verdict = false;
      Clock::time_point t3 = t2, t4 = t2;
      if (auto* ic = std::get_if<InnerChordalGraph>(&rec)) {
        auto tree = build_construction_tree(*ic);
        t3 = Clock::now();
        verdict = solve_dp(tree).has_value();
        t4 = Clock::now();
      }
      Json rec_json = {{"family", opt.family},
                       {"n", inst.graph.vertex_count()},
                       {"size", n},
                       {"seed", spec.seed},
                       {"generate_ms", ms(t1 - t0)},
                       {"recognize_ms", ms(t2 - t1)},
                       {"tree_ms", ms(t3 - t2)},
                       {"dp_ms", ms(t4 - t3)},
                       {"decision_ms", ms(t4 - t1)},
                       {"verdict", verdict}};
      out += rec_json.dump() + "\n";
    }
  }
  write_text(opt.output, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Plane outside-obstacle representations: decide, orient, draw, verify"};
  app.require_subcommand(1);
  Options opt;

  auto io = [&](CLI::App* sub) {
    sub->add_option("--input,-i", opt.input, "input JSON file, - for stdin");
    sub->add_option("--output,-o", opt.output, "output file, - for stdout");
  };
  auto oracle = [&](CLI::App* sub) {
    sub->add_flag("--oracle", opt.oracle, "decide by exhaustive orientation search");
    sub->add_option("--max-oracle-chords", opt.max_oracle_chords, "chord limit for --oracle")->capture_default_str();
  };
  auto format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "json or svg")->check(CLI::IsMember({"json", "svg"}))->capture_default_str();
  };
  auto instance = [&](CLI::App* sub) {
    sub->add_option("--family", opt.family, "instance family")->capture_default_str();
    sub->add_option("--seed", opt.seed, "random seed")->capture_default_str();
  };

  auto* check = app.add_subcommand("check", "recognize and decide (exit 0 representable, 1 not, 2 invalid)");
  io(check), oracle(check);
  auto* orient = app.add_subcommand("orient", "emit a valid chord orientation");
  io(orient), oracle(orient);
  auto* draw = app.add_subcommand("draw", "emit an exact drawing");
  io(draw), oracle(draw), format(draw);
  auto* verify = app.add_subcommand("verify", "verify a drawing (exit 0 iff it is a plane outside-obstacle drawing)");
  io(verify);
  auto* obstacle = app.add_subcommand("obstacle", "build and verify an obstacle for a drawing or graph");
  io(obstacle), format(obstacle);
  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("--output,-o", opt.output, "output file, - for stdout");
  instance(gen);
  gen->add_option("--size", opt.sizes, "size parameter")->expected(1);
  auto* bench = app.add_subcommand("bench", "time recognition and decision, one JSON record per line");
  bench->add_option("--output,-o", opt.output, "output file, - for stdout");
  instance(bench);
  bench->add_option("--size", opt.sizes, "sizes (repeatable; default 1000 10000 100000)");
  bench->add_option("--repeat", opt.repeat, "runs per size")->check(CLI::PositiveNumber)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) return cmd_check(opt);
    if (*orient) return cmd_orient(opt);
    if (*draw) return cmd_draw(opt);
    if (*verify) return cmd_verify(opt);
    if (*obstacle) return cmd_obstacle(opt);
    if (*gen) return cmd_gen(opt);
    if (*bench) return cmd_bench(opt);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ObstacleError& e) {
    std::cerr << "obstacle: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
