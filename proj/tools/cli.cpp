#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <limits>

#include "cluster_lattice/errors.hpp"
#include "cluster_lattice/serialization.hpp"
#include "render.hpp"

namespace cluster_lattice::cli {

namespace {

struct Options {
  std::string action;
  int n = 0;
  std::string p;
  std::string arcs;
  std::string arc;
  std::vector<std::string> ts;
  std::string what;
  std::string lattice = "nc";
  std::string mode = "aisle";
  std::string format;
  Offset window = 1;
  std::optional<std::uint64_t> seed;
  int size = 480;
  bool json = false;
  bool twice = false;
  bool annotate = false;
};

void emit(std::ostream& out, const Json& j) { out << j.dump() << "\n"; }

std::string partition_text(const Partition& p) {
  const auto s = to_compact(p);
  return s.empty() ? "{}" : s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void require_n(const Options& o, int min) {
  if (o.n < min) throw ValidationError("--n must be at least " + std::to_string(min));
}

const TStructure parse_one_ts(const Options& o) {
  if (o.ts.size() != 1) throw ValidationError("expected exactly one --ts");
  return parse_tstructure(o.ts.front());
}

std::pair<TStructure, TStructure> parse_two_ts(const Options& o) {
  if (o.ts.size() != 2) throw ValidationError("expected two --ts values");
  return {parse_tstructure(o.ts[0]), parse_tstructure(o.ts[1])};
}

Arc single_arc(const Options& o) {
  if (!o.arc.empty()) return parse_arc(o.arc);
  const auto list = parse_arc_list(o.arcs);
  if (list.size() != 1) throw ValidationError("expected one arc in --arc");
  return list.front();
}

std::vector<Arc> arcs_for(const Options& o, const ModelParams& model) {
  auto list = parse_arc_list(o.arcs);
  for (const auto& a : list) validate_arc(a, model);
  return list;
}

Json count_json(int n, const BigInt& c) {
  Json j{{"n", n}};
  if (c <= std::numeric_limits<std::uint64_t>::max()) {
    j["count"] = c.convert_to<std::uint64_t>();
  } else {
    j["count"] = c.str();
  }
  return j;
}

int cmd_partitions(const Options& o, bool nnc, std::ostream& out) {
  require_n(o, 1);
  if (o.action == "count") {
    if (o.n > 100000) throw ValidationError("--n is too large to count");
    const BigInt c = nnc ? nnc_count(o.n) : catalan(o.n);
    if (o.json) {
      emit(out, count_json(o.n, c));
    } else {
      out << c.str() << "\n";
    }
    return kExitOk;
  }
  const int guard = guard_from_env(kDefaultEnumerationGuard);
  const auto all = nnc ? nnc_enumerate(o.n, guard) : nc_enumerate(o.n, guard);
  if (o.json) {
    Json j = Json::array();
    for (const auto& p : all) j.push_back(to_json(p));
    emit(out, j);
  } else {
    for (const auto& p : all) out << partition_text(p) << "\n";
  }
  return kExitOk;
}

int cmd_kreweras(const Options& o, std::ostream& out) {
  const auto p = parse_compact(o.p, o.n);
  const auto k = kreweras(p);
  Json j{{"partition", to_json(p)}, {"complement", to_json(k)}};
  bool ok = true;
  if (o.twice) {
    const auto k2 = kreweras(k);
    ok = k2 == rotate(p, 1);
    j["twice"] = to_json(k2);
    j["rotation_ok"] = ok;
    if (!o.json) out << partition_text(k2) << "\nrotation: " << (ok ? "ok" : "FAILED") << "\n";
  } else if (!o.json) {
    out << partition_text(k) << "\n";
  }
  if (o.json) emit(out, j);
  return ok ? kExitOk : kExitInternal;
}

int cmd_thick(const Options& o, std::ostream& out) {
  require_n(o, 2);
  const ModelParams model(o.n);
  if (o.action == "gen") {
    const auto t = thick_generated(arcs_for(o, model), model);
    if (o.json) {
      emit(out, to_json(t));
    } else {
      out << partition_text(t.partition) << "\n";
    }
    return kExitOk;
  }
  const ThickSubcat t{parse_compact(o.p, o.n)};
  Json j = Json::array();
  for (const auto& a : arcs_for(o, model)) {
    const bool in = thick_contains(t, a);
    j.push_back({{"arc", to_json(a)}, {"member", in}});
    if (!o.json) out << format_arc(a) << " " << yes_no(in) << "\n";
  }
  if (o.json) emit(out, j);
  return kExitOk;
}

int cmd_tstruct(const Options& o, std::ostream& out) {
  const auto& act = o.action;
  if (act == "gen") {
    require_n(o, 2);
    const ModelParams model(o.n);
    const auto t = aisle_generated(arcs_for(o, model), model);
    if (o.json) {
      emit(out, to_json(t));
    } else {
      out << format_tstructure_compact(t) << "\n";
    }
    return kExitOk;
  }
  if (act == "meet" || act == "join" || act == "leq") {
    const auto [s, t] = parse_two_ts(o);
    if (act == "leq") {
      const bool r = ts_leq(s, t);
      if (o.json) {
        emit(out, Json{{"leq", r}});
      } else {
        out << yes_no(r) << "\n";
      }
      return kExitOk;
    }
    const auto r = act == "meet" ? ts_meet(s, t) : ts_join(s, t);
    if (o.json) {
      emit(out, to_json(r));
    } else {
      out << format_tstructure_compact(r) << "\n";
    }
    return kExitOk;
  }
  const auto t = parse_one_ts(o);
  if (act == "member") {
    Json j = Json::array();
    for (const auto& a : arcs_for(o, t.model())) {
      const bool x = aisle_contains(t, a);
      const bool y = coaisle_contains(t, a);
      j.push_back({{"arc", to_json(a)}, {"aisle", x}, {"coaisle", y}});
      if (!o.json) out << format_arc(a) << " aisle=" << yes_no(x) << " coaisle=" << yes_no(y) << "\n";
    }
    if (o.json) emit(out, j);
  } else if (act == "coaisle") {
    const auto c = coaisle_presentation(t);
    if (o.json) {
      emit(out, to_json(c));
    } else {
      out << partition_text(c.partition) << " @";
      for (const auto& y : c.bounds) out << " " << format_point(y);
      out << "\n";
    }
  } else if (act == "heart") {
    const ArcObject h(heart(t));
    if (o.json) {
      emit(out, to_json(h));
    } else {
      for (const auto& a : h.summands()) out << format_arc(a) << "\n";
    }
  } else if (act == "approx") {
    const auto arc = single_arc(o);
    validate_arc(arc, t.model());
    ApproxTrace trace;
    const auto tri = approx_triangle(t, arc, &trace);
    if (o.json) {
      emit(out, to_json(tri));
    } else {
      out << "Z: " << format_arc_list(tri.first.summands()) << "\n";
      out << "T: " << format_arc_list(tri.middle.summands()) << "\n";
      out << "W: " << format_arc_list(tri.last.summands()) << "\n";
      for (const auto& [zp, z] : trace.dropped_connectors) {
        out << "dropped trivial connector {" << format_point(zp) << "," << format_point(z) << "}\n";
      }
    }
  } else {  // classify
    const auto c = equiv_class(t);
    Json j{{"class", to_json(c)},
           {"nondegenerate", is_nondegenerate(t)},
           {"left_nondegenerate", is_left_nondegenerate(t)},
           {"right_nondegenerate", is_right_nondegenerate(t)},
           {"bounded_above", is_bounded_above(t)},
           {"bounded_below", is_bounded_below(t)}};
    if (o.json) {
      emit(out, j);
    } else {
      out << "class: " << equiv_class_label(c) << "\n";
      for (const auto* key :
           {"nondegenerate", "left_nondegenerate", "right_nondegenerate", "bounded_above", "bounded_below"}) {
        out << key << ": " << yes_no(j[key].get<bool>()) << "\n";
      }
    }
  }
  return kExitOk;
}

HasseGraph hasse_for(const std::string& what, int n, Offset window) {
  const int guard = guard_from_env(kDefaultEnumerationGuard);
  if (what == "nc" || what == "nnc") {
    if (n < 1) throw ValidationError("--n must be at least 1");
    const auto all = what == "nc" ? nc_enumerate(n, guard) : nnc_enumerate(n, guard);
    return hasse_export(std::span<const Partition>(all));
  }
  if (what == "ts") {
    if (window < 0) throw ValidationError("--W must be non-negative");
    const auto all = enumerate_window_tstructures(ModelParams(n), -window, window, guard);
    return hasse_export(std::span<const TStructure>(all));
  }
  if (what == "equiv") {
    const auto lat = equiv_lattice(n, guard_from_env(kEquivLatticeGuard));
    return hasse_export(std::span<const EquivClass>(lat.classes));
  }
  throw ValidationError("unknown lattice '" + what + "' (nc, nnc, ts or equiv)");
}

int cmd_lattice(const Options& o, std::ostream& out) {
  if (o.action == "hasse") {
    const auto g = hasse_for(o.what.empty() ? o.lattice : o.what, o.n, o.window);
    const auto format = o.format.empty() ? RenderFormat::kDot : parse_render_format(o.format);
    if (format == RenderFormat::kDot && !o.json) {
      out << to_dot(g);
    } else if (format == RenderFormat::kSvg) {
      throw ValidationError("Hasse diagrams are written as dot or json");
    } else {
      emit(out, to_json(g));
    }
    return kExitOk;
  }
  const auto r = nondeg_equiv_iso_check(o.n, guard_from_env(kEquivLatticeGuard));
  Json j{{"n", o.n},
         {"classes", r.classes},
         {"bijective", r.bijective},
         {"order_isomorphism", r.order_isomorphism},
         {"operations_preserved", r.operations_preserved},
         {"top", to_json(r.top_partition)},
         {"bottom", to_json(r.bottom_partition)},
         {"top_bounded_above", r.top_bounded_above},
         {"top_bounded_below", r.top_bounded_below},
         {"bottom_bounded_above", r.bottom_bounded_above},
         {"bottom_bounded_below", r.bottom_bounded_below}};
  if (o.json) {
    emit(out, j);
  } else {
    out << "non-degenerate classes: " << r.classes << "\n";
    out << "bijective onto NC_n: " << yes_no(r.bijective) << "\n";
    out << "order isomorphism: " << yes_no(r.order_isomorphism) << "\n";
    out << "meet and join preserved: " << yes_no(r.operations_preserved) << "\n";
    out << "top: " << partition_text(r.top_partition) << " (bounded above " << yes_no(r.top_bounded_above)
        << ", bounded below " << yes_no(r.top_bounded_below) << ")\n";
    out << "bottom: " << partition_text(r.bottom_partition) << " (bounded above " << yes_no(r.bottom_bounded_above)
        << ", bounded below " << yes_no(r.bottom_bounded_below) << ")\n";
  }
  return kExitOk;
}

Json arcs_json(const std::vector<Arc>& arcs) {
  Json j = Json::array();
  for (const auto& a : arcs) j.push_back(to_json(a));
  return j;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  require_n(o, 2);
  if (o.window < 0) throw ValidationError("--W must be non-negative");
  const ModelParams model(o.n);
  const auto seeds = arcs_for(o, model);
  const Window w{o.window};
  if (o.action == "close") {
    ClosureOptions opt;
    opt.shuffle_seed = o.seed;
    if (o.mode != "aisle" && o.mode != "thick") throw ValidationError("--mode is aisle or thick");
    const auto r = o.mode == "aisle" ? window_aisle_closure(seeds, w, model, opt) : window_thick_closure(seeds, w, model, opt);
    emit(out, to_json(r));
    return kExitOk;
  }
  const auto r = compare_with_classification(seeds, w, model);
  emit(out, Json{{"margin", r.margin},
                 {"ok", r.ok()},
                 {"aisle_extra", arcs_json(r.aisle_extra)},
                 {"aisle_missing", arcs_json(r.aisle_missing)},
                 {"thick_extra", arcs_json(r.thick_extra)},
                 {"thick_missing", arcs_json(r.thick_missing)}});
  return kExitOk;
}

int cmd_render(const Options& o, std::ostream& out) {
  RenderSpec spec;
  spec.format = o.format.empty() ? RenderFormat::kSvg : parse_render_format(o.format);
  spec.annotate = o.annotate;
  spec.size = o.size;
  const std::string what = o.what.empty() ? "arcs" : o.what;
  if (what == "hasse") {
    const auto g = hasse_for(o.lattice, o.n, o.window);
    if (spec.format == RenderFormat::kDot) {
      out << to_dot(g);
    } else if (spec.format == RenderFormat::kJson) {
      emit(out, to_json(g));
    } else {
      throw ValidationError("Hasse diagrams are rendered as dot or json, not svg");
    }
    return kExitOk;
  }
  DiscScene scene;
  if (what == "arcs") {
    require_n(o, 2);
    scene = arcs_scene(o.n, arcs_for(o, ModelParams(o.n)));
  } else if (what == "aisle" || what == "coaisle") {
    const auto t = parse_one_ts(o);
    scene = what == "aisle" ? aisle_scene(t) : coaisle_scene(t);
    for (const auto& a : arcs_for(o, t.model())) scene.arcs.push_back(a);
    std::sort(scene.arcs.begin(), scene.arcs.end());
  } else if (what == "thick") {
    require_n(o, 2);
    scene = thick_scene(parse_compact(o.p, o.n));
  } else if (what == "approx") {
    const auto t = parse_one_ts(o);
    const auto arc = single_arc(o);
    validate_arc(arc, t.model());
    scene = approx_scene(t, arc);
  } else {
    throw ValidationError("unknown render object '" + what + "' (arcs, aisle, coaisle, thick, approx, hasse)");
  }
  if (spec.format == RenderFormat::kSvg) {
    out << render_svg(scene, spec);
  } else if (spec.format == RenderFormat::kJson) {
    emit(out, scene_to_json(scene));
  } else {
    throw ValidationError("disc pictures are rendered as svg or json, not dot");
  }
  return kExitOk;
}

CLI::App* with_action(CLI::App* sub, Options& o, std::vector<std::string> actions) {
  sub->add_option("action", o.action, "one of: " + CLI::detail::join(actions, ", "))
      ->required()
      ->check(CLI::IsMember(std::move(actions)));
  return sub;
}

}  // namespace

int guard_from_env(int fallback) {
  const char* raw = std::getenv(kGuardEnv);
  if (raw == nullptr || *raw == '\0') return fallback;
  const std::string_view text(raw);
  int value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || value <= 0) {
    throw ValidationError(std::string(kGuardEnv) + " must be a positive integer, got '" + std::string(text) + "'");
  }
  return value;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const CliHooks& hooks) {
  Options o;
  CLI::App app{"Thick subcategories and t-structures of discrete cluster categories of type A", "cluster-lattice"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  const auto add_json = [&](CLI::App* s) { s->add_flag("--json", o.json, "machine-readable output"); };
  const auto add_n = [&](CLI::App* s) { s->add_option("--n", o.n, "number of limit points"); };
  const auto add_arcs = [&](CLI::App* s) { s->add_option("--arcs", o.arcs, "arc list, e.g. '[1:0,3:0];[2:0,4:0]'"); };

  auto* nc = with_action(app.add_subcommand("nc", "non-crossing partitions of [n]"), o, {"list", "count"});
  auto* nnc = with_action(app.add_subcommand("nnc", "non-crossing partitions of subsets of [n]"), o, {"list", "count"});
  for (auto* s : {nc, nnc}) {
    add_n(s);
    add_json(s);
  }

  auto* kr = app.add_subcommand("kreweras", "Kreweras complement");
  kr->add_option("--p", o.p, "partition, e.g. '1,3|2|4,5,6'")->required();
  add_n(kr);
  kr->add_flag("--twice", o.twice, "print K(K(P)) and compare with the rotation of P");
  add_json(kr);

  auto* thick = with_action(app.add_subcommand("thick", "thick subcategories"), o, {"gen", "member"});
  add_n(thick);
  add_arcs(thick);
  thick->add_option("--p", o.p, "non-exhaustive partition naming the subcategory");
  add_json(thick);

  auto* ts = with_action(app.add_subcommand("tstruct", "t-structures (P, x)"), o,
                         {"member", "coaisle", "heart", "approx", "meet", "join", "leq", "gen", "classify"});
  ts->add_option("--ts", o.ts, "t-structure as JSON or '1,2@1:0,2:0'; repeat for meet, join, leq");
  add_n(ts);
  add_arcs(ts);
  ts->add_option("--arc", o.arc, "single arc for approx");
  add_json(ts);

  auto* lat = with_action(app.add_subcommand("lattice", "finite lattices and Hasse diagrams"), o, {"hasse", "iso"});
  lat->add_option("--what", o.what, "nc, nnc, ts or equiv");
  add_n(lat);
  lat->add_option("--W", o.window, "decoration offsets in [-W, W] for --what ts");
  lat->add_option("--format", o.format, "dot or json");
  add_json(lat);

  auto* oracle = with_action(app.add_subcommand("oracle", "window closures (output is JSON)"), o, {"close", "compare"});
  oracle->add_option("--mode", o.mode, "aisle or thick")->check(CLI::IsMember({"aisle", "thick"}));
  add_n(oracle);
  oracle->add_option("--W", o.window, "window radius");
  add_arcs(oracle);
  oracle->add_option("--seed", o.seed, "process the worklist in a seeded random order");
  add_json(oracle);

  auto* render = app.add_subcommand("render", "SVG disc pictures, DOT Hasse diagrams");
  render->add_option("--what", o.what, "arcs, aisle, coaisle, thick, approx or hasse");
  render->add_option("--lattice", o.lattice, "nc, nnc, ts or equiv when --what hasse");
  add_n(render);
  add_arcs(render);
  render->add_option("--arc", o.arc, "arc T for --what approx");
  render->add_option("--ts", o.ts, "t-structure");
  render->add_option("--p", o.p, "partition for --what thick");
  render->add_option("--W", o.window, "decoration window for --lattice ts");
  render->add_option("--format", o.format, "svg, dot or json");
  render->add_option("--size", o.size, "pixels");
  render->add_flag("--annotate", o.annotate, "label limit points and decorations");

  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  std::uint64_t verify_seed = 1;
  verify->add_option("--seed", verify_seed, "seed for the sampled checks");
  add_json(verify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*nc) return cmd_partitions(o, false, out);
    if (*nnc) return cmd_partitions(o, true, out);
    if (*kr) return cmd_kreweras(o, out);
    if (*thick) return cmd_thick(o, out);
    if (*ts) return cmd_tstruct(o, out);
    if (*lat) return cmd_lattice(o, out);
    if (*oracle) return cmd_oracle(o, out);
    if (*render) return cmd_render(o, out);
    if (*verify) {
      if (!hooks.verify) {
        err << "error: this build has no acceptance suite\n";
        return kExitInternal;
      }
      return hooks.verify(VerifyRequest{verify_seed, o.json}, out);
    }
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << " (raise " << kGuardEnv << " to allow it)\n";
    return kExitGuard;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace cluster_lattice::cli
