#include "mnm/cli.hpp"

#include <charconv>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mnm/io.hpp"

namespace mnm {

namespace {

double parse_num(const std::string& s) {
  double v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw error(errc::parse_error, "'" + s + "' is not a number");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t from = 0;
  while (true) {
    size_t at = s.find(sep, from);
    if (at == std::string::npos) {
      out.push_back(s.substr(from));
      return out;
    }
    out.push_back(s.substr(from, at - from));
    from = at + 1;
  }
}

std::pair<double, double> parse_pair(const std::string& s) {
  auto parts = split(s, s.find(':') != std::string::npos ? ':' : ',');
  if (parts.size() != 2)
    throw error(errc::parse_error, "expected two ':'-separated numbers, got '" + s + "'");
  return {parse_num(parts[0]), parse_num(parts[1])};
}

StairKind stair_kind(const std::string& name) {
  if (name == "ord") return StairKind::OrdStair;
  if (name == "rel") return StairKind::RelStair;
  if (name == "extminus") return StairKind::ExtMinusStair;
  return StairKind::ExtStair;
}

PointCloud load_cloud(const std::string& path) {
  std::string text = io::read_file(path);
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
    return io::parse_cloud_json(text);
  return io::parse_cloud_csv(text);
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Mapper and MultiNerve Mapper toolkit for scalar fields"};
  app.require_subcommand(1);

  long seed = 0;
  app.add_option("--seed", seed, "seed for randomized pipelines (reserved)");

  std::string cover_path, cloud_path, complex_path, tele_path, out_path, plot_path;
  std::string connectivity = "vertex", variant_name = "mapper", staircase_name, uniform_spec;
  std::string merge_spec, split_spec, shift_spec;
  std::vector<std::string> sig_paths;
  double delta = 0;
  bool multinerve_flag = false, perturb = false, canon = false, emit_graph = false;

  auto add_cover = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--cover", cover_path, "cover JSON (array of [lo, hi])");
    if (required) opt->required();
  };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", out_path, "write output here too"); };
  auto add_plot = [&](CLI::App* sub) { sub->add_option("--plot", plot_path, "write an SVG plot"); };
  auto add_variant = [&](CLI::App* sub) {
    sub->add_option("--variant", variant_name, "mapper or multinerve")
        ->check(CLI::IsMember({"mapper", "multinerve"}));
    sub->add_flag("--multinerve", multinerve_flag, "shorthand for --variant multinerve");
  };

  auto* cover_cmd = app.add_subcommand("cover", "validate or generate a cover");
  add_cover(cover_cmd, false);
  cover_cmd->add_option("--uniform", uniform_spec, "generate: lo:hi:n:overlap");
  cover_cmd->add_option("--staircase", staircase_name, "export a staircase instead")
      ->check(CLI::IsMember({"ord", "rel", "extminus", "ext"}));
  add_out(cover_cmd);
  add_plot(cover_cmd);

  auto* pers_cmd = app.add_subcommand("persistence", "extended persistence of a complex");
  pers_cmd->add_option("--complex", complex_path)->required();
  pers_cmd->add_flag("--perturb", perturb, "break ties by vertex index");
  add_cover(pers_cmd, false);
  add_out(pers_cmd);
  add_plot(pers_cmd);

  auto* reeb_cmd = app.add_subcommand("reeb", "Reeb graph of a complex");
  reeb_cmd->add_option("--complex", complex_path)->required();
  add_out(reeb_cmd);

  auto* mapper_cmd = app.add_subcommand("mapper", "Mapper of a point cloud");
  mapper_cmd->add_option("--cloud", cloud_path)->required();
  mapper_cmd->add_option("--delta", delta, "Rips threshold")->required();
  add_cover(mapper_cmd, true);
  mapper_cmd->add_option("--connectivity", connectivity, "vertex or edge")
      ->check(CLI::IsMember({"vertex", "edge"}));
  add_variant(mapper_cmd);
  add_out(mapper_cmd);

  auto* sig_cmd = app.add_subcommand("signature", "staircase-pruned signature");
  sig_cmd->add_option("--cloud", cloud_path, "point cloud (with --delta)");
  sig_cmd->add_option("--delta", delta, "Rips threshold");
  sig_cmd->add_option("--complex", complex_path, "simplicial complex input");
  add_cover(sig_cmd, true);
  add_variant(sig_cmd);
  add_out(sig_cmd);
  add_plot(sig_cmd);

  auto* dist_cmd = app.add_subcommand("distance", "staircase-bottleneck distance");
  dist_cmd->add_option("--sig", sig_paths, "signature JSON (give twice)")->expected(2);
  add_cover(dist_cmd, true);
  add_variant(dist_cmd);
  add_out(dist_cmd);

  auto* tele_cmd = app.add_subcommand("telescope", "telescope operations");
  tele_cmd->add_option("--in,--telescope", tele_path)->required();
  tele_cmd->add_option("--merge", merge_spec, "merge a:b");
  tele_cmd->add_option("--split", split_spec, "split crit:eps");
  tele_cmd->add_option("--shift", shift_spec, "shift crit:eps");
  tele_cmd->add_flag("--canonicalize", canon, "canonicalize against --cover");
  add_cover(tele_cmd, false);
  tele_cmd->add_flag("--emit-graph", emit_graph, "emit the underlying multigraph");
  add_out(tele_cmd);

  auto* check_cmd = app.add_subcommand("check", "inclusion and coincidence checks");
  check_cmd->add_option("--cloud", cloud_path)->required();
  check_cmd->add_option("--delta", delta, "Rips threshold")->required();
  add_cover(check_cmd, true);
  add_out(check_cmd);

  std::vector<const char*> argv;
  argv.push_back("mnmap");
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << io::error_json(error(errc::parse_error, e.what()));
    return 2;
  }

  auto emit = [&](const std::string& text) {
    std::cout << text;
    if (!out_path.empty()) io::write_file(out_path, text);
  };
  auto emit_multigraph = [&](const LeveledMultigraph& g, const std::string& name) {
    std::cout << io::graph_dot(g, name);
    if (!out_path.empty()) io::write_file(out_path, io::graph_json(g));
  };
  auto the_cover = [&]() { return io::parse_cover(io::read_file(cover_path)); };
  auto the_variant = [&]() {
    return multinerve_flag || variant_name == "multinerve" ? Variant::MultiNerve
                                                           : Variant::Mapper;
  };
  auto plot = [&](const ExtendedDiagram& d, const GomicCover* cover) {
    if (!plot_path.empty()) io::write_file(plot_path, io::render_diagram_svg(d, cover));
  };

  try {
    if (app.got_subcommand(cover_cmd)) {
      GomicCover cover;
      if (!uniform_spec.empty()) {
        auto parts = split(uniform_spec, ':');
        if (parts.size() != 4)
          throw error(errc::parse_error, "--uniform wants lo:hi:n:overlap");
        cover = uniform_cover(parse_num(parts[0]), parse_num(parts[1]),
                              static_cast<int>(parse_num(parts[2])), parse_num(parts[3]));
      } else if (!cover_path.empty()) {
        cover = the_cover();
      } else {
        throw error(errc::parse_error, "cover needs --cover or --uniform");
      }
      emit(staircase_name.empty()
               ? io::cover_json(cover)
               : io::staircase_json(build_staircase(cover, stair_kind(staircase_name))));
      plot({}, &cover);
      return 0;
    }

    if (app.got_subcommand(pers_cmd)) {
      io::ValuedComplex vc = io::parse_complex(io::read_file(complex_path));
      ExtendedDiagram dg = extended_persistence(vc.complex, vc.values, perturb);
      dg.sort_canonical();
      emit(io::diagram_json(dg));
      if (!plot_path.empty()) {
        if (cover_path.empty()) {
          plot(dg, nullptr);
        } else {
          GomicCover cover = the_cover();
          plot(dg, &cover);
        }
      }
      return 0;
    }

    if (app.got_subcommand(reeb_cmd)) {
      io::ValuedComplex vc = io::parse_complex(io::read_file(complex_path));
      emit_multigraph(reeb_graph(vc.complex, vc.values), "reeb");
      return 0;
    }

    if (app.got_subcommand(mapper_cmd)) {
      PointCloud cloud = load_cloud(cloud_path);
      GomicCover cover = the_cover();
      RipsGraph g = rips_graph(cloud, delta);
      Connectivity conn =
          connectivity == "edge" ? Connectivity::edge : Connectivity::vertex;
      emit_multigraph(mapper_discrete(g, cloud.values, cover, conn, the_variant()), "mapper");
      return 0;
    }

    if (app.got_subcommand(sig_cmd)) {
      GomicCover cover = the_cover();
      ExtendedDiagram dg;
      if (!cloud_path.empty()) {
        if (!sig_cmd->count("--delta"))
          throw error(errc::parse_error, "signature --cloud needs --delta");
        dg = approximate_signature(load_cloud(cloud_path), delta, cover, the_variant());
      } else if (!complex_path.empty()) {
        io::ValuedComplex vc = io::parse_complex(io::read_file(complex_path));
        dg = prune_signature(quotient_diagram(reeb_graph(vc.complex, vc.values)), cover,
                             the_variant());
      } else {
        throw error(errc::parse_error, "signature needs --cloud or --complex");
      }
      dg.sort_canonical();
      emit(io::diagram_json(dg));
      plot(dg, &cover);
      return 0;
    }

    if (app.got_subcommand(dist_cmd)) {
      ExtendedDiagram d1 = io::parse_diagram(io::read_file(sig_paths[0]));
      ExtendedDiagram d2 = io::parse_diagram(io::read_file(sig_paths[1]));
      emit(io::report_json(mapper_distance_report(d1, d2, the_cover(), the_variant())));
      return 0;
    }

    if (app.got_subcommand(tele_cmd)) {
      CombinatorialTelescope t = io::parse_telescope(io::read_file(tele_path));
      if (tele_cmd->count("--merge")) {
        auto [a, b] = parse_pair(merge_spec);
        t = merge_op(t, a, b);
      }
      if (tele_cmd->count("--split")) {
        auto [v, eps] = parse_pair(split_spec);
        t = split_op(t, v, eps);
      }
      if (tele_cmd->count("--shift")) {
        auto [v, eps] = parse_pair(shift_spec);
        t = shift_op(t, v, eps);
      }
      if (canon) {
        if (cover_path.empty())
          throw error(errc::parse_error, "--canonicalize needs --cover");
        t = canonicalize(t, the_cover());
      }
      if (emit_graph)
        emit_multigraph(telescope_to_graph(t), "telescope");
      else
        emit(io::telescope_json(t));
      return 0;
    }

    if (app.got_subcommand(check_cmd)) {
      PointCloud cloud = load_cloud(cloud_path);
      RipsGraph g = rips_graph(cloud, delta);
      InclusionReport rep = inclusion_check(g, cloud.values, the_cover());
      emit(io::inclusion_json(rep));
      return rep.ok() ? 0 : 1;
    }
  } catch (const error& e) {
    std::cerr << io::error_json(e);
    return 1;
  } catch (const std::exception& e) {
    std::cerr << io::error_json(error(errc::invalid_parameters, e.what()));
    return 1;
  }
  return 0;
}

}  // namespace mnm
