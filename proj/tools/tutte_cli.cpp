#include "tutte/classify.hpp"
#include "tutte/codec.hpp"
#include "tutte/mis.hpp"
#include "tutte/planarity.hpp"
#include "tutte/reduction.hpp"
#include "tutte/transforms.hpp"
#include "tutte/tutte.hpp"
#include "tutte/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace tutte;

namespace {

Rational rat(const std::string& s) { return parse_rational(s); }

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

// "y1,y2,y3" with "-" or an empty slot for a missing point.
BasePoints parse_base(const Rational& q, const std::string& text) {
  auto parts = split_commas(text);
  if (parts.empty() || parts.size() > 3) throw Error("--base takes one to three y-coordinates");
  std::array<std::optional<Rational>, 3> y;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!parts[i].empty() && parts[i] != "-") y[i] = rat(parts[i]);
  }
  return BasePoints::from_y(q, y[0], y[1], y[2]);
}

BasePoints default_base(const Rational& q) {
  return q > 0 ? BasePoints::from_y(q, Rational(2), Rational(1) / 2, Rational(-2))
               : BasePoints::from_y(q, Rational(2), Rational(-1) / 2, Rational(-2));
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error("cannot write " + path);
  f << text;
}

std::string interval_text(const Interval& i) { return "[" + to_string(i.lo) + ", " + to_string(i.hi) + "]"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Tutte polynomial evaluation, gadget synthesis and planar hardness reductions"};
  app.require_subcommand(1);

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate Z(G;q,w) or T(G;x,y) exactly");
  std::string eval_graph, eval_q, eval_weights, eval_x, eval_y;
  eval->add_option("graph", eval_graph, "graph file")->required();
  eval->add_option("--q", eval_q, "q as p/q");
  eval->add_option("--weights", eval_weights, "one weight for every edge, or a comma list by edge id");
  eval->add_option("--x", eval_x, "x as p/q");
  eval->add_option("--y", eval_y, "y as p/q");

  // gadget
  auto* gadget = app.add_subcommand("gadget", "Synthesize a gadget whose y-coordinate approximates a target");
  std::string gad_q, gad_target, gad_tol, gad_base, gad_out, gad_style = "chain";
  gadget->add_option("--q", gad_q)->required();
  gadget->add_option("--target", gad_target, "target y-coordinate, |T| > 1")->required();
  gadget->add_option("--tol", gad_tol, "tolerance in (0,1]")->required();
  gadget->add_option("--base", gad_base, "base y-coordinates y1,y2,y3 (use - to skip)")->required();
  gadget->add_option("--style", gad_style, "chain or digits");
  gadget->add_option("--out", gad_out, "output file (default stdout)");

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Compile a hard instance");
  reduce->require_subcommand(1);
  auto* mis = reduce->add_subcommand("mis", "Planar independent set of size K to a Tutte evaluation at q");
  std::string mis_graph, mis_q = "6", mis_base, mis_eps, mis_delta, mis_out;
  int mis_K = 0;
  bool mis_no_decide = false;
  mis->add_option("graph", mis_graph, "planar graph of maximum degree 3")->required();
  mis->add_option("--K", mis_K, "independent-set bound on the input graph")->required();
  mis->add_option("--q", mis_q, "q outside [0,5] (default 6)");
  mis->add_option("--base", mis_base, "base y-coordinates y1,y2,y3");
  mis->add_option("--relaxed-eps", mis_eps);
  mis->add_option("--relaxed-delta", mis_delta);
  mis->add_option("--out", mis_out, "prefix for <prefix>.graph and <prefix>.cert");
  mis->add_flag("--no-decide", mis_no_decide, "skip the certified evaluation");

  auto* col = reduce->add_subcommand("colouring", "Planar 3-colouring to T(G';x,y) on (x-1)(y-1)=3");
  std::string col_graph, col_x, col_y, col_out;
  col->add_option("graph", col_graph)->required();
  col->add_option("--x", col_x)->required();
  col->add_option("--y", col_y)->required();
  col->add_option("--out", col_out, "prefix for <prefix>.graph and <prefix>.cert");

  // classify
  auto* cls = app.add_subcommand("classify", "Planar complexity status of a point");
  std::string cls_x, cls_y;
  bool cls_cert = false;
  cls->add_option("--x", cls_x)->required();
  cls->add_option("--y", cls_y)->required();
  cls->add_flag("--certificate", cls_cert, "print and check the shift certificate");

  // map
  auto* map = app.add_subcommand("map", "Classify a rational lattice");
  std::string mx0, mx1, my0, my1, mstep, mout;
  map->add_option("--xmin", mx0)->required();
  map->add_option("--xmax", mx1)->required();
  map->add_option("--ymin", my0)->required();
  map->add_option("--ymax", my1)->required();
  map->add_option("--step", mstep)->required();
  map->add_option("--out", mout, "records file (default stdout)");

  // verify
  auto* ver = app.add_subcommand("verify", "Replay the invariant suites");
  std::string ver_suite = "all";
  ver->add_option("suite", ver_suite, "all, graph-core, tutte-engine, gadget-algebra, reduction-compiler, classifier-cli");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*eval) {
      WeightedMultigraph g = read_graph_file(eval_graph);
      const bool xy = !eval_x.empty() || !eval_y.empty();
      if (xy == !eval_q.empty()) throw Error("give either --q or both --x and --y");
      if (xy) {
        if (eval_x.empty() || eval_y.empty()) throw Error("--x and --y go together");
        std::cout << to_string(tutte_eval(g, rat(eval_x), rat(eval_y))) << "\n";
        return 0;
      }
      if (!eval_weights.empty()) {
        auto ws = split_commas(eval_weights);
        if (ws.size() == 1) {
          g.set_all_weights(rat(ws[0]));
        } else if (static_cast<int>(ws.size()) == g.edge_count()) {
          for (int e = 0; e < g.edge_count(); ++e) g.set_weight(e, rat(ws[e]));
        } else {
          throw Error("--weights needs 1 or " + std::to_string(g.edge_count()) + " values");
        }
      }
      std::cout << to_string(z_delcon(g, rat(eval_q))) << "\n";
      return 0;
    }

    if (*gadget) {
      const Rational q = rat(gad_q);
      WalkStyle style = gad_style == "digits" ? WalkStyle::Digits : WalkStyle::Chain;
      if (gad_style != "digits" && gad_style != "chain") throw Error("--style is chain or digits");
      WalkPlan p = hyperbola_walk(parse_base(q, gad_base), rat(gad_target), rat(gad_tol), style);
      const Implementation& impl = p.result;
      TwoTerminalGadget tg = impl.gadget.materialize();
      std::ostringstream out;
      out << serialize_graph(tg.graph);
      out << "# terminals " << tg.s << " " << tg.t << "\n";
      out << "# q " << to_string(q) << "\n";
      out << "# effective_weight " << to_string(impl.effective_weight) << "\n";
      out << "# y " << to_string(impl.y()) << "\n";
      out << "# scale " << to_string(impl.scale) << "\n";
      out << "# target_y " << to_string(rat(gad_target)) << "\n";
      out << "# error " << interval_text(impl.error) << "\n";
      out << "# steps " << p.m << "\n";
      out << "# edges " << tg.graph.edge_count() << "\n";
      out << "# recheck " << (recheck(impl) ? "ok" : "FAILED") << "\n";
      emit(gad_out, out.str());
      return 0;
    }

    if (*mis) {
      WeightedMultigraph g = read_graph_file(mis_graph);
      const Rational q = rat(mis_q);
      CubicizeResult cub = cubicize(g);
      const int K_cubic = mis_K + cub.mis_offset;
      const int K_stretched = K_cubic + cub.graph.edge_count();
      std::optional<std::pair<Rational, Rational>> relaxed;
      if (mis_eps.empty() != mis_delta.empty()) throw Error("--relaxed-eps and --relaxed-delta go together");
      if (!mis_eps.empty()) relaxed = std::pair{rat(mis_eps), rat(mis_delta)};
      BasePoints base = mis_base.empty() ? default_base(q) : parse_base(q, mis_base);
      MisCompilation c = compile_mis(cub.graph, K_stretched, q, base, relaxed);
      const YNetwork& net = c.net;

      std::ostringstream cert;
      cert << "instance mis\n";
      cert << "input_vertices " << g.vertex_count() << "\n";
      cert << "K_input " << mis_K << "\n";
      cert << "cubic_pad_copies " << cub.pad_copies << "\n";
      cert << "K_cubic " << K_cubic << "\n";
      cert << "K_stretched " << K_stretched << "\n";
      cert << "relaxed " << (c.params.relaxed ? "yes" : "no") << "\n";
      cert << "q " << to_string(q) << "\n";
      cert << "beta " << to_string(net.link_weight) << "\n";
      cert << "a " << to_string(net.triangle_weight) << "\n";
      cert << "b " << to_string(net.spoke_weight) << "\n";
      cert << "psi " << to_string(net.threshold) << "\n";
      for (const auto& [k, v] : c.params.table()) cert << "param " << k << " " << v << "\n";
      for (const auto& s : validate_weights(net)) cert << "weight_check_failed " << s << "\n";
      cert << "network_vertices " << net.graph.vertex_count() << "\n";
      cert << "network_edges " << net.graph.edge_count() << "\n";
      std::string verdict = "not computed";
      if (!mis_no_decide) {
        CertifiedValue cv = z_ghat_certified(net);
        for (const ClassBound& b : cv.ledger) {
          cert << "class\t" << b.name << "\t" << to_string(b.value) << "\t" << to_string(b.displayed) << "\t"
               << to_string(b.structural) << "\n";
        }
        cert << "z_interval " << interval_text(cv.value) << "\n";
        verdict = verdict_name(decide_mis(cv.value, net.threshold));
      }
      cert << "verdict " << verdict << "\n";
      if (mis_out.empty()) {
        std::cout << cert.str();
      } else {
        write_graph_file(mis_out + ".graph", net.graph);
        emit(mis_out + ".cert", cert.str());
        std::cout << "verdict " << verdict << "\n";
      }
      return 0;
    }

    if (*col) {
      WeightedMultigraph g = read_graph_file(col_graph);
      if (!planarity_embed(g)) throw Error("graph is not planar");
      ColouringReduction c = reduce_colouring(g, rat(col_x), rat(col_y));
      std::ostringstream cert;
      cert << "instance colouring\n";
      cert << "x " << to_string(rat(col_x)) << "\n";
      cert << "y " << to_string(rat(col_y)) << "\n";
      cert << "k_least " << c.k_formula << "\n";
      cert << "k " << c.k << "\n";
      cert << "gap " << to_string(c.gap) << "\n";
      cert << "colour_sum " << to_string(c.colour_value) << "\n";
      cert << "tutte_route " << to_string(c.tutte_value) << "\n";
      cert << "verdict " << (c.colourable ? "3-colourable" : "not 3-colourable") << "\n";
      if (col_out.empty()) {
        std::cout << cert.str();
      } else {
        write_graph_file(col_out + ".graph", c.thickened);
        emit(col_out + ".cert", cert.str());
        std::cout << "verdict " << (c.colourable ? "3-colourable" : "not 3-colourable") << "\n";
      }
      return 0;
    }

    if (*cls) {
      PointClass c = classify_point(rat(cls_x), rat(cls_y), cls_cert);
      std::cout << record_line({c.x, c.y, c.q, c}) << "\n";
      if (cls_cert) {
        if (!c.certificate) {
          std::cout << "certificate none\n";
        } else {
          const ShiftCertificate& s = *c.certificate;
          std::cout << "certificate " << s.region << (s.dual ? " dual" : "") << "\n";
          const Implementation* parts[3] = {&s.first, &s.second, &s.third};
          for (int i = 0; i < 3; ++i) {
            std::cout << "point" << i + 1 << "\tx=" << to_string(parts[i]->x()) << "\ty=" << to_string(parts[i]->y())
                      << "\t" << parts[i]->gadget.describe() << "\n";
          }
          const std::string bad = check_certificate(s);
          std::cout << "check " << (bad.empty() ? "ok" : bad) << "\n";
          if (!bad.empty()) return 1;
        }
      }
      return 0;
    }

    if (*map) {
      std::ostringstream out;
      for (const MapRecord& r : map_region(rat(mx0), rat(mx1), rat(my0), rat(my1), rat(mstep))) {
        out << record_line(r) << "\n";
      }
      emit(mout, out.str());
      return 0;
    }

    if (*ver) {
      bool ok = true;
      run_verify(ver_suite, [&](const CheckResult& r) {
        ok = ok && r.ok;
        std::cout << (r.ok ? "PASS" : "FAIL") << "\t" << r.suite << "\t" << r.name << "\t" << r.trials << " trials";
        if (!r.ok) std::cout << "\t" << r.detail;
        std::cout << std::endl;
      });
      return ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
