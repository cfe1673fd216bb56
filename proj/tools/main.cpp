// gwbez: arithmetic count of plane curve intersections, with local degree,
// Grothendieck-Witt and plotting subcommands.  Exit codes: 0 pass, 1 usage
// or parse error, 2 verification failure, 3 not applicable.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gwbez/json_io.hpp"
#include "gwbez/parser.hpp"
#include "gwbez/plot.hpp"
#include "gwbez/verify.hpp"

namespace {

using gwbez::FieldTag;
using gwbez::Fp;
using gwbez::Rat;
using nlohmann::json;

FieldTag parse_field(const std::string& s) {
  if (s == "Q") return FieldTag::Q();
  if (s == "Ct") return FieldTag::Ct();
  if (s.rfind("Fp:", 0) == 0) {
    long p = 0;
    try {
      p = std::stol(s.substr(3));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--field", "expected Q, Fp:<prime> or Ct");
    }
    return FieldTag::prime(p);
  }
  throw CLI::ValidationError("--field", "expected Q, Fp:<prime> or Ct");
}

gwbez::Poly<Rat> read_curve(const std::string& expr, bool affine) {
  if (affine) {
    gwbez::ParsedPoly p = gwbez::parse_affine(expr);
    if (p.poly.nvars() != 2)
      throw gwbez::SyntaxError("affine plane curves use the variables x and y", 0);
    return gwbez::homogenize(p.poly, 0, p.poly.total_degree()).poly();
  }
  return gwbez::parse_homogeneous(expr, 2).poly;
}

gwbez::CurvePair<Rat> pair_q(const std::string& f, const std::string& g, bool affine) {
  return {gwbez::HomogeneousPoly<Rat>(read_curve(f, affine)),
          gwbez::HomogeneousPoly<Rat>(read_curve(g, affine))};
}

gwbez::CurvePair<Fp> pair_fp(const std::string& f, const std::string& g, bool affine,
                             long p) {
  return {gwbez::HomogeneousPoly<Fp>(gwbez::poly_to_fp(read_curve(f, affine), p)),
          gwbez::HomogeneousPoly<Fp>(gwbez::poly_to_fp(read_curve(g, affine), p))};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

// Laurent model diagonal entries: polynomial expressions in t.
gwbez::RatFunc parse_ct_entry(std::string text) {
  for (char& ch : text)
    if (ch == 't') ch = 'x';
  gwbez::ParsedPoly p = gwbez::parse_affine(text);
  if (p.poly.degree_in(1) > 0)
    throw CLI::ValidationError("--diag", "Laurent entries are expressions in t");
  return gwbez::RatFunc(p.poly.to_upoly(0), {Rat(1)});
}

gwbez::GWElement rank_one(const Rat& J) { return gwbez::GWElement::make_q({J}); }
gwbez::GWElement rank_one(const Fp& J) {
  return gwbez::GWElement::make_fp(J.modulus(), {J});
}

void emit(const json& doc, bool pretty_requested, const std::string& pretty_text) {
  if (pretty_requested && !pretty_text.empty())
    std::cout << pretty_text;
  else
    std::cout << doc.dump(2) << "\n";
}

struct VerifyOutcome {
  json doc;
  std::string pretty;
  int exit_code = 0;
};

VerifyOutcome run_verify(const std::string& f, const std::string& g, bool affine,
                         FieldTag tag, std::uint64_t seed) {
  VerifyOutcome out;
  gwbez::VerificationReport rep;
  if (tag.kind == FieldTag::Kind::Q) {
    auto pair = pair_q(f, g, affine);
    rep = gwbez::verify_main(pair, seed);
    out.doc = gwbez::with_schema("verify", gwbez::report_to_json(rep));
    if (rep.applicable) {
      gwbez::CrossingTally tally = gwbez::verify_over_R(rep);
      gwbez::QConditions qc = gwbez::verify_over_Q(rep);
      out.doc["over_R"] = gwbez::tally_to_json(tally);
      out.doc["over_Q"] = gwbez::qconditions_to_json(qc);
    }
  } else if (tag.kind == FieldTag::Kind::Fp) {
    auto pair = pair_fp(f, g, affine, tag.p);
    rep = gwbez::verify_main(pair, seed);
    out.doc = gwbez::with_schema("verify", gwbez::report_to_json(rep));
    if (rep.applicable) {
      try {
        out.doc["over_Fq"] = gwbez::fq_to_json(gwbez::verify_over_Fq(pair, seed));
      } catch (const gwbez::NonTransverseOverFq& e) {
        out.doc["over_Fq"] = json{{"error", e.what()}};
      }
    }
  } else {
    throw gwbez::UnsupportedField("curve verification runs over Q or Fp:<p>");
  }
  out.pretty = rep.str();
  out.exit_code = !rep.applicable ? 3 : (rep.pass ? 0 : 2);
  return out;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"Enriched count of plane curve intersections"};
  app.require_subcommand(1);

  std::string field = "Q", fexpr, gexpr, diag, degrees_csv, monomial, at_csv = "0,0";
  std::string window = "-2,2,-2,2", out_path, batch_path;
  bool affine = false, pretty = false, want_json = false, invariants = false;
  bool no_annotate = false;
  long samples = 160;
  std::uint64_t seed = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--field", field, "Q, Fp:<prime> or Ct");
    cmd->add_flag("--json", want_json, "machine readable output (default)");
    cmd->add_flag("--pretty", pretty, "human readable output");
    cmd->add_option("--seed", seed, "seed for factorization randomness");
  };

  CLI::App* verify = app.add_subcommand("verify", "check the global identity");
  verify->add_option("--f", fexpr, "first curve");
  verify->add_option("--g", gexpr, "second curve");
  verify->add_flag("--affine", affine, "parse affine input in x, y");
  verify->add_option("--batch", batch_path, "file with field;f;g lines");
  add_common(verify);

  CLI::App* intersect = app.add_subcommand("intersect", "list intersection points");
  intersect->add_option("--f", fexpr)->required();
  intersect->add_option("--g", gexpr)->required();
  intersect->add_flag("--affine", affine);
  add_common(intersect);

  CLI::App* degree = app.add_subcommand("degree", "one local degree");
  degree->add_option("--monomial", monomial, "closed form a=<coeff>,d=<power>");
  degree->add_option("--f", fexpr, "first affine curve");
  degree->add_option("--g", gexpr, "second affine curve");
  degree->add_option("--at", at_csv, "rational point, default origin");
  add_common(degree);

  CLI::App* gw = app.add_subcommand("gw", "diagonal form calculator");
  gw->add_option("--diag", diag, "comma separated entries")->required();
  gw->add_flag("--invariants", invariants, "include the invariant vector");
  add_common(gw);

  CLI::App* euler = app.add_subcommand("euler", "expected total from the degrees");
  euler->add_option("--degrees", degrees_csv, "comma separated degrees")->required();
  add_common(euler);

  CLI::App* plot = app.add_subcommand("plot", "SVG of the real picture");
  plot->add_option("--f", fexpr)->required();
  plot->add_option("--g", gexpr)->required();
  plot->add_flag("--affine", affine);
  plot->add_option("--window", window, "xmin,xmax,ymin,ymax");
  plot->add_option("--samples", samples, "grid resolution, at least 16");
  plot->add_option("--out", out_path, "output file; stdout when omitted");
  plot->add_flag("--no-annotate", no_annotate, "suppress sign labels");
  add_common(plot);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  FieldTag tag = parse_field(field);

  if (verify->parsed()) {
    if (!batch_path.empty()) {
      std::ifstream in(batch_path);
      if (!in) throw CLI::ValidationError("--batch", "cannot open " + batch_path);
      json all = json::array();
      int worst = 0;
      std::string line;
      while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> parts = split(line, ';');
        if (parts.size() != 3)
          throw CLI::ValidationError("--batch", "expected field;f;g per line");
        VerifyOutcome one = run_verify(parts[1], parts[2], affine, parse_field(parts[0]), seed);
        all.push_back(one.doc);
        if (one.exit_code == 2 || worst == 2)
          worst = 2;
        else if (one.exit_code == 3)
          worst = 3;
      }
      emit(gwbez::with_schema("verify_batch", json{{"reports", all}}), false, "");
      return worst;
    }
    if (fexpr.empty() || gexpr.empty())
      throw CLI::RequiredError("--f and --g");
    VerifyOutcome out = run_verify(fexpr, gexpr, affine, tag, seed);
    emit(out.doc, pretty, out.pretty);
    return out.exit_code;
  }

  if (intersect->parsed()) {
    json points = json::array();
    long total = 0;
    std::vector<long> degs;
    auto record = [&](const auto& pts, const auto& pair) {
      degs = {pair.dF(), pair.dG()};
      for (const auto& p : pts) {
        json coords = json::array();
        for (const auto& c : p.coords) coords.push_back(c.str());
        points.push_back({{"chart", p.chart},
                          {"min_poly", gwbez::up::to_string(p.residue_field->modulus(), "x")},
                          {"coords", coords},
                          {"field_degree", p.field_degree()},
                          {"multiplicity", p.multiplicity},
                          {"transverse", p.transverse},
                          {"on_divisor_x0", p.on_divisor_x0}});
        total += p.multiplicity;
      }
    };
    if (tag.kind == FieldTag::Kind::Q) {
      auto pair = pair_q(fexpr, gexpr, affine);
      record(gwbez::find_intersections(pair, seed), pair);
    } else if (tag.kind == FieldTag::Kind::Fp) {
      auto pair = pair_fp(fexpr, gexpr, affine, tag.p);
      record(gwbez::find_intersections(pair, seed), pair);
    } else {
      throw gwbez::UnsupportedField("intersection runs over Q or Fp:<p>");
    }
    json doc = gwbez::with_schema(
        "intersect", json{{"degrees", degs}, {"points", points}, {"total_multiplicity", total}});
    emit(doc, false, "");
    return 0;
  }

  if (degree->parsed()) {
    gwbez::LocalDegreeResult r;
    if (!monomial.empty()) {
      Rat a(1);
      long d = -1;
      for (const std::string& part : split(monomial, ',')) {
        if (part.rfind("a=", 0) == 0)
          a = Rat::parse(part.substr(2));
        else if (part.rfind("d=", 0) == 0)
          d = std::stol(part.substr(2));
        else
          throw CLI::ValidationError("--monomial", "expected a=<coeff>,d=<power>");
      }
      if (d < 0) throw CLI::ValidationError("--monomial", "missing d=<power>");
      if (tag.kind == FieldTag::Kind::Fp)
        r = gwbez::local_degree_monomial(gwbez::rat_to_fp(a, tag.p), d);
      else
        r = gwbez::local_degree_monomial(a, d);
    } else {
      if (fexpr.empty() || gexpr.empty())
        throw CLI::RequiredError("--monomial, or --f and --g");
      std::vector<std::string> coords = split(at_csv, ',');
      if (coords.size() != 2) throw CLI::ValidationError("--at", "expected x,y");
      std::vector<Rat> at{Rat::parse(coords[0]), Rat::parse(coords[1])};
      gwbez::ParsedPoly fp_ = gwbez::parse_affine(fexpr);
      gwbez::ParsedPoly gp = gwbez::parse_affine(gexpr);
      if (fp_.poly.nvars() != 2 || gp.poly.nvars() != 2)
        throw gwbez::SyntaxError("local degrees use affine curves in x and y", 0);
      auto run_at = [&](auto f, auto g, auto pt) {
        auto ft = gwbez::translate_to_origin(f, pt);
        auto gt = gwbez::translate_to_origin(g, pt);
        auto origin = pt;
        for (auto& c : origin) c = zero_like(c);
        auto J = gwbez::jacobian_det(std::vector{ft, gt}, origin);
        if (!gwbez::is_zero(J)) {
          gwbez::LocalDegreeResult t;
          t.degree = rank_one(J);
          t.multiplicity = 1;
          t.method = gwbez::DegreeMethod::Transverse;
          return t;
        }
        return gwbez::local_degree_series(ft, gt);
      };
      if (tag.kind == FieldTag::Kind::Fp) {
        std::vector<Fp> atp{gwbez::rat_to_fp(at[0], tag.p), gwbez::rat_to_fp(at[1], tag.p)};
        r = run_at(gwbez::poly_to_fp(fp_.poly, tag.p), gwbez::poly_to_fp(gp.poly, tag.p), atp);
      } else {
        r = run_at(fp_.poly, gp.poly, at);
      }
    }
    emit(gwbez::with_schema("degree", gwbez::degree_to_json(r)), pretty,
         r.degree.str() + "\n");
    return 0;
  }

  if (gw->parsed()) {
    gwbez::GWElement x = gwbez::GWElement::zero(tag);
    std::vector<std::string> parts = split(diag, ',');
    if (tag.kind == FieldTag::Kind::Q) {
      std::vector<Rat> d;
      for (const auto& s : parts) d.push_back(Rat::parse(s));
      x = gwbez::GWElement::make_q(d);
    } else if (tag.kind == FieldTag::Kind::Fp) {
      std::vector<Fp> d;
      for (const auto& s : parts) d.push_back(gwbez::rat_to_fp(Rat::parse(s), tag.p));
      x = gwbez::GWElement::make_fp(tag.p, d);
    } else {
      std::vector<gwbez::RatFunc> d;
      for (const auto& s : parts) d.push_back(parse_ct_entry(s));
      x = gwbez::GWElement::make_ct(d);
    }
    json doc = gwbez::with_schema("gw", json{{"element", gwbez::gw_to_json(x)}});
    if (invariants) doc["invariants"] = gwbez::invariants_to_json(gwbez::gw_invariants(x));
    emit(doc, pretty, x.str() + "\n");
    return 0;
  }

  if (euler->parsed()) {
    std::vector<long> ds;
    for (const auto& s : split(degrees_csv, ',')) ds.push_back(std::stol(s));
    gwbez::GWElement e = gwbez::expected_euler(tag, ds);
    json doc = gwbez::with_schema(
        "euler", json{{"degrees", ds}, {"expected", gwbez::gw_to_json(e)}});
    emit(doc, pretty, e.str() + "\n");
    return 0;
  }

  if (plot->parsed()) {
    if (tag.kind != FieldTag::Kind::Q)
      throw gwbez::UnsupportedField("plotting is a real picture; use --field Q");
    std::vector<std::string> parts = split(window, ',');
    if (parts.size() != 4)
      throw CLI::ValidationError("--window", "expected xmin,xmax,ymin,ymax");
    gwbez::PlotSpec ps;
    ps.xmin = Rat::parse(parts[0]);
    ps.xmax = Rat::parse(parts[1]);
    ps.ymin = Rat::parse(parts[2]);
    ps.ymax = Rat::parse(parts[3]);
    ps.samples = samples;
    ps.annotate = !no_annotate;
    std::string svg = gwbez::render_svg(pair_q(fexpr, gexpr, affine), ps, seed);
    if (out_path.empty()) {
      std::cout << svg;
    } else {
      std::ofstream out(out_path);
      if (!out) throw CLI::ValidationError("--out", "cannot write " + out_path);
      out << svg;
    }
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const gwbez::SyntaxError& e) {
    std::cerr << "parse error at position " << e.position << ": " << e.what() << "\n";
    return 1;
  } catch (const gwbez::NotHomogeneous& e) {
    std::cerr << "not homogeneous: " << e.what() << "\n";
    return 1;
  } catch (const gwbez::NotOrientable& e) {
    std::cerr << "not applicable: " << e.what() << "\n";
    return 3;
  } catch (const gwbez::PointOnDivisor& e) {
    std::cerr << "not applicable: " << e.what() << "\n";
    return 3;
  } catch (const gwbez::NonTransverseOverFq& e) {
    std::cerr << "not applicable: " << e.what() << "\n";
    return 3;
  } catch (const gwbez::UnsupportedField& e) {
    std::cerr << "not applicable: " << e.what() << "\n";
    return 3;
  } catch (const gwbez::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
