#include "gwbez/plot.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

#include "gwbez/errors.hpp"
#include "gwbez/local_degree.hpp"
#include "gwbez/sturm.hpp"

namespace gwbez {

namespace {

constexpr double kCanvas = 640.0;
constexpr double kMargin = 40.0;

std::string fmt6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return std::string(buf);
}

double to_double(const Rat& q) { return mpq_class(q.raw()).get_d(); }

struct Mapper {
  double xmin, xmax, ymin, ymax;
  double sx(double x) const { return kMargin + (x - xmin) / (xmax - xmin) * kCanvas; }
  double sy(double y) const { return kMargin + (ymax - y) / (ymax - ymin) * kCanvas; }
};

struct Label {
  double x, y;
  long sign;
};

// Exact per-embedding crossing data of the chart-0 points: each real root
// of a point's minimal polynomial is one plotted intersection, its sign the
// sum of the entry signs of the local form at that embedding.
std::vector<Label> real_point_labels(const CurvePair<Rat>& pair, std::uint64_t seed,
                                     const Rat& xwidth) {
  std::vector<Label> out;
  Poly<Rat> f0 = dehomogenize_twisted(pair.F(), 0);
  Poly<Rat> g0 = dehomogenize_twisted(pair.G(), 0);
  for (const auto& p : find_intersections(pair, seed)) {
    if (p.chart != 0) continue;
    const auto& E = p.residue_field;
    std::vector<ExtElem<Rat>> diag;
    if (p.transverse) {
      diag.push_back(jacobian_det(std::vector<Poly<Rat>>{f0, g0}, p.coords));
    } else {
      auto embed = [&](const Rat& c) { return E->embed(c); };
      Poly<ExtElem<Rat>> fe = translate_to_origin(f0.map_coeffs(embed), p.coords);
      Poly<ExtElem<Rat>> ge = translate_to_origin(g0.map_coeffs(embed), p.coords);
      diag = series_degree(fe, ge).diag;
    }
    SturmChain chain(E->modulus());
    for (RootInterval iv : chain.isolate()) {
      long sign = 0;
      for (const auto& d : diag) sign += sign_at_root(chain, iv, d.coeffs());
      RootInterval fine = chain.refine(iv, xwidth);
      Rat mid = (fine.first + fine.second) / Rat(2);
      out.push_back({to_double(up::eval(p.coords[0].coeffs(), mid)),
                     to_double(up::eval(p.coords[1].coeffs(), mid)), sign});
    }
  }
  return out;
}

// Straight segments tracing f = 0 inside one grid cell, appended as SVG
// line elements.
void cell_segments(const Mapper& map, double x0, double x1, double y0, double y1,
                   double v00, double v10, double v01, double v11, std::string& out) {
  auto pos = [](double v) { return v >= 0.0; };
  int code = (pos(v00) ? 1 : 0) | (pos(v10) ? 2 : 0) | (pos(v11) ? 4 : 0) | (pos(v01) ? 8 : 0);
  if (code == 0 || code == 15) return;
  auto lerp = [](double a, double b, double va, double vb) {
    double t = (va == vb) ? 0.5 : va / (va - vb);
    return a + t * (b - a);
  };
  // Crossing locations along the four edges.
  double bx = lerp(x0, x1, v00, v10), by = y0;   // bottom
  double tx = lerp(x0, x1, v01, v11), ty = y1;   // top
  double lx = x0, ly = lerp(y0, y1, v00, v01);   // left
  double rx = x1, ry = lerp(y0, y1, v10, v11);   // right
  auto seg = [&](double ax, double ay, double cx, double cy) {
    out += "  <line x1=\"" + fmt6(map.sx(ax)) + "\" y1=\"" + fmt6(map.sy(ay)) +
           "\" x2=\"" + fmt6(map.sx(cx)) + "\" y2=\"" + fmt6(map.sy(cy)) + "\"/>\n";
  };
  switch (code) {
    case 1: case 14: seg(bx, by, lx, ly); break;
    case 2: case 13: seg(bx, by, rx, ry); break;
    case 3: case 12: seg(lx, ly, rx, ry); break;
    case 4: case 11: seg(tx, ty, rx, ry); break;
    case 6: case 9:  seg(bx, by, tx, ty); break;
    case 7: case 8:  seg(lx, ly, tx, ty); break;
    case 5:
    case 10: {
      bool center = (v00 + v10 + v01 + v11) >= 0.0;
      if ((code == 5) == center) {
        seg(bx, by, rx, ry);
        seg(lx, ly, tx, ty);
      } else {
        seg(bx, by, lx, ly);
        seg(tx, ty, rx, ry);
      }
      break;
    }
    default: break;
  }
}

void trace_curve(const Poly<Rat>& f, const Mapper& map, long samples,
                 const std::string& color, std::string& out) {
  struct Term {
    unsigned ex, ey;
    double c;
  };
  std::vector<Term> terms;
  unsigned maxe = 0;
  for (const auto& [e, c] : f.terms()) {
    terms.push_back({e[0], e[1], to_double(c)});
    maxe = std::max({maxe, e[0], e[1]});
  }
  const long n = samples;
  std::vector<double> xs(n + 1), ys(n + 1);
  for (long i = 0; i <= n; ++i) {
    xs[i] = map.xmin + (map.xmax - map.xmin) * static_cast<double>(i) / n;
    ys[i] = map.ymin + (map.ymax - map.ymin) * static_cast<double>(i) / n;
  }
  auto powers = [&](double v) {
    std::vector<double> p(maxe + 1, 1.0);
    for (unsigned e = 1; e <= maxe; ++e) p[e] = p[e - 1] * v;
    return p;
  };
  std::vector<std::vector<double>> val(n + 1, std::vector<double>(n + 1));
  std::vector<std::vector<double>> xp, yp;
  xp.reserve(n + 1);
  yp.reserve(n + 1);
  for (long i = 0; i <= n; ++i) xp.push_back(powers(xs[i]));
  for (long j = 0; j <= n; ++j) yp.push_back(powers(ys[j]));
  for (long i = 0; i <= n; ++i)
    for (long j = 0; j <= n; ++j) {
      double v = 0.0;
      for (const auto& t : terms) v += t.c * xp[i][t.ex] * yp[j][t.ey];
      val[i][j] = v;
    }
  out += " <g stroke=\"" + color + "\" stroke-width=\"1.5\" fill=\"none\">\n";
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      cell_segments(map, xs[i], xs[i + 1], ys[j], ys[j + 1], val[i][j], val[i + 1][j],
                    val[i][j + 1], val[i + 1][j + 1], out);
  out += " </g>\n";
}

}  // namespace

std::string render_svg(const CurvePair<Rat>& pair, const PlotSpec& spec,
                       std::uint64_t seed) {
  if (!(spec.xmin < spec.xmax) || !(spec.ymin < spec.ymax))
    throw EmptyWindow("plot window is degenerate");
  if (spec.samples < 16) throw ZeroInput("sample count below 16");

  Mapper map{to_double(spec.xmin), to_double(spec.xmax), to_double(spec.ymin),
             to_double(spec.ymax)};
  const double side = kCanvas + 2 * kMargin;

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt6(side) +
         "\" height=\"" + fmt6(side) + "\" viewBox=\"0 0 " + fmt6(side) + " " + fmt6(side) +
         "\">\n";
  out += " <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += " <rect x=\"" + fmt6(kMargin) + "\" y=\"" + fmt6(kMargin) + "\" width=\"" +
         fmt6(kCanvas) + "\" height=\"" + fmt6(kCanvas) +
         "\" fill=\"none\" stroke=\"#444\"/>\n";
  if (spec.xmin.sign() < 0 && spec.xmax.sign() > 0) {
    double x = map.sx(0.0);
    out += " <line x1=\"" + fmt6(x) + "\" y1=\"" + fmt6(kMargin) + "\" x2=\"" + fmt6(x) +
           "\" y2=\"" + fmt6(kMargin + kCanvas) + "\" stroke=\"#bbb\"/>\n";
  }
  if (spec.ymin.sign() < 0 && spec.ymax.sign() > 0) {
    double y = map.sy(0.0);
    out += " <line x1=\"" + fmt6(kMargin) + "\" y1=\"" + fmt6(y) + "\" x2=\"" +
           fmt6(kMargin + kCanvas) + "\" y2=\"" + fmt6(y) + "\" stroke=\"#bbb\"/>\n";
  }

  trace_curve(dehomogenize_twisted(pair.F(), 0), map, spec.samples, "#1f77b4", out);
  trace_curve(dehomogenize_twisted(pair.G(), 0), map, spec.samples, "#d62728", out);

  Rat span = spec.xmax - spec.xmin;
  for (const Label& l : real_point_labels(pair, seed, span / Rat(10000000))) {
    if (l.x < map.xmin || l.x > map.xmax || l.y < map.ymin || l.y > map.ymax) continue;
    double px = map.sx(l.x), py = map.sy(l.y);
    out += " <circle cx=\"" + fmt6(px) + "\" cy=\"" + fmt6(py) +
           "\" r=\"4\" fill=\"black\"/>\n";
    if (spec.annotate) {
      std::string text = l.sign > 0 ? "+" + std::to_string(l.sign) : std::to_string(l.sign);
      out += " <text x=\"" + fmt6(px + 8) + "\" y=\"" + fmt6(py - 8) +
             "\" font-family=\"monospace\" font-size=\"14\">" + text + "</text>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace gwbez
