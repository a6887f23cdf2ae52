#include "multifan/svg.hpp"

#include <iomanip>
#include <map>
#include <sstream>
#include <vector>

#include "multifan/errors.hpp"
#include "multifan/rng.hpp"

namespace multifan {

namespace {

constexpr int kCanvas = 800;
constexpr int kGrid = 24;

BigInt floorBig(const Rational& x) {
  BigInt p = boost::multiprecision::numerator(x);
  BigInt q = boost::multiprecision::denominator(x);
  BigInt f = p / q;  // truncates toward zero
  if (f * q != p && p < 0) f -= 1;
  return f;
}

// Three fixed decimals, round half up. All callers feed canvas coordinates,
// so the printed form, not the exact value, is the deliverable here.
std::string fixed3(const Rational& x) {
  BigInt t = floorBig(x * 1000 + Rational(1, 2));
  bool neg = t < 0;
  BigInt a = neg ? BigInt(-t) : t;
  std::ostringstream s;
  if (neg) s << '-';
  s << (a / 1000) << '.' << std::setw(3) << std::setfill('0')
    << (a % 1000).convert_to<long>();
  return s.str();
}

struct Frame {
  Rational x0, x1, y0, y1;  // world rectangle mapped onto the canvas

  Rational sx(const Rational& x) const { return kCanvas * (x - x0) / (x1 - x0); }
  Rational sy(const Rational& y) const { return kCanvas * (y1 - y) / (y1 - y0); }
};

// World rectangle: the vertex bounding box scaled by 6/5 about its center,
// with unit half-extent on any axis the vertices fail to spread.
Frame fitFrame(const std::vector<QVector>& points) {
  Rational minx = points[0][0], maxx = minx, miny = points[0][1], maxy = miny;
  for (const QVector& u : points) {
    minx = std::min(minx, u[0]);
    maxx = std::max(maxx, u[0]);
    miny = std::min(miny, u[1]);
    maxy = std::max(maxy, u[1]);
  }
  Rational cx = (minx + maxx) / 2, cy = (miny + maxy) / 2;
  Rational hx = (maxx - minx) / 2 * Rational(6, 5);
  Rational hy = (maxy - miny) / 2 * Rational(6, 5);
  if (hx == 0) hx = 1;
  if (hy == 0) hy = 1;
  return Frame{cx - hx, cx + hx, cy - hy, cy + hy};
}

// Clips the line <u, ray> = c to the frame rectangle; empty when it misses.
std::vector<QVector> clipLine(const QVector& ray, const Rational& c, const Frame& f) {
  std::vector<QVector> hits;
  auto push = [&hits](const Rational& x, const Rational& y) {
    QVector p{x, y};
    for (const QVector& q : hits)
      if (q == p) return;
    hits.push_back(p);
  };
  if (ray[1] != 0) {
    for (const Rational& x : {f.x0, f.x1}) {
      Rational y = (c - ray[0] * x) / ray[1];
      if (y >= f.y0 && y <= f.y1) push(x, y);
    }
  }
  if (ray[0] != 0) {
    for (const Rational& y : {f.y0, f.y1}) {
      Rational x = (c - ray[1] * y) / ray[0];
      if (x >= f.x0 && x <= f.x1) push(x, y);
    }
  }
  if (hits.size() < 2) return {};
  // Lexicographic extremes are the segment endpoints: points on a line are
  // totally ordered by (x, y).
  QVector lo = hits[0], hi = hits[0];
  for (const QVector& p : hits) {
    if (p[0] < lo[0] || (p[0] == lo[0] && p[1] < lo[1])) lo = p;
    if (p[0] > hi[0] || (p[0] == hi[0] && p[1] > hi[1])) hi = p;
  }
  return {lo, hi};
}

}  // namespace

std::string emitSvg(const MultiPolytope& p, std::uint64_t seed) {
  requireValidFan(p.fan);
  requirePre(p.fan.n == 2, "charts are two-dimensional");
  requirePre(!p.fan.isZero(), "nothing to draw for the zero fan");
  requirePre(static_cast<int>(p.c.size()) == p.fan.m, "one support parameter per vertex slot");
  requirePre(isComplete(p.fan), "chamber values need a complete fan");

  std::vector<int> slots = p.fan.support().vertices();

  // Polytope vertices, deduplicated, in facet order.
  std::vector<QVector> corners;
  for (const auto& [simplex, coefficient] : p.fan.chain) {
    QVector u = vertex(p, simplex);
    bool known = false;
    for (const QVector& q : corners) known = known || q == u;
    if (!known) corners.push_back(u);
  }
  Frame frame = fitFrame(corners);

  // One auxiliary generic vector serves every chamber evaluation.
  Rng aux(Rng::deriveSeed(seed, 0x5C1));
  QVector v = randomGenericVector(p.fan, aux);

  // Chamber witnesses: perturbed grid, deduplicated by the exact sign vector
  // of t_i = <u, lambda(i)> - c_i over the supported slots. Cells landing on
  // a hyperplane are skipped; jitter is drawn for every cell so the stream
  // stays aligned regardless of skips.
  Rng jitter(Rng::deriveSeed(seed, 0x9D));
  struct Chamber {
    QVector sum;
    long long count = 0;
  };
  std::map<std::vector<int>, size_t> chamberIndex;
  std::vector<Chamber> chambers;
  Rational w = frame.x1 - frame.x0, h = frame.y1 - frame.y0;
  for (int gy = 0; gy < kGrid; ++gy) {
    for (int gx = 0; gx < kGrid; ++gx) {
      Rational dx = jitter.uniformRational(-w / (kGrid * 8), w / (kGrid * 8));
      Rational dy = jitter.uniformRational(-h / (kGrid * 8), h / (kGrid * 8));
      QVector u{frame.x0 + Rational(2 * gx + 1, 2 * kGrid) * w + dx,
                frame.y0 + Rational(2 * gy + 1, 2 * kGrid) * h + dy};
      std::vector<int> signs;
      bool onWall = false;
      for (int i : slots) {
        int s = sgn(dot(u, p.fan.lambda[i]) - p.c[i]);
        onWall = onWall || s == 0;
        signs.push_back(s);
      }
      if (onWall) continue;
      auto [it, fresh] = chamberIndex.try_emplace(signs, chambers.size());
      if (fresh) chambers.push_back(Chamber{QVector{0, 0}, 0});
      Chamber& ch = chambers[it->second];
      ch.sum = ch.sum + u;
      ch.count += 1;
    }
  }

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvas << "\" height=\""
      << kCanvas << "\" viewBox=\"0 0 " << kCanvas << " " << kCanvas << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << kCanvas << "\" height=\"" << kCanvas
      << "\" fill=\"#ffffff\"/>\n";

  out << "<g stroke=\"#444444\" stroke-width=\"1.5\">\n";
  for (int i : slots) {
    std::vector<QVector> seg = clipLine(p.fan.lambda[i], p.c[i], frame);
    if (seg.empty()) continue;
    out << "<line data-ray=\"" << (i + 1) << "\" x1=\"" << fixed3(frame.sx(seg[0][0]))
        << "\" y1=\"" << fixed3(frame.sy(seg[0][1])) << "\" x2=\"" << fixed3(frame.sx(seg[1][0]))
        << "\" y2=\"" << fixed3(frame.sy(seg[1][1])) << "\"/>\n";
  }
  out << "</g>\n";

  out << "<g fill=\"#bb3333\">\n";
  for (const QVector& u : corners) {
    out << "<circle cx=\"" << fixed3(frame.sx(u[0])) << "\" cy=\"" << fixed3(frame.sy(u[1]))
        << "\" r=\"4\"/>\n";
  }
  out << "</g>\n";

  // Labels carry the exact witness in data-u so the picture is checkable
  // without re-running the grid search.
  out << "<g font-family=\"monospace\" font-size=\"18\" text-anchor=\"middle\" "
         "fill=\"#1144aa\">\n";
  for (const Chamber& ch : chambers) {
    QVector u = Rational(1, ch.count) * ch.sum;  // convex chamber: stays inside
    Rational value = dhEval(p, u, v).value;
    out << "<text class=\"chamber\" x=\"" << fixed3(frame.sx(u[0])) << "\" y=\""
        << fixed3(frame.sy(u[1]) + 6) << "\" data-u=\"" << formatRational(u[0]) << ","
        << formatRational(u[1]) << "\">" << formatRational(value) << "</text>\n";
  }
  out << "</g>\n";

  out << "</svg>\n";
  return out.str();
}

}  // namespace multifan
