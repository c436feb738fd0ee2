#include "hfk11/render.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace hfk11 {

namespace {

struct Pt {
  double x, y;  // torus units: x in slots, y in cells
};

// Screen layout. The two rainbow bands get a fixed pixel height per nesting
// level; the middle band is squeezed. The map is monotone in y and affine
// inside each band, so horizontal and vertical pieces stay straight.
class Frame {
 public:
  Frame(const PlRealization& real, int levels)
      : p_(real.p), band_px_(18.0 * (levels + 1)), mid_px_(160.0) {}

  double width() const { return 2 * kMargin + kSlotPx * p_; }
  double height() const { return 2 * kMargin + 2 * band_px_ + mid_px_; }

  double sx(double x) const { return kMargin + kSlotPx * x; }
  double sy(double y) const {
    double px;
    if (y <= 0.25) {
      px = y / 0.25 * band_px_;
    } else if (y >= 0.75) {
      px = band_px_ + mid_px_ + (y - 0.75) / 0.25 * band_px_;
    } else {
      px = band_px_ + (y - 0.25) / 0.5 * mid_px_;
    }
    return height() - kMargin - px;
  }

  static constexpr double kMargin = 30.0;
  static constexpr double kSlotPx = 26.0;

 private:
  int p_;
  double band_px_, mid_px_;
};

Pt to_pt(LatticePoint q, const PlRealization& real) {
  return {static_cast<double>(q.x) / kXDenominator, static_cast<double>(q.y) / real.y_den};
}

// Splits a cover segment at the vertical lines x = k p and returns pieces
// moved into 0 <= x <= p.
std::vector<std::pair<Pt, Pt>> wrap_segment(Pt a, Pt b, int p) {
  std::vector<double> cuts{0.0, 1.0};
  if (a.x != b.x) {
    const double lo = std::min(a.x, b.x), hi = std::max(a.x, b.x);
    for (double k = std::ceil(lo / p) * p; k <= hi; k += p) {
      const double t = (k - a.x) / (b.x - a.x);
      if (t > 0 && t < 1) cuts.push_back(t);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  std::vector<std::pair<Pt, Pt>> out;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Pt u{a.x + (b.x - a.x) * cuts[i], a.y + (b.y - a.y) * cuts[i]};
    Pt v{a.x + (b.x - a.x) * cuts[i + 1], a.y + (b.y - a.y) * cuts[i + 1]};
    const double shift = std::floor((u.x + v.x) / 2 / p) * p;
    u.x -= shift;
    v.x -= shift;
    out.emplace_back(u, v);
  }
  return out;
}

// Sutherland-Hodgman against one axis-parallel half plane.
std::vector<Pt> clip(const std::vector<Pt>& poly, bool vertical_edge, double bound, bool keep_above) {
  std::vector<Pt> out;
  auto inside = [&](Pt q) {
    const double v = vertical_edge ? q.x : q.y;
    return keep_above ? v >= bound : v <= bound;
  };
  auto cut = [&](Pt a, Pt b) {
    const double t = vertical_edge ? (bound - a.x) / (b.x - a.x) : (bound - a.y) / (b.y - a.y);
    return Pt{a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t};
  };
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Pt a = poly[i], b = poly[(i + 1) % poly.size()];
    const bool ia = inside(a), ib = inside(b);
    if (ia && ib) {
      out.push_back(b);
    } else if (ia && !ib) {
      out.push_back(cut(a, b));
    } else if (!ia && ib) {
      out.push_back(cut(a, b));
      out.push_back(b);
    }
  }
  return out;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << v;
  return os.str();
}

}  // namespace

std::string render_svg(const OneOneDiagram& d, const PlRealization& real, const Bigon* highlight) {
  const int p = real.p;
  const int levels = static_cast<int>(std::max(d.bottom_arcs().size(), d.top_arcs().size()));
  const Frame f(real, levels);
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(f.width()) << "\" height=\""
     << fmt(f.height()) << "\" viewBox=\"0 0 " << fmt(f.width()) << " " << fmt(f.height()) << "\">\n";
  os << "<rect x=\"" << fmt(f.sx(0)) << "\" y=\"" << fmt(f.sy(1)) << "\" width=\"" << fmt(f.sx(p) - f.sx(0))
     << "\" height=\"" << fmt(f.sy(0) - f.sy(1)) << "\" fill=\"none\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";

  if (highlight != nullptr) {
    std::vector<Pt> poly;
    for (auto q : highlight->witness.beta) poly.push_back(to_pt(q, real));
    double x0 = poly[0].x, x1 = x0, y0 = poly[0].y, y1 = y0;
    for (auto q : poly) {
      x0 = std::min(x0, q.x);
      x1 = std::max(x1, q.x);
      y0 = std::min(y0, q.y);
      y1 = std::max(y1, q.y);
    }
    os << "<g fill=\"#e8a33d\" fill-opacity=\"0.45\" stroke=\"none\" fill-rule=\"nonzero\">\n";
    for (double kx = std::floor(x0 / p); kx * p < x1; ++kx) {
      for (double ky = std::floor(y0); ky < y1; ++ky) {
        auto piece = clip(poly, true, kx * p, true);
        piece = clip(piece, true, (kx + 1) * p, false);
        piece = clip(piece, false, ky, true);
        piece = clip(piece, false, ky + 1, false);
        if (piece.size() < 3) continue;
        os << "<path d=\"";
        for (std::size_t i = 0; i < piece.size(); ++i) {
          os << (i == 0 ? "M" : "L") << fmt(f.sx(piece[i].x - kx * p)) << " " << fmt(f.sy(piece[i].y - ky)) << " ";
        }
        os << "Z\"/>\n";
      }
    }
    os << "</g>\n";
  }

  os << "<line x1=\"" << fmt(f.sx(0)) << "\" y1=\"" << fmt(f.sy(0)) << "\" x2=\"" << fmt(f.sx(p)) << "\" y2=\""
     << fmt(f.sy(0)) << "\" stroke=\"#c0392b\" stroke-width=\"2\"/>\n";

  for (const auto& arc : real.arcs) {
    const char* colour = arc.kind == ArcKind::kThrough ? "#1f4e9c" : "#2e86c1";
    os << "<path fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.4\" d=\"";
    for (std::size_t i = 0; i + 1 < arc.points.size(); ++i) {
      for (auto [u, v] : wrap_segment(to_pt(arc.points[i], real), to_pt(arc.points[i + 1], real), p)) {
        os << "M" << fmt(f.sx(u.x)) << " " << fmt(f.sy(u.y)) << " L" << fmt(f.sx(v.x)) << " " << fmt(f.sy(v.y))
           << " ";
      }
    }
    os << "\"/>\n";
  }

  os << "<g font-family=\"sans-serif\" font-size=\"9\" text-anchor=\"middle\">\n";
  for (int i = 1; i <= p; ++i) {
    os << "<text x=\"" << fmt(f.sx(i - 0.5)) << "\" y=\"" << fmt(f.sy(0) + 14) << "\">x_" << i << "</text>\n";
  }
  os << "</g>\n";

  // Basepoints are drawn halfway up their innermost region, which is the
  // same face of the diagram as their exact position.
  const double lift = 0.5 * 24.0 / static_cast<double>(real.y_den);
  const Pt z = to_pt(real.z, real), w = to_pt(real.w, real);
  os << "<circle cx=\"" << fmt(f.sx(z.x)) << "\" cy=\"" << fmt(f.sy(lift)) << "\" r=\"4\" fill=\"white\" "
     << "stroke=\"black\" stroke-width=\"1.5\"><title>z</title></circle>\n";
  os << "<circle cx=\"" << fmt(f.sx(w.x)) << "\" cy=\"" << fmt(f.sy(1 - lift)) << "\" r=\"4\" fill=\"black\">"
     << "<title>w</title></circle>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace hfk11
