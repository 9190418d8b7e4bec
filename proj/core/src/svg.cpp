#include "legknot/svg.hpp"

#include <algorithm>
#include <sstream>

#include "legknot/traversal.hpp"

namespace legknot {

namespace {

constexpr int kDx = 40;
constexpr int kDy = 30;
constexpr int kMargin = 20;

class Canvas {
 public:
  Canvas(int columns, int max_strands) : max_strands_(max_strands) {
    width_ = 2 * kMargin + columns * kDx;
    height_ = 2 * kMargin + std::max(1, max_strands - 1) * kDy;
  }

  int x(std::size_t column) const { return kMargin + static_cast<int>(column) * kDx; }
  // Slot 1 is the lowest strand.
  int y(int slot) const { return kMargin + (max_strands_ - slot) * kDy; }

  void line(int x0, int y0, int x1, int y1) {
    body_ << "  <line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x1 << "\" y2=\"" << y1
          << "\"/>\n";
  }
  void path(const std::string& d) { body_ << "  <path d=\"" << d << "\"/>\n"; }
  void dot(int cx, int cy, int r, bool filled) {
    body_ << "  <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << r << "\" fill=\""
          << (filled ? "black" : "white") << "\"/>\n";
  }

  std::string document(const std::string& title) const {
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_ << "\" height=\""
        << height_ << "\" viewBox=\"0 0 " << width_ << ' ' << height_ << "\">\n"
        << "  <title>" << title << "</title>\n"
        << "  <g fill=\"none\" stroke=\"black\" stroke-width=\"2\" stroke-linecap=\"round\">\n"
        << body_.str() << "  </g>\n</svg>\n";
    return out.str();
  }

 private:
  int max_strands_;
  int width_ = 0;
  int height_ = 0;
  std::ostringstream body_;
};

std::string pt(int x, int y) { return std::to_string(x) + ' ' + std::to_string(y); }

// Straight segment with the middle fifth left out.
void broken_line(Canvas& c, int x0, int y0, int x1, int y1) {
  c.line(x0, y0, x0 + 2 * (x1 - x0) / 5, y0 + 2 * (y1 - y0) / 5);
  c.line(x0 + 3 * (x1 - x0) / 5, y0 + 3 * (y1 - y0) / 5, x1, y1);
}

std::string render(std::span<const Event> ev, WordKind kind) {
  const auto counts = strand_counts(ev);
  const int max_n = *std::max_element(counts.begin(), counts.end());
  Canvas c(static_cast<int>(ev.size()), max_n);
  const Traversal t = traverse(ev);
  const bool front = kind == WordKind::Front;
  const std::string title = serialize(ev, kind);
  std::string escaped;
  for (const char ch : title) escaped += ch == '<' ? std::string("&lt;") : std::string(1, ch);

  for (std::size_t i = 0; i < ev.size(); ++i) {
    const Event& e = ev[i];
    const int x0 = c.x(i);
    const int x1 = c.x(i + 1);
    const int xm = (x0 + x1) / 2;
    const int k = e.slot;
    const int n = counts[i];
    // Strands not involved in the event.
    for (int p = 1; p <= n; ++p) {
      int q = p;
      switch (e.kind) {
        case EventKind::Birth:
          q = p < k ? p : p + 2;
          break;
        case EventKind::Death:
          if (p == k || p == k + 1) continue;
          q = p < k ? p : p - 2;
          break;
        default:
          if (p == k || p == k + 1) continue;
      }
      c.line(x0, c.y(p), x1, c.y(q));
    }
    const int lo = c.y(k);
    const int hi = c.y(k + 1);
    const int mid = (lo + hi) / 2;
    switch (e.kind) {
      case EventKind::Birth:
        if (front)
          c.path("M " + pt(x1, lo) + " Q " + pt(xm + kDx / 8, mid) + ' ' + pt(xm, mid) + " Q " +
                 pt(xm + kDx / 8, mid) + ' ' + pt(x1, hi));
        else
          c.path("M " + pt(x1, lo) + " C " + pt(xm, lo) + ' ' + pt(xm, hi) + ' ' + pt(x1, hi));
        if (i == 0) c.dot(xm, mid, 4, false);
        break;
      case EventKind::Death:
        if (front)
          c.path("M " + pt(x0, lo) + " Q " + pt(xm - kDx / 8, mid) + ' ' + pt(xm, mid) + " Q " +
                 pt(xm - kDx / 8, mid) + ' ' + pt(x0, hi));
        else
          c.path("M " + pt(x0, lo) + " C " + pt(xm, lo) + ' ' + pt(xm, hi) + ' ' + pt(x0, hi));
        break;
      case EventKind::DoublePoint:
        c.line(x0, lo, x1, hi);
        c.line(x0, hi, x1, lo);
        c.dot(xm, mid, 3, true);
        break;
      default:
        if (lower_line_over(t, ev, i)) {
          c.line(x0, lo, x1, hi);
          broken_line(c, x0, hi, x1, lo);
        } else {
          broken_line(c, x0, lo, x1, hi);
          c.line(x0, hi, x1, lo);
        }
    }
  }
  return c.document(escaped);
}

}  // namespace

std::string render_svg(const FrontWord& f) { return render(f.events(), WordKind::Front); }
std::string render_svg(const DiagramWord& d) { return render(d.events(), WordKind::Diagram); }
std::string render_svg(const SingularDiagramWord& d) {
  return render(d.events(), WordKind::Singular);
}

}  // namespace legknot
