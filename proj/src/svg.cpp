#include "dint/svg.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace dint {

std::string render_svg(const DIntervalRep& rep) {
  struct Segment {
    Rational lo, hi;
    int vertex, part, parts;
    int row = 0;
  };
  std::vector<Segment> segs;
  for (const auto& [v, parts] : rep.parts)
    for (int i = 0; i < static_cast<int>(parts.size()); ++i)
      segs.push_back({parts[i].lo, parts[i].hi, v, i + 1, static_cast<int>(parts.size())});

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  if (segs.empty()) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"40\" height=\"40\"/>\n";
    return out.str();
  }

  std::stable_sort(segs.begin(), segs.end(), [](const Segment& a, const Segment& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    if (a.hi != b.hi) return a.hi < b.hi;
    if (a.vertex != b.vertex) return a.vertex < b.vertex;
    return a.part < b.part;
  });

  // first row whose last segment ends strictly before this one starts
  std::vector<Rational> row_end;
  for (auto& s : segs) {
    int row = -1;
    for (int r = 0; r < static_cast<int>(row_end.size()); ++r)
      if (row_end[r] < s.lo) {
        row = r;
        break;
      }
    if (row == -1) {
      row = static_cast<int>(row_end.size());
      row_end.push_back(s.hi);
    } else {
      row_end[row] = s.hi;
    }
    s.row = row;
  }

  Rational min_lo = segs.front().lo, max_hi = segs.front().hi;
  for (const auto& s : segs) {
    min_lo = std::min(min_lo, s.lo);
    max_hi = std::max(max_hi, s.hi);
  }
  const double unit = 40.0, margin = 30.0, row_h = 28.0;
  auto x = [&](const Rational& c) {
    return margin + unit * static_cast<double>(Rational(c - min_lo));
  };
  int rows = static_cast<int>(row_end.size());
  double width = x(max_hi) + margin;
  double height = margin + row_h * rows;

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  for (const auto& s : segs) {
    double y = margin + row_h * s.row;
    out << "  <line x1=\"" << x(s.lo) << "\" y1=\"" << y << "\" x2=\"" << x(s.hi)
        << "\" y2=\"" << y << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    out << "  <text x=\"" << (x(s.lo) + x(s.hi)) / 2 << "\" y=\"" << y - 5
        << "\" text-anchor=\"middle\">" << s.vertex;
    if (s.parts > 1) out << "<tspan baseline-shift=\"sub\" font-size=\"8\">" << s.part
                         << "</tspan>";
    out << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace dint
