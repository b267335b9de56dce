#include "tauber/arcs.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace tauber {

double wrap_angle(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

double circle_distance(double x, double y) {
  const double d = std::abs(std::remainder(x - y, kTwoPi));
  return std::min(d, kPi);
}

ClosedArcSet::ClosedArcSet(const std::vector<Arc>& arcs) {
  std::vector<Arc> pieces;
  for (const auto& arc : arcs) {
    if (!std::isfinite(arc.start) || !std::isfinite(arc.end)) {
      throw std::invalid_argument("arc endpoints must be finite");
    }
    double span = arc.end - arc.start;
    if (span >= kTwoPi) {
      pieces = {{0.0, kTwoPi}};
      break;
    }
    if (span < 0.0) span += kTwoPi * std::ceil(-span / kTwoPi);
    const double a = wrap_angle(arc.start);
    const double b = a + span;
    if (b > kTwoPi) {
      pieces.push_back({a, kTwoPi});
      pieces.push_back({0.0, b - kTwoPi});
    } else {
      pieces.push_back({a, b});
    }
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const Arc& l, const Arc& r) { return l.start < r.start; });
  for (const auto& piece : pieces) {
    if (!arcs_.empty() && piece.start <= arcs_.back().end) {
      arcs_.back().end = std::max(arcs_.back().end, piece.end);
    } else {
      arcs_.push_back(piece);
    }
  }
}

ClosedArcSet ClosedArcSet::full() { return ClosedArcSet({{0.0, kTwoPi}}); }

ClosedArcSet ClosedArcSet::parse(std::string_view text) {
  std::vector<Arc> arcs;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string item(text.substr(pos, comma - pos));
    const std::size_t colon = item.find(':');
    if (item.empty() || colon == std::string::npos) {
      throw std::invalid_argument("arc set must look like a1:b1,a2:b2, got '" +
                                  std::string(text) + "'");
    }
    const auto number = [&](const std::string& s) {
      char* end = nullptr;
      const double v = std::strtod(s.c_str(), &end);
      if (s.empty() || end != s.c_str() + s.size()) {
        throw std::invalid_argument("bad angle '" + s + "' in arc set");
      }
      return v;
    };
    arcs.push_back({number(item.substr(0, colon)), number(item.substr(colon + 1))});
    pos = comma + 1;
  }
  return ClosedArcSet(arcs);
}

bool ClosedArcSet::is_full() const {
  return arcs_.size() == 1 && arcs_[0].start == 0.0 && arcs_[0].end == kTwoPi;
}

double ClosedArcSet::measure() const {
  double m = 0.0;
  for (const auto& a : arcs_) m += a.end - a.start;
  return m;
}

double ClosedArcSet::distance(double x) const {
  if (arcs_.empty()) return std::numeric_limits<double>::infinity();
  const double w = wrap_angle(x);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& a : arcs_) {
    if (a.start <= w && w <= a.end) return 0.0;
    best = std::min({best, circle_distance(w, a.start), circle_distance(w, a.end)});
  }
  return best;
}

std::string ClosedArcSet::to_string() const {
  std::ostringstream os;
  os.precision(17);
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    if (i > 0) os << ',';
    os << arcs_[i].start << ':' << arcs_[i].end;
  }
  return os.str();
}

}  // namespace tauber
