#include "dualhfk/test_domain.hpp"

#include <algorithm>
#include <sstream>

namespace hfk {

TestDomain TestDomain::singleton(int i, int j) {
  TestDomain d(Kind::Singleton);
  d.a_ = i;
  d.b_ = j;
  return d;
}
TestDomain TestDomain::halfplane_i(int a) {
  TestDomain d(Kind::HalfplaneI);
  d.a_ = a;
  return d;
}
TestDomain TestDomain::halfplane_j(int b) {
  TestDomain d(Kind::HalfplaneJ);
  d.b_ = b;
  return d;
}
TestDomain TestDomain::max_union(int a, int b) {
  TestDomain d(Kind::MaxUnion);
  d.a_ = a;
  d.b_ = b;
  return d;
}
TestDomain TestDomain::box(int i0, int i1, int j0, int j1) {
  TestDomain d(Kind::Box);
  d.a_ = i0;
  d.b_ = i1;
  d.c_ = j0;
  d.d_ = j1;
  return d;
}
TestDomain TestDomain::line_i(int a) {
  TestDomain d(Kind::LineI);
  d.a_ = a;
  return d;
}
TestDomain TestDomain::explicit_set(std::vector<Gi> points) {
  TestDomain d(Kind::Explicit);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  d.points_ = std::move(points);
  return d;
}

bool TestDomain::contains(Gi p) const {
  auto [i, j] = p;
  switch (kind_) {
    case Kind::Singleton: return i == a_ && j == b_;
    case Kind::HalfplaneI: return i >= a_;
    case Kind::HalfplaneJ: return j >= b_;
    case Kind::MaxUnion: return std::max(i - a_, j - b_) >= 0;
    case Kind::Box: return i >= a_ && i <= b_ && j >= c_ && j <= d_;
    case Kind::LineI: return i == a_;
    case Kind::Explicit:
      return std::binary_search(points_.begin(), points_.end(), p);
  }
  return false;
}

std::string TestDomain::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Singleton: os << "singleton(" << a_ << "," << b_ << ")"; break;
    case Kind::HalfplaneI: os << "halfplane_i(" << a_ << ")"; break;
    case Kind::HalfplaneJ: os << "halfplane_j(" << b_ << ")"; break;
    case Kind::MaxUnion: os << "max_union(" << a_ << "," << b_ << ")"; break;
    case Kind::Box: os << "box(" << a_ << ".." << b_ << "," << c_ << ".." << d_ << ")"; break;
    case Kind::LineI: os << "line_i(" << a_ << ")"; break;
    case Kind::Explicit: os << "explicit(" << points_.size() << " points)"; break;
  }
  return os.str();
}

bool TestDomain::validate() const {
  // Down-left escape.  Every canonical kind loses membership once both
  // coordinates are pushed below its defining bounds; finite sets escape
  // trivially.  Half-plane/line kinds keyed on one coordinate escape
  // through that coordinate.
  if (kind_ == Kind::Explicit && points_.empty()) return false;

  // Rectangle convexity, checked empirically on a probe window around
  // the parameters: for p <= r (componentwise) in P the whole rectangle
  // [p,r] must lie in P.
  std::vector<Gi> probe;
  if (kind_ == Kind::Explicit) {
    probe = points_;
  } else {
    int ci = a_;
    int cj = (kind_ == Kind::Box) ? c_ : b_;
    for (int di = -6; di <= 6; ++di)
      for (int dj = -6; dj <= 6; ++dj)
        if (contains({ci + di, cj + dj})) probe.push_back({ci + di, cj + dj});
  }
  for (auto& p : probe)
    for (auto& r : probe) {
      if (p.first > r.first || p.second > r.second) continue;
      for (int i = p.first; i <= r.first; ++i)
        for (int j = p.second; j <= r.second; ++j)
          if (!contains({i, j})) return false;
    }
  return true;
}

bool TestDomain::finite_fibers() const {
  switch (kind_) {
    case Kind::Singleton:
    case Kind::Box:
    case Kind::LineI:
    case Kind::Explicit: return true;
    default: return false;
  }
}

std::optional<std::pair<int, int>> TestDomain::first_range() const {
  switch (kind_) {
    case Kind::Singleton: return std::pair{a_, a_};
    case Kind::Box: return std::pair{a_, b_};
    case Kind::LineI: return std::pair{a_, a_};
    case Kind::Explicit: {
      if (points_.empty()) return std::pair{0, -1};
      int lo = points_.front().first, hi = lo;
      for (auto& p : points_) {
        lo = std::min(lo, p.first);
        hi = std::max(hi, p.first);
      }
      return std::pair{lo, hi};
    }
    default: return std::nullopt;
  }
}

std::optional<std::pair<int, int>> TestDomain::second_range() const {
  switch (kind_) {
    case Kind::Singleton: return std::pair{b_, b_};
    case Kind::Box: return std::pair{c_, d_};
    case Kind::Explicit: {
      if (points_.empty()) return std::pair{0, -1};
      int lo = points_.front().second, hi = lo;
      for (auto& p : points_) {
        lo = std::min(lo, p.second);
        hi = std::max(hi, p.second);
      }
      return std::pair{lo, hi};
    }
    default: return std::nullopt;
  }
}

std::optional<TestDomain> TestDomain::by_name(const std::string& name) {
  if (name == "hat" || name == "singleton" || name == "singleton(0,0)")
    return singleton(0, 0);
  if (name == "line" || name == "line_i(0)" || name == "i=0") return line_i(0);
  return std::nullopt;
}

}  // namespace hfk
