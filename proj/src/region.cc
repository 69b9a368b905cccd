// Copyright 2026 The schmidt-games Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "schmidt/region.h"

#include <algorithm>
#include <sstream>

#include "schmidt/error.h"
#include "schmidt/text.h"

namespace schmidt {
namespace {

// Lower endpoints ordered with -inf first; at equal values a closed end
// starts earlier.
bool LoBefore(const Interval& a, const Interval& b) {
  if (!a.lo) return b.lo.has_value();
  if (!b.lo) return false;
  if (*a.lo != *b.lo) return *a.lo < *b.lo;
  return a.lo_closed && !b.lo_closed;
}

// True when a's upper end reaches at least as far as b's.
bool HiAtLeast(const Interval& a, const Interval& b) {
  if (!a.hi) return true;
  if (!b.hi) return false;
  if (*a.hi != *b.hi) return *a.hi > *b.hi;
  return a.hi_closed || !b.hi_closed;
}

Interval IntersectOne(const Interval& a, const Interval& b) {
  Interval r;
  r.lo = LoBefore(a, b) ? b.lo : a.lo;
  r.lo_closed = LoBefore(a, b) ? b.lo_closed : a.lo_closed;
  if (a.lo && b.lo && *a.lo == *b.lo) r.lo_closed = a.lo_closed && b.lo_closed;
  const bool a_reaches = HiAtLeast(a, b);
  r.hi = a_reaches ? b.hi : a.hi;
  r.hi_closed = a_reaches ? b.hi_closed : a.hi_closed;
  if (a.hi && b.hi && *a.hi == *b.hi) r.hi_closed = a.hi_closed && b.hi_closed;
  if (!r.lo) r.lo_closed = false;
  if (!r.hi) r.hi_closed = false;
  return r;
}

std::string RatOrInf(const std::optional<Rat>& x, const char* inf) {
  return x ? x->ToString() : std::string(inf);
}

std::string StemToString(const std::vector<int64_t>& stem) {
  if (stem.empty()) return ".";
  std::string s;
  for (size_t i = 0; i < stem.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(stem[i]);
  }
  return s;
}

std::vector<int64_t> ParseStem(const std::string& text) {
  std::vector<int64_t> stem;
  if (text == "." || text.empty()) return stem;
  for (const std::string& part : Split(text, '.')) {
    stem.push_back(ParseInt64(part, "stem"));
  }
  return stem;
}

// The stem equivalent of a Baire ball.
std::vector<int64_t> BaireBallStem(const Atom& a) {
  const size_t m = a.closed ? BaireCylinderLength(a.radius)
                            : BaireStrictCylinderLength(a.radius);
  std::vector<int64_t> stem(m);
  for (size_t i = 0; i < m; ++i) stem[i] = a.center.sequence().At(i);
  return stem;
}

bool StemsCompatible(const std::vector<int64_t>& a,
                     const std::vector<int64_t>& b) {
  const size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

}  // namespace

bool Interval::IsEmpty() const {
  if (!lo || !hi) return false;
  if (*lo != *hi) return *lo > *hi;
  return !(lo_closed && hi_closed);
}

bool Interval::Contains(const Rat& x) const {
  if (lo && (x < *lo || (x == *lo && !lo_closed))) return false;
  if (hi && (x > *hi || (x == *hi && !hi_closed))) return false;
  return true;
}

Rat Interval::AnyPoint() const {
  if (IsEmpty()) throw InvalidArgumentError("empty interval has no point");
  if (lo && lo_closed) return *lo;
  if (hi && hi_closed) return *hi;
  if (lo && hi) return (*lo + *hi) / Rat(2);
  if (lo) return *lo + Rat(1);
  if (hi) return *hi - Rat(1);
  return Rat(0);
}

std::string Interval::ToString() const {
  return std::string(lo_closed && lo ? "[" : "(") + RatOrInf(lo, "-inf") +
         "," + RatOrInf(hi, "inf") + (hi_closed && hi ? "]" : ")");
}

Interval Interval::Parse(std::string_view text) {
  const std::string s(Trim(text));
  if (s.size() < 5 || (s.front() != '[' && s.front() != '(') ||
      (s.back() != ']' && s.back() != ')')) {
    throw ParseError("interval", "expected [a,b) style bounds, got \"" + s +
                                     "\"");
  }
  const auto ends = Split(s.substr(1, s.size() - 2), ',');
  if (ends.size() != 2) {
    throw ParseError("interval", "expected two bounds in \"" + s + "\"");
  }
  Interval i;
  const std::string a(Trim(ends[0])), b(Trim(ends[1]));
  if (a != "-inf") i.lo = Rat::Parse(a);
  if (b != "inf" && b != "+inf") i.hi = Rat::Parse(b);
  i.lo_closed = i.lo && s.front() == '[';
  i.hi_closed = i.hi && s.back() == ']';
  return i;
}

IntervalSet::IntervalSet(Interval i) {
  if (!i.IsEmpty()) parts_.push_back(std::move(i));
}

IntervalSet IntervalSet::FromIntervals(std::vector<Interval> parts) {
  std::erase_if(parts, [](const Interval& i) { return i.IsEmpty(); });
  std::sort(parts.begin(), parts.end(), LoBefore);
  IntervalSet out;
  for (Interval& p : parts) {
    if (!out.parts_.empty()) {
      Interval& cur = out.parts_.back();
      const bool touches =
          !cur.hi || !p.lo || *p.lo < *cur.hi ||
          (*p.lo == *cur.hi && (p.lo_closed || cur.hi_closed));
      if (touches) {
        if (!HiAtLeast(cur, p)) {
          cur.hi = p.hi;
          cur.hi_closed = p.hi_closed;
        }
        continue;
      }
    }
    out.parts_.push_back(std::move(p));
  }
  return out;
}

bool IntervalSet::Contains(const Rat& x) const {
  return std::any_of(parts_.begin(), parts_.end(),
                     [&](const Interval& i) { return i.Contains(x); });
}

std::optional<Rat> IntervalSet::AnyPoint() const {
  if (parts_.empty()) return std::nullopt;
  return parts_.front().AnyPoint();
}

IntervalSet IntervalSet::Intersect(const IntervalSet& o) const {
  std::vector<Interval> out;
  for (const Interval& a : parts_) {
    for (const Interval& b : o.parts_) out.push_back(IntersectOne(a, b));
  }
  return FromIntervals(std::move(out));
}

IntervalSet IntervalSet::Unite(const IntervalSet& o) const {
  std::vector<Interval> all = parts_;
  all.insert(all.end(), o.parts_.begin(), o.parts_.end());
  return FromIntervals(std::move(all));
}

IntervalSet IntervalSet::Complement() const {
  std::vector<Interval> gaps;
  std::optional<Rat> prev;
  bool prev_closed = false;
  bool at_start = true;
  for (const Interval& p : parts_) {
    if (p.lo) {
      Interval g;
      g.lo = at_start ? std::nullopt : prev;
      g.lo_closed = !at_start && !prev_closed;
      g.hi = p.lo;
      g.hi_closed = !p.lo_closed;
      gaps.push_back(g);
    }
    if (!p.hi) return FromIntervals(std::move(gaps));
    prev = p.hi;
    prev_closed = p.hi_closed;
    at_start = false;
  }
  Interval tail;
  tail.lo = at_start ? std::nullopt : prev;
  tail.lo_closed = !at_start && !prev_closed;
  tail.hi = std::nullopt;
  tail.hi_closed = false;
  gaps.push_back(tail);
  return FromIntervals(std::move(gaps));
}

IntervalSet IntervalSet::Subtract(const IntervalSet& o) const {
  return Intersect(o.Complement());
}

std::string IntervalSet::ToString() const {
  if (parts_.empty()) return "{}";
  std::string s;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += " u ";
    s += parts_[i].ToString();
  }
  return s;
}

Atom Atom::MakeInterval(Interval i) {
  Atom a;
  a.kind = Kind::kInterval;
  a.interval = std::move(i);
  return a;
}

Atom Atom::MakeBox(Vec lo, Vec hi) {
  if (lo.size() != hi.size() || lo.size() < 2) {
    throw InvalidArgumentError("box corners must share a dimension >= 2");
  }
  Atom a;
  a.kind = Kind::kBox;
  a.box_lo = std::move(lo);
  a.box_hi = std::move(hi);
  return a;
}

Atom Atom::MakeBall(Point center, Rat radius, bool closed) {
  if (!radius.IsPositive()) throw InvalidArgumentError("ball radius must be > 0");
  Atom a;
  a.kind = Kind::kBall;
  a.center = std::move(center);
  a.radius = std::move(radius);
  a.closed = closed;
  return a;
}

Atom Atom::MakeStem(std::vector<int64_t> stem) {
  Atom a;
  a.kind = Kind::kStem;
  a.stem = std::move(stem);
  return a;
}

bool Atom::Contains(const Point& p) const {
  switch (kind) {
    case Kind::kInterval:
      if (p.kind() != SpaceKind::kLine) {
        throw SpaceMismatchError("interval cell queried off the line");
      }
      return interval.Contains(p.x());
    case Kind::kBox: {
      if (p.kind() != SpaceKind::kEuclid || p.coords().size() != box_lo.size()) {
        throw SpaceMismatchError("box cell queried with a point of another "
                                 "space");
      }
      for (size_t i = 0; i < box_lo.size(); ++i) {
        if (p.coords()[i] < box_lo[i] || p.coords()[i] >= box_hi[i]) {
          return false;
        }
      }
      return true;
    }
    case Kind::kBall: {
      const auto c = DistCmp(p, center, radius);
      return closed ? c <= 0 : c < 0;
    }
    case Kind::kStem:
      if (p.kind() != SpaceKind::kBaire) {
        throw SpaceMismatchError("stem cell queried outside Baire space");
      }
      for (size_t i = 0; i < stem.size(); ++i) {
        if (p.sequence().At(i) != stem[i]) return false;
      }
      return true;
  }
  return false;
}

std::optional<IntervalSet> Atom::OnLine() const {
  if (kind == Kind::kInterval) return IntervalSet(interval);
  if (kind == Kind::kBall && center.kind() == SpaceKind::kLine) {
    return IntervalSet(Interval{center.x() - radius, closed,
                                center.x() + radius, closed});
  }
  return std::nullopt;
}

std::string Atom::ToString() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::kInterval:
      os << "interval " << interval.ToString();
      break;
    case Kind::kBox:
      os << "box " << Point::Euclid(box_lo) << ' ' << Point::Euclid(box_hi);
      break;
    case Kind::kBall:
      os << "ball " << (closed ? "closed " : "open ") << center << ' '
         << radius;
      break;
    case Kind::kStem:
      os << "stem " << StemToString(stem);
      break;
  }
  return os.str();
}

Atom Atom::Parse(const std::vector<std::string>& tokens, size_t* pos) {
  auto need = [&](size_t n) {
    if (*pos + n > tokens.size()) {
      throw ParseError("cell", "truncated cell descriptor");
    }
  };
  need(1);
  const std::string kind = tokens[(*pos)++];
  if (kind == "interval") {
    need(1);
    return MakeInterval(Interval::Parse(tokens[(*pos)++]));
  }
  if (kind == "box") {
    need(2);
    Point lo = Point::Parse(tokens[(*pos)++]);
    Point hi = Point::Parse(tokens[(*pos)++]);
    if (lo.kind() != SpaceKind::kEuclid || hi.kind() != SpaceKind::kEuclid) {
      throw ParseError("cell", "box corners must be points of R^n");
    }
    return MakeBox(lo.coords(), hi.coords());
  }
  if (kind == "ball") {
    need(3);
    const std::string mode = tokens[(*pos)++];
    if (mode != "open" && mode != "closed") {
      throw ParseError("cell", "ball must be open or closed, got " + mode);
    }
    Point c = Point::Parse(tokens[(*pos)++]);
    Rat r = Rat::Parse(tokens[(*pos)++]);
    return MakeBall(std::move(c), std::move(r), mode == "closed");
  }
  if (kind == "stem") {
    need(1);
    return MakeStem(ParseStem(tokens[(*pos)++]));
  }
  throw ParseError("cell", "unknown cell kind \"" + kind + "\"");
}

bool Cell::Contains(const Point& p) const {
  if (!base.Contains(p)) return false;
  return std::none_of(excluded.begin(), excluded.end(),
                      [&](const Atom& a) { return a.Contains(p); });
}

std::optional<IntervalSet> Cell::OnLine() const {
  std::optional<IntervalSet> s = base.OnLine();
  if (!s) return std::nullopt;
  for (const Atom& a : excluded) {
    const std::optional<IntervalSet> e = a.OnLine();
    if (!e) return std::nullopt;
    s = s->Subtract(*e);
  }
  return s;
}

std::string Cell::ToString() const {
  std::string s = base.ToString();
  for (const Atom& a : excluded) s += " minus " + a.ToString();
  return s;
}

Cell Cell::Parse(const std::vector<std::string>& tokens, size_t* pos) {
  Cell c;
  c.base = Atom::Parse(tokens, pos);
  while (*pos < tokens.size() && tokens[*pos] == "minus") {
    ++*pos;
    c.excluded.push_back(Atom::Parse(tokens, pos));
  }
  return c;
}

Disjointness CellsDisjoint(const Cell& a, const Cell& b) {
  if (auto la = a.OnLine()) {
    if (auto lb = b.OnLine()) {
      return la->Intersect(*lb).IsEmpty() ? Disjointness::kDisjoint
                                          : Disjointness::kOverlap;
    }
  }
  auto excludes = [](const Cell& c, const Atom& x) {
    return std::find(c.excluded.begin(), c.excluded.end(), x) !=
           c.excluded.end();
  };
  if (excludes(a, b.base) || excludes(b, a.base)) {
    return Disjointness::kDisjoint;
  }
  const bool plain = a.excluded.empty() && b.excluded.empty();
  const Disjointness touching =
      plain ? Disjointness::kOverlap : Disjointness::kUncertified;
  const Atom& x = a.base;
  const Atom& y = b.base;
  using K = Atom::Kind;
  auto stem_of = [](const Atom& t) -> std::optional<std::vector<int64_t>> {
    if (t.kind == K::kStem) return t.stem;
    if (t.kind == K::kBall && t.center.kind() == SpaceKind::kBaire) {
      return BaireBallStem(t);
    }
    return std::nullopt;
  };
  if (auto sx = stem_of(x)) {
    if (auto sy = stem_of(y)) {
      return StemsCompatible(*sx, *sy) ? touching : Disjointness::kDisjoint;
    }
  }
  if (x.kind == K::kBox && y.kind == K::kBox) {
    if (x.box_lo.size() != y.box_lo.size()) {
      throw SpaceMismatchError("boxes of different dimensions");
    }
    for (size_t i = 0; i < x.box_lo.size(); ++i) {
      if (x.box_hi[i] <= y.box_lo[i] || y.box_hi[i] <= x.box_lo[i]) {
        return Disjointness::kDisjoint;
      }
    }
    return touching;
  }
  if (x.kind == K::kBall && y.kind == K::kBall) {
    const auto c = DistCmp(x.center, y.center, x.radius + y.radius);
    if (c > 0 || (c == 0 && !(x.closed && y.closed))) {
      return Disjointness::kDisjoint;
    }
    return c < 0 ? touching : Disjointness::kUncertified;
  }
  if ((x.kind == K::kBox && y.kind == K::kBall) ||
      (x.kind == K::kBall && y.kind == K::kBox)) {
    const Atom& box = x.kind == K::kBox ? x : y;
    const Atom& ball = x.kind == K::kBox ? y : x;
    const Vec& c = ball.center.coords();
    if (c.size() != box.box_lo.size()) {
      throw SpaceMismatchError("box and ball of different dimensions");
    }
    Rat d2(0);
    for (size_t i = 0; i < c.size(); ++i) {
      if (c[i] < box.box_lo[i]) {
        d2 += (box.box_lo[i] - c[i]) * (box.box_lo[i] - c[i]);
      } else if (c[i] > box.box_hi[i]) {
        d2 += (c[i] - box.box_hi[i]) * (c[i] - box.box_hi[i]);
      }
    }
    const Rat r2 = ball.radius * ball.radius;
    if (d2 > r2 || (d2 == r2 && !ball.closed)) return Disjointness::kDisjoint;
    return d2 < r2 ? touching : Disjointness::kUncertified;
  }
  return Disjointness::kUncertified;
}

}  // namespace schmidt
