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

#include "schmidt/target.h"

#include <utility>

#include "schmidt/error.h"
#include "schmidt/text.h"

namespace schmidt {

const char* MembershipName(Membership m) {
  switch (m) {
    case Membership::kIn: return "In";
    case Membership::kOut: return "Out";
    case Membership::kUnknown: return "Unknown";
  }
  return "?";
}

const char* TruthName(Truth t) {
  switch (t) {
    case Truth::kYes: return "Yes";
    case Truth::kNo: return "No";
    case Truth::kUnknown: return "Unknown";
  }
  return "?";
}

namespace {

void RequireLine(const Point& p, const std::string& who) {
  if (p.kind() != SpaceKind::kLine) {
    throw SpaceMismatchError(who + " is a subset of the line, got " +
                             p.ToString());
  }
}

Truth FromBool(bool b) { return b ? Truth::kYes : Truth::kNo; }

// Every representable point is rational, so Q answers exactly In.
class RayUnionQTarget final : public TargetSet {
 public:
  Membership PointQuery(const Point& p) const override {
    RequireLine(p, Describe());
    return Membership::kIn;
  }
  Truth BallInside(const Ball& b) const override {
    RequireLine(b.center, Describe());
    const Rat& c = b.center.x();
    // A ball meeting (-1, 1) in a nondegenerate interval contains irrationals
    // outside the rays, so the answer is exact.
    return FromBool(c + b.radius <= Rat(-1) || c - b.radius >= Rat(1));
  }
  Truth BallDisjoint(const Ball& b) const override {
    RequireLine(b.center, Describe());
    return Truth::kNo;  // Q is dense
  }
  std::string Describe() const override { return "rayq"; }
};

class RationalsTarget final : public TargetSet {
 public:
  explicit RationalsTarget(bool complement) : complement_(complement) {}
  Membership PointQuery(const Point& p) const override {
    RequireLine(p, Describe());
    return complement_ ? Membership::kOut : Membership::kIn;
  }
  Truth BallInside(const Ball& b) const override {
    RequireLine(b.center, Describe());
    return Truth::kNo;
  }
  Truth BallDisjoint(const Ball& b) const override {
    RequireLine(b.center, Describe());
    return Truth::kNo;
  }
  std::string Describe() const override { return complement_ ? "coQ" : "Q"; }

 private:
  bool complement_;
};

class IntervalTarget final : public TargetSet {
 public:
  IntervalTarget(std::optional<Rat> lo, std::optional<Rat> hi)
      : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ && hi_ && *lo_ > *hi_) {
      throw InvalidArgumentError("empty interval target");
    }
  }
  Membership PointQuery(const Point& p) const override {
    RequireLine(p, Describe());
    const Rat& x = p.x();
    const bool in = (!lo_ || x >= *lo_) && (!hi_ || x <= *hi_);
    return in ? Membership::kIn : Membership::kOut;
  }
  Truth BallInside(const Ball& b) const override {
    RequireLine(b.center, Describe());
    const Rat& c = b.center.x();
    return FromBool((!lo_ || c - b.radius >= *lo_) &&
                    (!hi_ || c + b.radius <= *hi_));
  }
  Truth BallDisjoint(const Ball& b) const override {
    RequireLine(b.center, Describe());
    const Rat& c = b.center.x();
    return FromBool((lo_ && c + b.radius < *lo_) ||
                    (hi_ && c - b.radius > *hi_));
  }
  std::string Describe() const override {
    return "interval:" + (lo_ ? lo_->ToString() : std::string("-inf")) + "," +
           (hi_ ? hi_->ToString() : std::string("inf"));
  }

 private:
  std::optional<Rat> lo_, hi_;
};

class ConstantTarget final : public TargetSet {
 public:
  explicit ConstantTarget(bool all) : all_(all) {}
  Membership PointQuery(const Point&) const override {
    return all_ ? Membership::kIn : Membership::kOut;
  }
  Truth BallInside(const Ball&) const override { return FromBool(all_); }
  Truth BallDisjoint(const Ball&) const override { return FromBool(!all_); }
  std::string Describe() const override { return all_ ? "all" : "none"; }

 private:
  bool all_;
};

class StemTarget final : public TargetSet {
 public:
  explicit StemTarget(std::vector<int64_t> stem) : stem_(std::move(stem)) {}
  Membership PointQuery(const Point& p) const override {
    return Extends(p.sequence(), stem_.size()) ? Membership::kIn
                                               : Membership::kOut;
  }
  Truth BallInside(const Ball& b) const override {
    const size_t m = BaireCylinderLength(b.radius);
    if (m < stem_.size()) return Truth::kNo;
    return FromBool(Extends(b.center.sequence(), stem_.size()));
  }
  Truth BallDisjoint(const Ball& b) const override {
    const size_t m = BaireCylinderLength(b.radius);
    return FromBool(!Extends(b.center.sequence(), std::min(m, stem_.size())));
  }
  std::string Describe() const override {
    std::string s = "stem:";
    for (size_t i = 0; i < stem_.size(); ++i) {
      if (i > 0) s += ".";
      s += std::to_string(stem_[i]);
    }
    return s;
  }

 private:
  // Whether seq agrees with stem_ on the first `len` coordinates.
  bool Extends(const BaireSequence& seq, size_t len) const {
    for (size_t i = 0; i < len; ++i) {
      if (seq.At(i) != stem_[i]) return false;
    }
    return true;
  }

  std::vector<int64_t> stem_;
};

class UnionTarget final : public TargetSet {
 public:
  UnionTarget(TargetPtr a, TargetPtr b) : a_(std::move(a)), b_(std::move(b)) {}
  Membership PointQuery(const Point& p) const override {
    const Membership x = a_->PointQuery(p), y = b_->PointQuery(p);
    if (x == Membership::kIn || y == Membership::kIn) return Membership::kIn;
    if (x == Membership::kOut && y == Membership::kOut) return Membership::kOut;
    return Membership::kUnknown;
  }
  // Sound but incomplete: a ball covered jointly by both parts, and by
  // neither alone, answers kUnknown.
  Truth BallInside(const Ball& ball) const override {
    const Truth ia = a_->BallInside(ball), ib = b_->BallInside(ball);
    if (ia == Truth::kYes || ib == Truth::kYes) return Truth::kYes;
    // B not inside one part and missing the other entirely.
    if ((ia == Truth::kNo && b_->BallDisjoint(ball) == Truth::kYes) ||
        (ib == Truth::kNo && a_->BallDisjoint(ball) == Truth::kYes)) {
      return Truth::kNo;
    }
    return Truth::kUnknown;
  }
  Truth BallDisjoint(const Ball& ball) const override {
    const Truth da = a_->BallDisjoint(ball), db = b_->BallDisjoint(ball);
    if (da == Truth::kYes && db == Truth::kYes) return Truth::kYes;
    if (da == Truth::kNo || db == Truth::kNo) return Truth::kNo;
    return Truth::kUnknown;
  }
  std::string Describe() const override {
    return "union(" + a_->Describe() + "," + b_->Describe() + ")";
  }

 private:
  TargetPtr a_, b_;
};

class ComplementTarget final : public TargetSet {
 public:
  explicit ComplementTarget(TargetPtr t) : t_(std::move(t)) {}
  Membership PointQuery(const Point& p) const override {
    switch (t_->PointQuery(p)) {
      case Membership::kIn: return Membership::kOut;
      case Membership::kOut: return Membership::kIn;
      case Membership::kUnknown: return Membership::kUnknown;
    }
    return Membership::kUnknown;
  }
  Truth BallInside(const Ball& b) const override { return t_->BallDisjoint(b); }
  Truth BallDisjoint(const Ball& b) const override { return t_->BallInside(b); }
  std::string Describe() const override {
    return "compl(" + t_->Describe() + ")";
  }

 private:
  TargetPtr t_;
};

// Splits "a,b(c,d),e" at depth-0 commas.
std::vector<std::string> SplitTopLevel(std::string_view s) {
  std::vector<std::string> out;
  int depth = 0;
  size_t start = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth < 0) throw ParseError("target", "unbalanced parentheses");
    if (s[i] == ',' && depth == 0) {
      const std::string_view part = Trim(s.substr(start, i - start));
      // interval:a,b keeps its own comma.
      if (StartsWith(part, "interval:") &&
          part.find(',') == std::string_view::npos) {
        continue;
      }
      out.emplace_back(part);
      start = i + 1;
    }
  }
  if (depth != 0) throw ParseError("target", "unbalanced parentheses");
  out.emplace_back(Trim(s.substr(start)));
  return out;
}

std::optional<Rat> ParseBound(std::string_view s) {
  if (s == "-inf" || s == "inf" || s == "+inf") return std::nullopt;
  return Rat::Parse(s);
}

}  // namespace

TargetPtr RayUnionQ() { return std::make_shared<RayUnionQTarget>(); }
TargetPtr Rationals() { return std::make_shared<RationalsTarget>(false); }
TargetPtr CoRationals() { return std::make_shared<RationalsTarget>(true); }
TargetPtr ClosedInterval(std::optional<Rat> lo, std::optional<Rat> hi) {
  return std::make_shared<IntervalTarget>(std::move(lo), std::move(hi));
}
TargetPtr Everything() { return std::make_shared<ConstantTarget>(true); }
TargetPtr Nothing() { return std::make_shared<ConstantTarget>(false); }
TargetPtr StemCylinder(std::vector<int64_t> stem) {
  return std::make_shared<StemTarget>(std::move(stem));
}
TargetPtr Union(TargetPtr a, TargetPtr b) {
  return std::make_shared<UnionTarget>(std::move(a), std::move(b));
}
TargetPtr Complement(TargetPtr t) {
  return std::make_shared<ComplementTarget>(std::move(t));
}

TargetPtr ParseTarget(std::string_view text,
                      const CylinderFactory& cylinder_factory) {
  text = Trim(text);
  if (text == "rayq") return RayUnionQ();
  if (text == "Q") return Rationals();
  if (text == "coQ") return CoRationals();
  if (text == "all") return Everything();
  if (text == "none") return Nothing();
  if (StartsWith(text, "interval:")) {
    const auto parts = Split(text.substr(9), ',');
    if (parts.size() != 2) {
      throw ParseError("target", "interval:a,b needs two bounds");
    }
    return ClosedInterval(ParseBound(Trim(parts[0])), ParseBound(Trim(parts[1])));
  }
  if (StartsWith(text, "stem:")) {
    std::vector<int64_t> stem;
    const std::string_view body = text.substr(5);
    if (!body.empty()) {
      for (const auto& part : Split(body, '.')) {
        stem.push_back(ParseInt64(part, "target"));
      }
    }
    return StemCylinder(std::move(stem));
  }
  if (StartsWith(text, "cylinder:")) {
    if (!cylinder_factory) {
      throw ParseError("target", "cylinder targets need game parameters");
    }
    return cylinder_factory(std::string(text.substr(9)));
  }
  auto call_args = [&](std::string_view name) -> std::optional<std::string> {
    if (StartsWith(text, name) && text.size() > name.size() + 1 &&
        text[name.size()] == '(' && text.back() == ')') {
      return std::string(text.substr(name.size() + 1,
                                     text.size() - name.size() - 2));
    }
    return std::nullopt;
  };
  if (auto args = call_args("union")) {
    const auto parts = SplitTopLevel(*args);
    if (parts.size() < 2) throw ParseError("target", "union needs >= 2 sets");
    TargetPtr t = ParseTarget(parts[0], cylinder_factory);
    for (size_t i = 1; i < parts.size(); ++i) {
      t = Union(t, ParseTarget(parts[i], cylinder_factory));
    }
    return t;
  }
  if (auto args = call_args("compl")) {
    return Complement(ParseTarget(*args, cylinder_factory));
  }
  throw ParseError("target", "unrecognised target \"" + std::string(text) +
                                 "\"");
}

}  // namespace schmidt
