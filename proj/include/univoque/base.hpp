#pragma once

#include <string>
#include <vector>

#include "univoque/algebraic.hpp"
#include "univoque/digits.hpp"

namespace univoque {

Rat default_precision();

struct BaseContext {
  Digit M = 1;
  EpSeq beta;
  EpSeq alpha;
  std::size_t N = 0;  // period length of alpha when it is purely periodic
  BaseClass cls = BaseClass::NOT_IN_V;
  IntPoly poly;
  FieldPtr field;
  Rat precision;

  // α₁⋯α_N
  const Word& period() const { return alpha.per(); }
  bool graph_capable() const {
    return cls == BaseClass::IN_CLOSURE_U_NOT_U || cls == BaseClass::IN_V_NOT_CLOSURE_U;
  }
  // Same base with an independent isolating interval, for use on another thread.
  BaseContext clone() const;
};

BaseContext new_base_context(Digit M, const EpSeq& beta, const Rat& precision = default_precision());
BaseContext context_from_alpha(Digit M, const EpSeq& alpha, const Rat& precision = default_precision());

BaseContext v_successor(const BaseContext& ctx);
BaseContext r_chain(const BaseContext& ctx, int k);
// α(p_R) = α₁⋯α_N⁺ (reflected α₁⋯α_N)^∞
EpSeq p_right_alpha(const BaseContext& ctx);
BaseContext golden_ratio_base(Digit M);

enum class PointKind { A, B, THETA, ETA };

struct Point {
  PointKind kind;
  int index;
  AlgebraicReal value;
  EpSeq key;  // quasi-greedy expansion
  std::string name() const;
};

std::string point_name(PointKind kind, int index);

struct SpecialPoints {
  std::vector<Point> a;      // a_1 … a_{N+1}
  std::vector<Point> b;      // b_1 … b_{N+1}
  std::vector<Point> theta;  // θ_0 … θ_M
  std::vector<Point> eta;    // η_1 … η_{M+1}

  const Point& A(int i) const { return a.at(i - 1); }
  const Point& Bp(int i) const { return b.at(i - 1); }
  const Point& Theta(int j) const { return theta.at(j); }
  const Point& Eta(int j) const { return eta.at(j - 1); }
  std::vector<Point> all() const;
};

SpecialPoints special_points(const BaseContext& ctx);

struct PointClass {
  std::vector<Point> members;  // sorted by kind then index
  const AlgebraicReal& value() const { return members.front().value; }
  const EpSeq& key() const { return members.front().key; }
  std::vector<std::string> names() const;
  bool has(PointKind kind) const;
  bool has(PointKind kind, int index) const;
  // a, then b, then θ, then η
  std::string label() const { return members.front().name(); }
};

struct PointOrder {
  std::vector<PointClass> classes;
  // "theta0<b1<a3=theta1<..."
  std::string to_string() const;
};

// Total order of a_1…a_N, b_1…b_N, θ_0…θ_M, η_1…η_{M+1}.
PointOrder order_points(const BaseContext& ctx);
PointOrder order_points(const BaseContext& ctx, const SpecialPoints& sp);

// Parses "theta0<b1<a3=theta1" into classes of names, each class sorted.
std::vector<std::vector<std::string>> parse_chain(const std::string& text);
std::vector<std::vector<std::string>> chain_classes(const PointOrder& order);

}  // namespace univoque
