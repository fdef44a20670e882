// Copyright 2026 The conecheck authors
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

#ifndef CONECHECK_CONE_LAWS_HPP_
#define CONECHECK_CONE_LAWS_HPP_

#include <functional>
#include <string>
#include <utility>

#include "conecheck/rational.hpp"
#include "conecheck/report.hpp"
#include "conecheck/sampling.hpp"

namespace conecheck {

/// A preordered cone with a neighborhood relation, packaged for the
/// sampler-driven law checks. Any carrier works as long as it supplies
/// these operations; the relation le_v interprets "x <= y + v" and is only
/// queried with v > 0. The two pair samplers exist to hit the relation's
/// boundary cases, which uniform sampling would rarely reach.
template <typename T>
struct ConeInstance {
  std::string name;
  T zero;
  std::function<T(Rng&)> sample;
  std::function<T(const T&, const T&)> add;
  std::function<T(const Rational&, const T&)> scale;
  std::function<bool(const T&, const T&)> equal;
  std::function<bool(const T&, const T&)> preorder;
  std::function<bool(const T&, const T&, const Rational&)> le_v;
  // (x, y) with x <= y + v; candidates are re-checked before use
  std::function<std::pair<T, T>(Rng&, const Rational&)> sample_le_v_pair;
  // z with y <= z + u
  std::function<T(Rng&, const T&, const Rational&)> sample_target;
  std::function<std::string(const T&)> show;
};

/// Checks the algebraic cone axioms over sampled elements and scalars:
/// associativity, commutativity, the neutral element, both distributive
/// laws, scalar compatibility, 1*x = x and 0*x = 0.
template <typename T>
LawReport check_cone_axioms(const ConeInstance<T>& inst,
                            const SampleConfig& cfg) {
  cfg.validate();
  LawReport rep("cone-axioms/" + inst.name);
  Rng rng(mix_seed(cfg.seed, "cone-axioms/" + inst.name));
  for (std::uint32_t i = 0; i < cfg.sample_count; ++i) {
    ++rep.samples;
    T x = inst.sample(rng), y = inst.sample(rng), z = inst.sample(rng);
    Rational r = sample_rational(rng, cfg), s = sample_rational(rng, cfg);
    auto in2 = [&] { return "x=" + inst.show(x) + ", y=" + inst.show(y); };
    auto in3 = [&] { return in2() + ", z=" + inst.show(z); };
    auto inr = [&] { return "r=" + r.str() + ", s=" + s.str(); };

    if (T l = inst.add(x, inst.add(y, z)), rr = inst.add(inst.add(x, y), z);
        !inst.equal(l, rr))
      rep.record("x+(y+z) == (x+y)+z", in3(),
                 inst.show(l) + " vs " + inst.show(rr));
    if (T l = inst.add(x, y), rr = inst.add(y, x); !inst.equal(l, rr))
      rep.record("x+y == y+x", in2(), inst.show(l) + " vs " + inst.show(rr));
    if (T l = inst.add(x, inst.zero); !inst.equal(l, x))
      rep.record("x+0 == x", "x=" + inst.show(x), inst.show(l));
    if (T l = inst.scale(r, inst.add(x, y)),
        rr = inst.add(inst.scale(r, x), inst.scale(r, y));
        !inst.equal(l, rr))
      rep.record("r*(x+y) == r*x+r*y", in2() + ", " + inr(),
                 inst.show(l) + " vs " + inst.show(rr));
    if (T l = inst.scale(r + s, x),
        rr = inst.add(inst.scale(r, x), inst.scale(s, x));
        !inst.equal(l, rr))
      rep.record("(r+s)*x == r*x+s*x", "x=" + inst.show(x) + ", " + inr(),
                 inst.show(l) + " vs " + inst.show(rr));
    if (T l = inst.scale(r * s, x), rr = inst.scale(r, inst.scale(s, x));
        !inst.equal(l, rr))
      rep.record("(r*s)*x == r*(s*x)", "x=" + inst.show(x) + ", " + inr(),
                 inst.show(l) + " vs " + inst.show(rr));
    if (T l = inst.scale(Rational(1), x); !inst.equal(l, x))
      rep.record("1*x == x", "x=" + inst.show(x), inst.show(l));
    if (T l = inst.scale(Rational(), x); !inst.equal(l, inst.zero))
      rep.record("0*x == 0", "x=" + inst.show(x), inst.show(l));
  }
  return rep;
}

/// Checks that the preorder is reflexive and transitive and that addition
/// and scaling preserve it.
template <typename T>
LawReport check_order_compat(const ConeInstance<T>& inst,
                             const SampleConfig& cfg) {
  cfg.validate();
  LawReport rep("order-compat/" + inst.name);
  Rng rng(mix_seed(cfg.seed, "order-compat/" + inst.name));
  for (std::uint32_t i = 0; i < cfg.sample_count; ++i) {
    ++rep.samples;
    T x = inst.sample(rng);
    // bias towards comparable pairs: x and x + t*x share the index class
    T y = rng.chance(1, 2)
              ? inst.add(x, inst.scale(sample_rational(rng, cfg), x))
              : inst.sample(rng);
    T z = inst.sample(rng);
    Rational r = sample_rational(rng, cfg);

    if (!inst.preorder(x, x))
      rep.record("x <= x (reflexive)", "x=" + inst.show(x), "not related");
    if (inst.preorder(x, y)) {
      if (!inst.preorder(inst.add(x, z), inst.add(y, z)))
        rep.record("x <= y implies x+z <= y+z",
                   "x=" + inst.show(x) + ", y=" + inst.show(y) +
                       ", z=" + inst.show(z),
                   "sum pair not related");
      if (!inst.preorder(inst.scale(r, x), inst.scale(r, y)))
        rep.record("x <= y implies r*x <= r*y",
                   "x=" + inst.show(x) + ", y=" + inst.show(y) +
                       ", r=" + r.str(),
                   "scaled pair not related");
      T w = rng.chance(1, 2)
                ? inst.add(y, inst.scale(sample_rational(rng, cfg), y))
                : inst.sample(rng);
      if (inst.preorder(y, w) && !inst.preorder(x, w))
        rep.record("x <= y <= w implies x <= w (transitive)",
                   "x=" + inst.show(x) + ", y=" + inst.show(y) +
                       ", w=" + inst.show(w),
                   "chain endpoint not related");
    }
  }
  return rep;
}

/// Checks the neighborhood-system laws of the relation: monotone in the
/// radius, composable (x <= y+v and y <= z+u give x <= z+(v+u)), and an
/// order embedding (x <= y forces x <= y+v). The radius set itself is the
/// positive rationals: closure under + and positive scaling and the
/// directedness witness min(u, v) are asserted structurally on samples.
template <typename T>
LawReport check_v_system(const ConeInstance<T>& inst, const SampleConfig& cfg) {
  cfg.validate();
  LawReport rep("v-system/" + inst.name);
  Rng rng(mix_seed(cfg.seed, "v-system/" + inst.name));
  for (std::uint32_t i = 0; i < cfg.sample_count; ++i) {
    ++rep.samples;
    Rational v = sample_positive_rational(rng, cfg);
    Rational u = sample_positive_rational(rng, cfg);
    auto [x, y] = inst.sample_le_v_pair(rng, v);

    if (inst.le_v(x, y, v)) {
      if (!inst.le_v(x, y, v + u))
        rep.record("v <= u and x <= y+v imply x <= y+u",
                   "x=" + inst.show(x) + ", y=" + inst.show(y) +
                       ", v=" + v.str() + ", u=" + (v + u).str(),
                   "relation lost at larger radius");
      T z = inst.sample_target(rng, y, u);
      if (inst.le_v(y, z, u) && !inst.le_v(x, z, v + u))
        rep.record("x <= y+v and y <= z+u imply x <= z+(v+u)",
                   "x=" + inst.show(x) + ", y=" + inst.show(y) +
                       ", z=" + inst.show(z) + ", v=" + v.str() +
                       ", u=" + u.str(),
                   "composition failed");
    }
    T p = inst.sample(rng);
    T q = rng.chance(1, 2)
              ? inst.add(p, inst.scale(sample_rational(rng, cfg), p))
              : inst.sample(rng);
    if (inst.preorder(p, q) && !inst.le_v(p, q, v))
      rep.record("x <= y implies x <= y+v",
                 "x=" + inst.show(p) + ", y=" + inst.show(q) +
                     ", v=" + v.str(),
                 "order embedding failed");
    Rational alpha = sample_positive_rational(rng, cfg);
    Rational m = u <= v ? u : v;
    if (!(v + u).positive() || !(alpha * v).positive() || !(m <= u && m <= v) ||
        !m.positive())
      rep.record("radius set closed under +, positive scaling, and min",
                 "v=" + v.str() + ", u=" + u.str() + ", alpha=" + alpha.str(),
                 "structural closure failed");
  }
  return rep;
}

/// Boundedness below: for each sampled (a, v) searches rho in {1, 2, 4, ...}
/// up to cfg.rho_cap for 0 <= a + rho*v. Exhausting the cap is recorded as
/// inconclusive rather than failed; a bounded search cannot refute an
/// existence claim.
template <typename T>
LawReport check_bounded_below(const ConeInstance<T>& inst,
                              const SampleConfig& cfg) {
  cfg.validate();
  LawReport rep("bounded-below/" + inst.name);
  Rng rng(mix_seed(cfg.seed, "bounded-below/" + inst.name));
  std::uint64_t inconclusive = 0;
  std::uint64_t max_rho = 0;
  for (std::uint32_t i = 0; i < cfg.sample_count; ++i) {
    ++rep.samples;
    T a = inst.sample(rng);
    Rational v = sample_positive_rational(rng, cfg);
    bool found = false;
    for (std::uint64_t rho = 1; rho <= cfg.rho_cap; rho *= 2) {
      if (inst.le_v(inst.zero, a, Rational(static_cast<long long>(rho)) * v)) {
        found = true;
        if (rho > max_rho) max_rho = rho;
        break;
      }
    }
    if (!found) ++inconclusive;
  }
  if (inconclusive > 0) {
    rep.note = "inconclusive: rho search cap exhausted for " +
               std::to_string(inconclusive) + " samples";
  } else {
    rep.note = "max rho = " + std::to_string(max_rho);
  }
  return rep;
}

/// Uniform continuity of a functional at radius v: whenever a <= b + v,
/// mu(a) <= mu(b) + 1. Pairs are drawn from the instance's relation
/// sampler so the exact boundary a = b + jv is exercised.
template <typename T>
LawReport check_functional_continuity(
    const std::function<ExtReal(const T&)>& mu, const std::string& mu_name,
    const ConeInstance<T>& inst, const Rational& v, const SampleConfig& cfg) {
  cfg.validate();
  if (!v.positive())
    throw std::invalid_argument("check_functional_continuity: v must be > 0");
  LawReport rep("continuity/" + mu_name);
  Rng rng(mix_seed(cfg.seed, "continuity/" + mu_name + "/" + inst.name));
  const ExtReal one{Rational(1)};
  for (std::uint32_t i = 0; i < cfg.sample_count; ++i) {
    ++rep.samples;
    auto [a, b] = inst.sample_le_v_pair(rng, v);
    if (!inst.le_v(a, b, v)) continue;
    ExtReal lhs = mu(a), rhs = mu(b) + one;
    if (!(lhs <= rhs))
      rep.record("a <= b+v implies mu(a) <= mu(b)+1",
                 "a=" + inst.show(a) + ", b=" + inst.show(b) +
                     ", v=" + v.str(),
                 "mu(a)=" + lhs.str() + ", mu(b)=" + mu(b).str());
  }
  return rep;
}

}  // namespace conecheck

#endif  // CONECHECK_CONE_LAWS_HPP_
