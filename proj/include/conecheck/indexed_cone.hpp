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

#ifndef CONECHECK_INDEXED_CONE_HPP_
#define CONECHECK_INDEXED_CONE_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "conecheck/rational.hpp"
#include "conecheck/sampling.hpp"

namespace conecheck {

/// Element of the indexed cone P: strictly positive rationals tagged with a
/// positive integer index, plus a neutral element 0_0 and an absorbing
/// element inf_inf. Index 0 and index "infinity" exist only as the two
/// structural tags; they are never stored as integers, which keeps every
/// operation a pure case analysis.
class PElem {
 public:
  enum class Tag : std::uint8_t { Zero, Member, Inf };

  static PElem zero() { return PElem(Tag::Zero, Rational(), 0); }
  static PElem inf() { return PElem(Tag::Inf, Rational(), 0); }
  static PElem member(Rational value, std::uint32_t index) {
    if (!value.positive())
      throw std::domain_error("PElem: member value must be > 0");
    if (index == 0) throw std::domain_error("PElem: member index must be >= 1");
    return PElem(Tag::Member, std::move(value), index);
  }

  Tag tag() const { return tag_; }
  bool is_zero() const { return tag_ == Tag::Zero; }
  bool is_member() const { return tag_ == Tag::Member; }
  bool is_inf() const { return tag_ == Tag::Inf; }

  const Rational& value() const {
    if (!is_member()) throw std::domain_error("PElem: no value on 0_0/inf_inf");
    return value_;
  }
  std::uint32_t index() const {
    if (!is_member()) throw std::domain_error("PElem: no index on 0_0/inf_inf");
    return index_;
  }

  /// "0_0", "inf_inf" or "p/q@i"; parse() accepts the same forms (with a
  /// lenient bare-integer value) and round-trips str() exactly.
  std::string str() const {
    switch (tag_) {
      case Tag::Zero:
        return "0_0";
      case Tag::Inf:
        return "inf_inf";
      default:
        return value_.str() + "@" + std::to_string(index_);
    }
  }
  static std::optional<PElem> parse(std::string_view text);

  friend bool operator==(const PElem& a, const PElem& b) {
    if (a.tag_ != b.tag_) return false;
    if (a.tag_ != Tag::Member) return true;
    return a.index_ == b.index_ && a.value_ == b.value_;
  }

 private:
  PElem(Tag tag, Rational value, std::uint32_t index)
      : tag_(tag), value_(std::move(value)), index_(index) {}

  Tag tag_;
  Rational value_;
  std::uint32_t index_;
};

/// Addition: equal indices add values, 0_0 is neutral, distinct finite
/// indices collapse to inf_inf, inf_inf is absorbing.
inline PElem operator+(const PElem& x, const PElem& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.is_inf() || y.is_inf()) return PElem::inf();
  if (x.index() == y.index())
    return PElem::member(x.value() + y.value(), x.index());
  return PElem::inf();
}

/// Scalar multiplication: 0 * x = 0_0 for every x (including inf_inf);
/// r > 0 scales the value and keeps the index.
inline PElem scale(const Rational& r, const PElem& x) {
  if (r.is_zero()) return PElem::zero();
  if (!x.is_member()) return x;
  return PElem::member(r * x.value(), x.index());
}

/// The preorder: comparable only within one index class, by value. 0_0 and
/// inf_inf are each comparable only with themselves.
inline bool preceq(const PElem& x, const PElem& y) {
  if (x.is_zero()) return y.is_zero();
  if (x.is_inf()) return y.is_inf();
  if (!y.is_member()) return false;
  return x.index() == y.index() && x.value() <= y.value();
}

/// The neighborhood relation "x <= y + v": true iff x is 0_0, or y is
/// inf_inf, or both are members of one index j with x <= y + j*v. The
/// radius scales with the index, which is what the refutation exploits.
inline bool le_v(const PElem& x, const PElem& y, const Rational& v) {
  if (!v.positive()) throw std::domain_error("le_v: radius must be > 0");
  if (x.is_zero()) return true;
  if (y.is_inf()) return true;
  if (!x.is_member() || !y.is_member()) return false;
  if (x.index() != y.index()) return false;
  Rational j(static_cast<long long>(x.index()));
  return x.value() <= y.value() + j * v;
}

/// Membership in both the upper and the lower neighborhood of b.
inline bool in_symmetric(const PElem& a, const PElem& b, const Rational& v) {
  return le_v(a, b, v) && le_v(b, a, v);
}

/// Closed form of the symmetric neighborhood v(b)v: the singleton {0_0} or
/// {inf_inf}, or for a member center b_j the index-j values in
/// [b - jv, +inf) intersected with (0, b + jv]. When b - jv <= 0 the lower
/// bound disappears and the set is just (0, b + jv] at index j.
class SymNbhd {
 public:
  enum class Kind : std::uint8_t { SingletonZero, SingletonInf, ValueInterval };

  Kind kind() const { return kind_; }
  const PElem& center() const { return center_; }
  const Rational& radius() const { return radius_; }

  std::uint32_t index() const { return index_; }
  bool has_lower() const { return lower_.has_value(); }
  const Rational& lower() const { return *lower_; }
  const Rational& upper() const { return upper_; }

  bool contains(const PElem& a) const {
    switch (kind_) {
      case Kind::SingletonZero:
        return a.is_zero();
      case Kind::SingletonInf:
        return a.is_inf();
      default:
        break;
    }
    if (!a.is_member() || a.index() != index_) return false;
    if (a.value() > upper_) return false;
    return !lower_ || a.value() >= *lower_;
  }

  std::string str() const {
    switch (kind_) {
      case Kind::SingletonZero:
        return "{0_0}";
      case Kind::SingletonInf:
        return "{inf_inf}";
      default:
        break;
    }
    std::string lo = lower_ ? lower_->str() + " <= a" : "0 < a";
    return "{a@" + std::to_string(index_) + " : " + lo +
           " <= " + upper_.str() + "}";
  }

 private:
  friend SymNbhd symmetric_nbhd(const PElem&, const Rational&);
  SymNbhd(Kind kind, PElem center, Rational radius)
      : kind_(kind), center_(std::move(center)), radius_(std::move(radius)) {}

  Kind kind_;
  PElem center_;
  Rational radius_;
  std::uint32_t index_ = 0;
  std::optional<Rational> lower_;
  Rational upper_;
};

inline SymNbhd symmetric_nbhd(const PElem& b, const Rational& v) {
  if (!v.positive()) throw std::domain_error("symmetric_nbhd: radius must be > 0");
  if (b.is_zero()) return SymNbhd(SymNbhd::Kind::SingletonZero, b, v);
  if (b.is_inf()) return SymNbhd(SymNbhd::Kind::SingletonInf, b, v);
  SymNbhd n(SymNbhd::Kind::ValueInterval, b, v);
  n.index_ = b.index();
  Rational jv = Rational(static_cast<long long>(b.index())) * v;
  n.upper_ = b.value() + jv;
  if (b.value() > jv) n.lower_ = b.value() - jv;
  return n;
}

/// The maximum of v(b)v under the preorder: b + jv at b's index for member
/// centers, b itself for the singletons. Its existence is what makes the
/// cone barreled.
inline PElem max_of_symmetric(const PElem& b, const Rational& v) {
  if (!v.positive())
    throw std::domain_error("max_of_symmetric: radius must be > 0");
  if (!b.is_member()) return b;
  Rational jv = Rational(static_cast<long long>(b.index())) * v;
  return PElem::member(b.value() + jv, b.index());
}

/// Membership in the subcone Q_j: index-j members plus 0_0 and inf_inf.
inline bool in_subcone(const PElem& x, std::uint32_t j) {
  if (j == 0) throw std::domain_error("in_subcone: index must be >= 1");
  return !x.is_member() || x.index() == j;
}

/// The reference relation "x <= y + v" on the extended nonnegative reals.
inline bool extreal_le_v(const ExtReal& x, const ExtReal& y,
                         const Rational& v) {
  if (!v.positive()) throw std::domain_error("extreal_le_v: radius must be > 0");
  return x <= y + ExtReal(v);
}

/// The canonical isomorphism Q_j -> extended nonnegative reals,
/// a_j -> a/j, 0_0 -> 0, inf_inf -> inf. Defined only on Q_j.
inline ExtReal subcone_iso(std::uint32_t j, const PElem& x) {
  if (!in_subcone(x, j))
    throw std::domain_error("subcone_iso: element outside Q_" +
                            std::to_string(j));
  if (x.is_zero()) return ExtReal(Rational());
  if (x.is_inf()) return ExtReal::infinity();
  return ExtReal(x.value() / Rational(static_cast<long long>(j)));
}

/// Inverse of the isomorphism: s -> (j*s)_j, 0 -> 0_0, inf -> inf_inf.
inline PElem subcone_iso_inverse(std::uint32_t j, const ExtReal& s) {
  if (j == 0) throw std::domain_error("subcone_iso_inverse: index must be >= 1");
  if (s.is_infinite()) return PElem::inf();
  if (s.finite().is_zero()) return PElem::zero();
  return PElem::member(Rational(static_cast<long long>(j)) * s.finite(), j);
}

/// Witness that the inverse isomorphism is not uniformly continuous: the
/// pair (eps, 0) satisfies s <= t + eps in the reference cone, yet its
/// image ((j*eps)_j, 0_0) fails the relation at radius v — the symmetric
/// neighborhood of 0_0 is the singleton {0_0}, while the neighborhood of 0
/// in the reference cone is a whole interval. Both facts are re-checked
/// before the pair is returned.
inline std::pair<ExtReal, ExtReal> iso_inverse_discontinuity_witness(
    std::uint32_t j, const Rational& v, const Rational& eps) {
  if (!v.positive() || !eps.positive())
    throw std::domain_error("iso_inverse_discontinuity_witness: v, eps > 0");
  ExtReal s{eps};
  ExtReal t{Rational()};
  if (!extreal_le_v(s, t, eps))
    throw std::logic_error("discontinuity witness: reference relation failed");
  PElem image = subcone_iso_inverse(j, s);
  if (le_v(image, PElem::zero(), v))
    throw std::logic_error("discontinuity witness: image relation held");
  return {s, t};
}

inline std::optional<PElem> PElem::parse(std::string_view text) {
  if (text == "0_0") return PElem::zero();
  if (text == "inf_inf") return PElem::inf();
  auto at = text.rfind('@');
  if (at == std::string_view::npos) return std::nullopt;
  auto value = Rational::parse(text.substr(0, at));
  if (!value || !value->positive()) return std::nullopt;
  std::string_view idx = text.substr(at + 1);
  if (!detail::all_digits(idx) || idx.size() > 9) return std::nullopt;
  std::uint32_t index = 0;
  for (char c : idx) index = index * 10 + static_cast<std::uint32_t>(c - '0');
  if (index == 0) return std::nullopt;
  return PElem::member(*value, index);
}

// --- samplers -------------------------------------------------------------

/// Random element of P. The two structural elements are injected with a
/// fixed rate; member indices stay small so that same-index pairs occur.
inline PElem sample_pelem(Rng& rng, const SampleConfig& cfg) {
  switch (rng.below(10)) {
    case 0:
      return PElem::zero();
    case 1:
      return PElem::inf();
    default:
      return PElem::member(sample_positive_rational(rng, cfg),
                           rng.range_u32(1, cfg.max_index));
  }
}

/// Random element of Q_j.
inline PElem sample_subcone_elem(Rng& rng, std::uint32_t j,
                                 const SampleConfig& cfg) {
  switch (rng.below(10)) {
    case 0:
      return PElem::zero();
    case 1:
      return PElem::inf();
    default:
      return PElem::member(sample_positive_rational(rng, cfg), j);
  }
}

/// Pair (x, y) with x <= y + v, covering every clause of the relation:
/// the 0_0 and inf_inf escapes and same-index pairs including the exact
/// boundary x = y + jv. All failure modes of the construction sit on these
/// boundaries, so they are always part of the pool.
inline std::pair<PElem, PElem> sample_le_v_pair(
    Rng& rng, const Rational& v, const SampleConfig& cfg,
    std::optional<std::uint32_t> force_index = std::nullopt) {
  switch (rng.below(8)) {
    case 0:
      return {PElem::zero(), sample_pelem(rng, cfg)};
    case 1:
      return {sample_pelem(rng, cfg), PElem::inf()};
    default: {
      std::uint32_t j = force_index && rng.chance(1, 2)
                            ? *force_index
                            : rng.range_u32(1, cfg.max_index);
      Rational y = sample_positive_rational(rng, cfg);
      Rational jv = Rational(static_cast<long long>(j)) * v;
      Rational x;
      switch (rng.below(4)) {
        case 0:
          x = y + jv;  // exact boundary
          break;
        case 1:
          x = y + sample_unit_open(rng) * jv;
          break;
        case 2:
          x = y;
          break;
        default:
          x = sample_unit_open(rng) * y;
          break;
      }
      return {PElem::member(x, j), PElem::member(y, j)};
    }
  }
}

/// Element z with y <= z + u; used to build composition chains.
inline PElem sample_relation_target(Rng& rng, const PElem& y,
                                    const Rational& u,
                                    const SampleConfig& cfg) {
  if (y.is_zero()) return sample_pelem(rng, cfg);
  if (y.is_inf()) return PElem::inf();
  if (rng.chance(1, 8)) return PElem::inf();
  Rational ju = Rational(static_cast<long long>(y.index())) * u;
  Rational z;
  switch (rng.below(3)) {
    case 0:
      z = y.value() > ju ? y.value() - ju
                         : sample_unit_open(rng) * y.value();  // boundary/low
      break;
    case 1:
      z = y.value();
      break;
    default:
      z = y.value() + sample_positive_rational(rng, cfg);
      break;
  }
  return PElem::member(z, y.index());
}

/// Member of the symmetric neighborhood, hitting both interval endpoints.
inline PElem sample_symmetric_member(Rng& rng, const SymNbhd& nbhd) {
  switch (nbhd.kind()) {
    case SymNbhd::Kind::SingletonZero:
      return PElem::zero();
    case SymNbhd::Kind::SingletonInf:
      return PElem::inf();
    default:
      break;
  }
  Rational value;
  if (nbhd.has_lower()) {
    value = sample_in_interval(rng, nbhd.lower(), nbhd.upper());
    if (value.is_zero()) value = nbhd.upper();
  } else {
    // interval (0, upper]: sample upper * t with t in (0, 1], t = 1 included
    value = rng.chance(1, 4) ? nbhd.upper()
                             : sample_unit_open(rng) * nbhd.upper();
  }
  return PElem::member(value, nbhd.index());
}

}  // namespace conecheck

#endif  // CONECHECK_INDEXED_CONE_HPP_
