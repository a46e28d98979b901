#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "chq/numeric.hpp"
#include "chq/space.hpp"

namespace chq {

/// Quantile side. Left uses the non-strict tail comparison w(X >= x) <= t,
/// right the strict one w(X >= x) < t.
enum class Side { Left, Right };

enum class CapacityKind {
  Probability,
  SupProbability,
  Distorted,
  Explicit,
  Binary,
  Combined,
  Scaled,
};

/// Strictly increasing continuous distortion on [0,1] with g(0)=0, g(1)=1,
/// given as a breakpoint table with linear interpolation in between and an
/// exact piecewise-linear inverse.
class Distortion {
 public:
  Distortion(std::vector<double> xs, std::vector<double> ys);

  double operator()(double t) const;
  double inverse(double y) const;
  const std::vector<double>& xs() const { return xs_; }
  const std::vector<double>& ys() const { return ys_; }

  /// g(t) = t^alpha sampled on a uniform breakpoint grid; the grid always
  /// contains multiples of 1/points so that probability levels hit
  /// breakpoints exactly.
  static Distortion power(double exponent, std::size_t points = 100);

 private:
  std::vector<double> xs_;
  std::vector<double> ys_;
};

/// Capacity on a finite space: monotone set function with w(empty)=0 and
/// w(full)=1. All variants are immutable after validation and safe for
/// concurrent read-only use.
class Capacity {
 public:
  virtual ~Capacity() = default;

  const SpacePtr& space() const { return space_; }
  std::size_t atom_count() const { return space_->size(); }

  /// Value at an event of the same space.
  double value(const Event& ev) const;
  /// Bitmask fast path, for spaces of at most 64 atoms.
  double value_mask(std::uint64_t mask) const { return eval_mask(mask); }

  virtual CapacityKind kind() const = 0;
  virtual bool is_binary() const { return false; }

 protected:
  explicit Capacity(SpacePtr space);
  virtual double eval(const Event& ev) const = 0;
  virtual double eval_mask(std::uint64_t mask) const;

 private:
  SpacePtr space_;
};

using CapacityPtr = std::shared_ptr<const Capacity>;

/// Additive capacity: p_j >= 0 per atom with sum 1 (within 1e-12).
class ProbabilityVector : public Capacity {
 public:
  ProbabilityVector(SpacePtr space, std::vector<double> weights);

  const std::vector<double>& weights() const { return weights_; }
  CapacityKind kind() const override { return CapacityKind::Probability; }

 protected:
  double eval(const Event& ev) const override;
  double eval_mask(std::uint64_t mask) const override;

 private:
  std::vector<double> weights_;
};

/// Pointwise supremum of a finite, nonempty ambiguity set of probabilities.
class SupProbability : public Capacity {
 public:
  SupProbability(SpacePtr space, std::vector<std::vector<double>> member_weights);

  const std::vector<ProbabilityVector>& members() const { return members_; }
  CapacityKind kind() const override { return CapacityKind::SupProbability; }

 protected:
  double eval(const Event& ev) const override;
  double eval_mask(std::uint64_t mask) const override;

 private:
  std::vector<ProbabilityVector> members_;
};

/// g composed with a base probability.
class DistortedProbability : public Capacity {
 public:
  DistortedProbability(SpacePtr space, std::vector<double> base_weights, Distortion distortion);

  const ProbabilityVector& base() const { return base_; }
  const Distortion& distortion() const { return distortion_; }
  CapacityKind kind() const override { return CapacityKind::Distorted; }

 protected:
  double eval(const Event& ev) const override;
  double eval_mask(std::uint64_t mask) const override;

 private:
  ProbabilityVector base_;
  Distortion distortion_;
};

/// Full table of 2^m capacity values indexed by atom bitmask; m <= 20.
/// Monotonicity is verified exhaustively over all covering pairs.
class ExplicitCapacity : public Capacity {
 public:
  static constexpr std::size_t kMaxAtomsExplicit = 20;

  ExplicitCapacity(SpacePtr space, std::vector<double> table);

  const std::vector<double>& table() const { return table_; }
  CapacityKind kind() const override { return CapacityKind::Explicit; }

 protected:
  double eval(const Event& ev) const override;
  double eval_mask(std::uint64_t mask) const override;

 private:
  std::vector<double> table_;
};

/// Capacity taking values in {0,1}; fully determined by its null-set family.
///
/// Two storage forms: an explicit antichain of maximal null events (the
/// family is their downward closure), or a lazy threshold over another
/// capacity (v = 1 iff w(A) > cutoff, or >= cutoff for the non-strict form).
class BinaryCapacity : public Capacity {
 public:
  struct Threshold {
    CapacityPtr base;
    double cutoff;
    bool strict;  // strict: v=1 iff w > cutoff; else v=1 iff w >= cutoff
  };

  static std::shared_ptr<const BinaryCapacity> from_maximal_null_events(SpacePtr space,
                                                                        std::vector<Event> maximal);
  static std::shared_ptr<const BinaryCapacity> from_threshold(CapacityPtr base, double cutoff,
                                                              bool strict);

  bool is_null(const Event& ev) const { return value(ev) == 0.0; }
  bool is_null_mask(std::uint64_t mask) const { return value_mask(mask) == 0.0; }

  bool has_antichain() const { return !maximal_null_.has_value() ? false : true; }
  /// Maximal null events; present only for the antichain form.
  const std::vector<Event>& maximal_null_events() const;
  bool has_threshold() const { return threshold_.has_value(); }
  const Threshold& threshold() const;

  CapacityKind kind() const override { return CapacityKind::Binary; }
  bool is_binary() const override { return true; }

 protected:
  double eval(const Event& ev) const override;
  double eval_mask(std::uint64_t mask) const override;

 private:
  BinaryCapacity(SpacePtr space, std::vector<Event> maximal);
  BinaryCapacity(SpacePtr space, Threshold thr);

  std::optional<std::vector<Event>> maximal_null_;
  std::optional<Threshold> threshold_;
};

enum class CombineMode { Sup, Inf };

/// Lazy pointwise max/min of capacities on a common space.
class CombinedCapacity : public Capacity {
 public:
  CombinedCapacity(CombineMode mode, std::vector<CapacityPtr> members);

  CombineMode mode() const { return mode_; }
  const std::vector<CapacityPtr>& members() const { return members_; }
  CapacityKind kind() const override { return CapacityKind::Combined; }
  bool is_binary() const override;

 protected:
  double eval(const Event& ev) const override;
  double eval_mask(std::uint64_t mask) const override;

 private:
  CombineMode mode_;
  std::vector<CapacityPtr> members_;
};

/// A -> min(w(A)/alpha, 1).
class ScaledCapacity : public Capacity {
 public:
  ScaledCapacity(CapacityPtr base, double alpha);

  const CapacityPtr& base() const { return base_; }
  double alpha() const { return alpha_; }
  CapacityKind kind() const override { return CapacityKind::Scaled; }

 protected:
  double eval(const Event& ev) const override;
  double eval_mask(std::uint64_t mask) const override;

 private:
  CapacityPtr base_;
  double alpha_;
};

CapacityPtr combine_capacities(CombineMode mode, std::vector<CapacityPtr> members);

CapacityPtr scale_alpha(CapacityPtr w, double alpha);

/// Binary capacity representing the alpha-level quantile of w:
/// left: v(A) = 1{w(A) > 1-alpha}, alpha in (0,1];
/// right: v(A) = 1{w(A) >= 1-alpha}, alpha in [0,1).
std::shared_ptr<const BinaryCapacity> binary_from_level(CapacityPtr w, double alpha, Side side);

struct SubmodularityReport {
  bool submodular = false;
  /// A violating pair (A,B) with w(A u B) + w(A n B) > w(A) + w(B), when any.
  std::optional<std::pair<Event, Event>> witness;
};

/// Exhaustive submodularity check; requires at most 16 atoms.
SubmodularityReport is_submodular(const Capacity& w);

/// True iff the null-set family of v is closed under union; at most 16 atoms
/// for the threshold form (the antichain form checks maximal events only).
bool null_set_closed_under_union(const BinaryCapacity& v);

/// Structural limit for exhaustive checks (submodularity, union closure).
inline constexpr std::size_t kMaxAtomsStructural = 16;

}  // namespace chq
