#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "chq/errors.hpp"

namespace chq {

/// Finite measurable space with atoms 0..size()-1.
///
/// Optionally carries display labels and reference weights (a probability on
/// the atoms; the reference measure used by the fractional sharing solver).
/// Instances are immutable after construction. Each construction gets a fresh
/// id; copies keep the id and denote the same space.
class FiniteSpace {
 public:
  static constexpr std::size_t kMaxAtoms = 4096;

  explicit FiniteSpace(std::size_t atom_count);
  FiniteSpace(std::size_t atom_count, std::vector<std::string> labels,
              std::vector<double> ref_weights);

  std::size_t size() const { return atom_count_; }
  std::uint64_t id() const { return id_; }

  bool has_ref_weights() const { return !ref_weights_.empty(); }
  /// Reference weights; throws MissingRefWeights when none were supplied.
  const std::vector<double>& ref_weights() const;
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  std::size_t atom_count_;
  std::vector<std::string> labels_;
  std::vector<double> ref_weights_;
  std::uint64_t id_;
};

using SpacePtr = std::shared_ptr<const FiniteSpace>;

SpacePtr make_space(std::size_t atom_count);
SpacePtr make_space(std::size_t atom_count, std::vector<double> ref_weights);
SpacePtr make_space(std::size_t atom_count, std::vector<std::string> labels,
                    std::vector<double> ref_weights);

/// Subset of a FiniteSpace's atoms, stored as a bit vector (single 64-bit
/// word for spaces of up to 64 atoms).
class Event {
 public:
  static Event empty(const FiniteSpace& space);
  static Event full(const FiniteSpace& space);
  static Event from_atoms(const FiniteSpace& space, const std::vector<std::size_t>& atoms);
  /// Bitmask constructor, only for spaces of at most 64 atoms.
  static Event from_mask(const FiniteSpace& space, std::uint64_t mask);

  std::uint64_t space_id() const { return space_id_; }
  std::size_t atom_count() const { return atom_count_; }

  bool contains(std::size_t atom) const;
  void set(std::size_t atom, bool member = true);
  std::size_t count() const;
  bool is_empty() const;
  bool is_full() const;
  bool is_subset_of(const Event& other) const;

  Event set_union(const Event& other) const;
  Event set_intersection(const Event& other) const;
  Event complement() const;

  /// Bitmask view, only for spaces of at most 64 atoms.
  std::uint64_t mask() const;

  std::vector<std::size_t> atoms() const;
  std::string to_string() const;

  bool operator==(const Event& other) const;
  bool operator!=(const Event& other) const { return !(*this == other); }

  template <class F>
  void for_each_atom(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = __builtin_ctzll(bits);
        f(w * 64 + static_cast<std::size_t>(b));
        bits &= bits - 1;
      }
    }
  }

 private:
  Event(std::uint64_t space_id, std::size_t atom_count);
  void check_same_space(const Event& other) const;

  std::uint64_t space_id_ = 0;
  std::size_t atom_count_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Bounded random variable on a finite space: one finite value per atom.
class SimpleRandomVariable {
 public:
  SimpleRandomVariable(const FiniteSpace& space, std::vector<double> values);
  SimpleRandomVariable(const SpacePtr& space, std::vector<double> values);

  std::uint64_t space_id() const { return space_id_; }
  std::size_t size() const { return values_.size(); }
  const std::vector<double>& values() const { return values_; }
  double operator[](std::size_t atom) const { return values_[atom]; }

  double min_value() const;
  double max_value() const;

  /// Atom-wise map; the result lives on the same space.
  SimpleRandomVariable map(const std::function<double(double)>& f) const;
  SimpleRandomVariable shifted(double c) const;
  SimpleRandomVariable scaled(double c) const;
  /// Atom-wise (x - floor)_+.
  SimpleRandomVariable positive_part_above(double floor) const;

 private:
  std::uint64_t space_id_;
  std::vector<double> values_;
};

}  // namespace chq
