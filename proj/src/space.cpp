#include "chq/space.hpp"

#include <atomic>
#include <cmath>
#include <sstream>

#include "chq/numeric.hpp"

namespace chq {

namespace {

std::uint64_t next_space_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1);
}

}  // namespace

FiniteSpace::FiniteSpace(std::size_t atom_count) : FiniteSpace(atom_count, {}, {}) {}

FiniteSpace::FiniteSpace(std::size_t atom_count, std::vector<std::string> labels,
                         std::vector<double> ref_weights)
    : atom_count_(atom_count),
      labels_(std::move(labels)),
      ref_weights_(std::move(ref_weights)),
      id_(next_space_id()) {
  if (atom_count_ < 1) throw Error("FiniteSpace: atom count must be at least 1");
  if (atom_count_ > kMaxAtoms) throw SpaceTooLarge("FiniteSpace: atom count exceeds 4096");
  if (!labels_.empty() && labels_.size() != atom_count_)
    throw DimensionMismatch("FiniteSpace: labels length differs from atom count");
  if (!ref_weights_.empty()) {
    if (ref_weights_.size() != atom_count_)
      throw DimensionMismatch("FiniteSpace: ref_weights length differs from atom count");
    double sum = 0.0;
    for (double w : ref_weights_) {
      if (!(w >= 0.0) || !std::isfinite(w))
        throw Error("FiniteSpace: ref_weights must be nonnegative finite");
      sum += w;
    }
    if (std::abs(sum - 1.0) > kBoundaryTol)
      throw Error("FiniteSpace: ref_weights must sum to 1 within 1e-12");
  }
}

const std::vector<double>& FiniteSpace::ref_weights() const {
  if (ref_weights_.empty()) throw MissingRefWeights("FiniteSpace: no reference weights present");
  return ref_weights_;
}

SpacePtr make_space(std::size_t atom_count) {
  return std::make_shared<const FiniteSpace>(atom_count);
}

SpacePtr make_space(std::size_t atom_count, std::vector<double> ref_weights) {
  return std::make_shared<const FiniteSpace>(atom_count, std::vector<std::string>{},
                                             std::move(ref_weights));
}

SpacePtr make_space(std::size_t atom_count, std::vector<std::string> labels,
                    std::vector<double> ref_weights) {
  return std::make_shared<const FiniteSpace>(atom_count, std::move(labels),
                                             std::move(ref_weights));
}

Event::Event(std::uint64_t space_id, std::size_t atom_count)
    : space_id_(space_id), atom_count_(atom_count), words_((atom_count + 63) / 64, 0) {}

Event Event::empty(const FiniteSpace& space) { return Event(space.id(), space.size()); }

Event Event::full(const FiniteSpace& space) {
  Event ev(space.id(), space.size());
  for (std::size_t w = 0; w < ev.words_.size(); ++w) ev.words_[w] = ~std::uint64_t{0};
  const std::size_t tail_bits = space.size() % 64;
  if (tail_bits != 0) ev.words_.back() = (std::uint64_t{1} << tail_bits) - 1;
  return ev;
}

Event Event::from_atoms(const FiniteSpace& space, const std::vector<std::size_t>& atoms) {
  Event ev(space.id(), space.size());
  for (std::size_t a : atoms) ev.set(a);
  return ev;
}

Event Event::from_mask(const FiniteSpace& space, std::uint64_t mask) {
  if (space.size() > 64) throw SpaceTooLarge("Event::from_mask: space larger than 64 atoms");
  Event ev(space.id(), space.size());
  if (space.size() < 64 && (mask >> space.size()) != 0)
    throw Error("Event::from_mask: mask has bits beyond the atom count");
  ev.words_[0] = mask;
  return ev;
}

bool Event::contains(std::size_t atom) const {
  return (words_[atom / 64] >> (atom % 64)) & 1u;
}

void Event::set(std::size_t atom, bool member) {
  if (atom >= atom_count_) throw Error("Event: atom index out of range");
  const std::uint64_t bit = std::uint64_t{1} << (atom % 64);
  if (member)
    words_[atom / 64] |= bit;
  else
    words_[atom / 64] &= ~bit;
}

std::size_t Event::count() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(__builtin_popcountll(w));
  return n;
}

bool Event::is_empty() const {
  for (std::uint64_t w : words_)
    if (w != 0) return false;
  return true;
}

bool Event::is_full() const { return count() == atom_count_; }

void Event::check_same_space(const Event& other) const {
  if (space_id_ != other.space_id_)
    throw SpaceMismatch("Event: operands belong to different spaces");
}

bool Event::is_subset_of(const Event& other) const {
  check_same_space(other);
  for (std::size_t w = 0; w < words_.size(); ++w)
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  return true;
}

Event Event::set_union(const Event& other) const {
  check_same_space(other);
  Event out = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] |= other.words_[w];
  return out;
}

Event Event::set_intersection(const Event& other) const {
  check_same_space(other);
  Event out = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= other.words_[w];
  return out;
}

Event Event::complement() const {
  Event out = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = ~out.words_[w];
  const std::size_t tail_bits = atom_count_ % 64;
  if (tail_bits != 0) out.words_.back() &= (std::uint64_t{1} << tail_bits) - 1;
  return out;
}

std::uint64_t Event::mask() const {
  if (atom_count_ > 64) throw SpaceTooLarge("Event::mask: space larger than 64 atoms");
  return words_[0];
}

std::vector<std::size_t> Event::atoms() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each_atom([&](std::size_t a) { out.push_back(a); });
  return out;
}

std::string Event::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for_each_atom([&](std::size_t a) {
    if (!first) os << ',';
    os << a;
    first = false;
  });
  os << '}';
  return os.str();
}

bool Event::operator==(const Event& other) const {
  return space_id_ == other.space_id_ && words_ == other.words_;
}

SimpleRandomVariable::SimpleRandomVariable(const FiniteSpace& space, std::vector<double> values)
    : space_id_(space.id()), values_(std::move(values)) {
  if (values_.size() != space.size())
    throw DimensionMismatch("SimpleRandomVariable: values length differs from atom count");
  for (double v : values_)
    if (!std::isfinite(v)) throw Error("SimpleRandomVariable: values must be finite");
}

SimpleRandomVariable::SimpleRandomVariable(const SpacePtr& space, std::vector<double> values)
    : SimpleRandomVariable(*space, std::move(values)) {}

double SimpleRandomVariable::min_value() const {
  double m = values_[0];
  for (double v : values_) m = std::min(m, v);
  return m;
}

double SimpleRandomVariable::max_value() const {
  double m = values_[0];
  for (double v : values_) m = std::max(m, v);
  return m;
}

SimpleRandomVariable SimpleRandomVariable::map(const std::function<double(double)>& f) const {
  SimpleRandomVariable out = *this;
  for (double& v : out.values_) v = f(v);
  return out;
}

SimpleRandomVariable SimpleRandomVariable::shifted(double c) const {
  return map([c](double v) { return v + c; });
}

SimpleRandomVariable SimpleRandomVariable::scaled(double c) const {
  return map([c](double v) { return v * c; });
}

SimpleRandomVariable SimpleRandomVariable::positive_part_above(double floor) const {
  return map([floor](double v) { return std::max(v - floor, 0.0); });
}

}  // namespace chq
