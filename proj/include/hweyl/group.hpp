#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace hweyl {

using cplx = std::complex<double>;

/// Largest |G| accepted by the group descriptor. Addition and pairing tables
/// are dense |G| x |G| arrays.
inline constexpr std::size_t kMaxGroupOrder = 1024;

/// Haar weights of the finite phase space G x G^.
struct HaarWeights {
  double group = 1.0;  ///< counting measure on G
  double dual = 1.0;   ///< (1/|G|) counting on G^
  double phase = 1.0;  ///< product weight per phase point, = group * dual
};

/// A finite abelian group Z_{n1} x ... x Z_{nk}.
///
/// Elements and characters are both addressed by a linear index in
/// lexicographic order of their coordinate tuples (last coordinate fastest).
/// The character with coordinates a pairs with x as exp(2 pi i sum_j a_j x_j / n_j),
/// so G^ shares the index set of G. The multiplicative notation xx', chi chi'
/// is realized additively on indices.
///
/// The descriptor is an immutable, cheaply copyable handle.
class FiniteAbelianGroup {
 public:
  /// Throws DomainError on an empty list, a factor < 1, or |G| > kMaxGroupOrder.
  explicit FiniteAbelianGroup(std::vector<int> orders);

  /// Cyclic group Z_n.
  static FiniteAbelianGroup cyclic(int n) { return FiniteAbelianGroup({n}); }

  std::span<const int> orders() const noexcept;
  std::size_t rank() const noexcept;
  /// |G|.
  std::size_t order() const noexcept;
  /// |G|^2, the number of phase points.
  std::size_t phase_count() const noexcept { return order() * order(); }
  HaarWeights haar() const noexcept;

  /// Linear index of a coordinate tuple; coordinates are reduced modulo the orders.
  std::size_t index(std::span<const int> coords) const;
  std::vector<int> coords(std::size_t index) const;

  std::size_t add(std::size_t a, std::size_t b) const noexcept { return add_[a * order() + b]; }
  std::size_t neg(std::size_t a) const noexcept { return neg_[a]; }
  std::size_t sub(std::size_t a, std::size_t b) const noexcept { return add(a, neg(b)); }

  /// chi_a(x) for character index a and element index x.
  cplx pairing(std::size_t character, std::size_t element) const noexcept {
    return pairing_[character * order() + element];
  }
  /// Row of the character table for a fixed character: pairing(a, x) over x.
  std::span<const cplx> character_row(std::size_t character) const noexcept {
    return {pairing_ + character * order(), order()};
  }

  /// Phase point index (x, chi) -> x * |G| + chi.
  std::size_t phase_index(std::size_t element, std::size_t character) const noexcept {
    return element * order() + character;
  }
  std::size_t phase_element(std::size_t phase) const noexcept { return phase / order(); }
  std::size_t phase_character(std::size_t phase) const noexcept { return phase % order(); }
  /// Componentwise (x + x', chi + chi').
  std::size_t phase_add(std::size_t p, std::size_t q) const noexcept {
    return phase_index(add(phase_element(p), phase_element(q)),
                       add(phase_character(p), phase_character(q)));
  }
  std::size_t phase_sub(std::size_t p, std::size_t q) const noexcept {
    return phase_index(sub(phase_element(p), phase_element(q)),
                       sub(phase_character(p), phase_character(q)));
  }

  std::string describe() const;

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) noexcept;

 private:
  struct Tables;
  std::shared_ptr<const Tables> tables_;
  // Cached raw views into tables_.
  const std::uint32_t* add_ = nullptr;
  const std::uint32_t* neg_ = nullptr;
  const cplx* pairing_ = nullptr;
};

/// Throws GroupMismatch unless both descriptors are equal.
void require_same_group(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b,
                        const char* context);

/// An element of G bound to its descriptor.
class GroupElement {
 public:
  GroupElement(FiniteAbelianGroup group, std::span<const int> coords);
  static GroupElement from_index(FiniteAbelianGroup group, std::size_t index);
  static GroupElement identity(FiniteAbelianGroup group) { return from_index(std::move(group), 0); }

  const FiniteAbelianGroup& group() const noexcept { return group_; }
  std::size_t index() const noexcept { return index_; }
  std::vector<int> coords() const { return group_.coords(index_); }

  friend bool operator==(const GroupElement& a, const GroupElement& b) noexcept {
    return a.group_ == b.group_ && a.index_ == b.index_;
  }

 private:
  GroupElement(FiniteAbelianGroup group, std::size_t index);
  FiniteAbelianGroup group_;
  std::size_t index_;
};

/// A character chi_a of G, identified by its coordinate tuple a.
class Character {
 public:
  Character(FiniteAbelianGroup group, std::span<const int> coords);
  static Character from_index(FiniteAbelianGroup group, std::size_t index);
  static Character trivial(FiniteAbelianGroup group) { return from_index(std::move(group), 0); }

  const FiniteAbelianGroup& group() const noexcept { return group_; }
  std::size_t index() const noexcept { return index_; }
  std::vector<int> coords() const { return group_.coords(index_); }

  friend bool operator==(const Character& a, const Character& b) noexcept {
    return a.group_ == b.group_ && a.index_ == b.index_;
  }

 private:
  Character(FiniteAbelianGroup group, std::size_t index);
  FiniteAbelianGroup group_;
  std::size_t index_;
};

/// A point (x, chi) of the phase space G x G^.
struct PhasePoint {
  GroupElement element;
  Character character;

  /// Throws GroupMismatch if the components live on different groups.
  PhasePoint(GroupElement x, Character chi);
  static PhasePoint from_index(const FiniteAbelianGroup& group, std::size_t phase);

  const FiniteAbelianGroup& group() const noexcept { return element.group(); }
  std::size_t index() const noexcept {
    return group().phase_index(element.index(), character.index());
  }
};

/// Group law: componentwise sum modulo the orders.
GroupElement group_mul(const GroupElement& a, const GroupElement& b);
GroupElement group_inverse(const GroupElement& a);

/// exp(2 pi i sum_j a_j x_j / n_j).
cplx character_eval(const Character& chi, const GroupElement& x);

/// Phase points in lexicographic order of (element coords, character coords).
/// This is the storage order for every phase-space function and measure.
std::vector<PhasePoint> enumerate_phase_space(const FiniteAbelianGroup& group);

}  // namespace hweyl
