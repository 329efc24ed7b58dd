#include "hweyl/group.hpp"

#include <numbers>
#include <numeric>
#include <sstream>

#include "hweyl/errors.hpp"

namespace hweyl {

struct FiniteAbelianGroup::Tables {
  std::vector<int> orders;
  std::vector<std::size_t> strides;
  std::size_t order = 1;
  std::vector<std::uint32_t> add;
  std::vector<std::uint32_t> neg;
  std::vector<cplx> pairing;
};

namespace {

std::vector<int> decompose(const std::vector<int>& orders, const std::vector<std::size_t>& strides,
                           std::size_t index) {
  std::vector<int> c(orders.size());
  for (std::size_t j = 0; j < orders.size(); ++j) {
    c[j] = static_cast<int>((index / strides[j]) % static_cast<std::size_t>(orders[j]));
  }
  return c;
}

}  // namespace

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> orders) {
  if (orders.empty()) throw DomainError("group needs at least one cyclic factor");
  auto t = std::make_shared<Tables>();
  std::size_t n = 1;
  for (int o : orders) {
    if (o < 1) throw DomainError("cyclic factor order must be >= 1, got " + std::to_string(o));
    n *= static_cast<std::size_t>(o);
    if (n > kMaxGroupOrder) {
      throw DomainError("group order exceeds the supported maximum of " +
                        std::to_string(kMaxGroupOrder));
    }
  }
  t->orders = std::move(orders);
  t->order = n;
  const std::size_t k = t->orders.size();
  t->strides.assign(k, 1);
  for (std::size_t j = k - 1; j > 0; --j) {
    t->strides[j - 1] = t->strides[j] * static_cast<std::size_t>(t->orders[j]);
  }

  std::vector<std::vector<int>> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = decompose(t->orders, t->strides, i);

  auto linear = [&](const std::vector<int>& c) {
    std::size_t idx = 0;
    for (std::size_t j = 0; j < k; ++j) idx += static_cast<std::size_t>(c[j]) * t->strides[j];
    return idx;
  };

  t->neg.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> c = all[i];
    for (std::size_t j = 0; j < k; ++j) c[j] = (t->orders[j] - c[j]) % t->orders[j];
    t->neg[i] = static_cast<std::uint32_t>(linear(c));
  }

  t->add.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t idx = 0;
      for (std::size_t j = 0; j < k; ++j) {
        idx += static_cast<std::size_t>((all[a][j] + all[b][j]) % t->orders[j]) * t->strides[j];
      }
      t->add[a * n + b] = static_cast<std::uint32_t>(idx);
    }
  }

  // Pairings are roots of unity of order L = lcm(n_j); tabulate them once so
  // that identical exponents give bit-identical values.
  long long lcm = 1;
  for (int o : t->orders) lcm = std::lcm(lcm, static_cast<long long>(o));
  std::vector<cplx> roots(static_cast<std::size_t>(lcm));
  for (long long r = 0; r < lcm; ++r) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(lcm);
    roots[static_cast<std::size_t>(r)] = {std::cos(angle), std::sin(angle)};
  }
  t->pairing.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t x = 0; x < n; ++x) {
      long long e = 0;
      for (std::size_t j = 0; j < k; ++j) {
        e += static_cast<long long>(all[a][j]) * all[x][j] * (lcm / t->orders[j]);
      }
      t->pairing[a * n + x] = roots[static_cast<std::size_t>(e % lcm)];
    }
  }

  add_ = t->add.data();
  neg_ = t->neg.data();
  pairing_ = t->pairing.data();
  tables_ = std::move(t);
}

std::span<const int> FiniteAbelianGroup::orders() const noexcept { return tables_->orders; }
std::size_t FiniteAbelianGroup::rank() const noexcept { return tables_->orders.size(); }
std::size_t FiniteAbelianGroup::order() const noexcept { return tables_->order; }

HaarWeights FiniteAbelianGroup::haar() const noexcept {
  const double inv = 1.0 / static_cast<double>(order());
  return {1.0, inv, inv};
}

std::size_t FiniteAbelianGroup::index(std::span<const int> coords) const {
  if (coords.size() != rank()) {
    throw DimensionMismatch("expected " + std::to_string(rank()) + " coordinates, got " +
                            std::to_string(coords.size()));
  }
  std::size_t idx = 0;
  for (std::size_t j = 0; j < rank(); ++j) {
    const int n = tables_->orders[j];
    const int r = ((coords[j] % n) + n) % n;
    idx += static_cast<std::size_t>(r) * tables_->strides[j];
  }
  return idx;
}

std::vector<int> FiniteAbelianGroup::coords(std::size_t index) const {
  return decompose(tables_->orders, tables_->strides, index);
}

std::string FiniteAbelianGroup::describe() const {
  std::ostringstream os;
  for (std::size_t j = 0; j < rank(); ++j) os << (j ? "xZ" : "Z") << tables_->orders[j];
  return os.str();
}

bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) noexcept {
  return a.tables_ == b.tables_ || a.tables_->orders == b.tables_->orders;
}

void require_same_group(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b,
                        const char* context) {
  if (!(a == b)) {
    throw GroupMismatch(std::string(context) + ": group descriptors differ (" + a.describe() +
                        " vs " + b.describe() + ")");
  }
}

GroupElement::GroupElement(FiniteAbelianGroup group, std::span<const int> coords)
    : group_(std::move(group)), index_(group_.index(coords)) {}

GroupElement::GroupElement(FiniteAbelianGroup group, std::size_t index)
    : group_(std::move(group)), index_(index) {}

GroupElement GroupElement::from_index(FiniteAbelianGroup group, std::size_t index) {
  if (index >= group.order()) throw DomainError("element index out of range");
  return GroupElement(std::move(group), index);
}

Character::Character(FiniteAbelianGroup group, std::span<const int> coords)
    : group_(std::move(group)), index_(group_.index(coords)) {}

Character::Character(FiniteAbelianGroup group, std::size_t index)
    : group_(std::move(group)), index_(index) {}

Character Character::from_index(FiniteAbelianGroup group, std::size_t index) {
  if (index >= group.order()) throw DomainError("character index out of range");
  return Character(std::move(group), index);
}

PhasePoint::PhasePoint(GroupElement x, Character chi)
    : element(std::move(x)), character(std::move(chi)) {
  require_same_group(element.group(), character.group(), "phase point");
}

PhasePoint PhasePoint::from_index(const FiniteAbelianGroup& group, std::size_t phase) {
  if (phase >= group.phase_count()) throw DomainError("phase index out of range");
  return PhasePoint(GroupElement::from_index(group, group.phase_element(phase)),
                    Character::from_index(group, group.phase_character(phase)));
}

GroupElement group_mul(const GroupElement& a, const GroupElement& b) {
  require_same_group(a.group(), b.group(), "group_mul");
  return GroupElement::from_index(a.group(), a.group().add(a.index(), b.index()));
}

GroupElement group_inverse(const GroupElement& a) {
  return GroupElement::from_index(a.group(), a.group().neg(a.index()));
}

cplx character_eval(const Character& chi, const GroupElement& x) {
  require_same_group(chi.group(), x.group(), "character_eval");
  return chi.group().pairing(chi.index(), x.index());
}

std::vector<PhasePoint> enumerate_phase_space(const FiniteAbelianGroup& group) {
  std::vector<PhasePoint> out;
  out.reserve(group.phase_count());
  for (std::size_t p = 0; p < group.phase_count(); ++p) out.push_back(PhasePoint::from_index(group, p));
  return out;
}

}  // namespace hweyl
