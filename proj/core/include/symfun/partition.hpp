#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symfun/int_poly2.hpp"
#include "symfun/ratfun.hpp"

namespace symfun {

/// Weakly decreasing sequence of positive integers.
///
/// operator< is the canonical graded reverse-lexicographic order: smaller
/// weight first, then lexicographically larger first. Within one weight it
/// lists dominance-larger partitions before smaller ones.
class Partition {
 public:
  Partition() = default;
  /// Throws InvalidPartition unless parts is weakly decreasing; zero parts
  /// at the end are dropped.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int weight() const;
  /// 1-based part, zero past the length.
  int part(std::size_t i) const { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }
  /// Number of parts equal to k.
  int multiplicity(int k) const;

  /// "2,1,1"; the empty partition is "".
  std::string to_string() const;
  /// Parses "2,1,1" or "" (whitespace tolerated); throws InvalidPartition.
  static Partition parse(std::string_view text);

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator<(const Partition& a, const Partition& b);
  friend bool operator>(const Partition& a, const Partition& b) { return b < a; }
  friend bool operator<=(const Partition& a, const Partition& b) { return !(b < a); }
  friend bool operator>=(const Partition& a, const Partition& b) { return !(a < b); }

  std::size_t hash() const;

 private:
  std::vector<int> parts_;
};

struct PartitionConstraints {
  std::optional<int> max_length;
  std::optional<int> exact_length;
  std::optional<int> max_part;
};

/// All partitions of weight in canonical order.
std::vector<Partition> enumerate_partitions(int weight, const PartitionConstraints& c = {});
/// All partitions of weight 0..max_weight in canonical order.
std::vector<Partition> partitions_up_to(int max_weight, const PartitionConstraints& c = {});

Partition conjugate(const Partition& la);

enum class Dominance { Less, Greater, Equal, Incomparable, DifferentWeight };
Dominance natural_compare(const Partition& la, const Partition& mu);
/// la <= mu in the natural order (equal weight required).
bool dominated_by(const Partition& la, const Partition& mu);

struct PartitionStats {
  Int c;
  Int z;
  long n_stat = 0;
};
PartitionStats stats(const Partition& la);

/// b_la(t) = prod_i (t;t)_{m_i}.
IntPoly2 b_poly(const Partition& la);
/// v_la(t) for N variables, m_0 = N - length; polynomial in t.
IntPoly2 v_poly(const Partition& la, int n);

struct TFactors {
  std::optional<RatFun> v;
  IntPoly2 b;
  RatFun z_t;
};
TFactors t_factors(const Partition& la, std::optional<int> n = std::nullopt);

Partition append_one(const Partition& mu);

/// la / mu is a horizontal strip: la_1 >= mu_1 >= la_2 >= mu_2 >= ...
bool is_horizontal_strip(const Partition& la, const Partition& mu);

/// Index i (1-based) such that la is mu with term i raised by one, if any.
std::optional<std::size_t> added_box_index(const Partition& la, const Partition& mu);

/// All partitions obtained by adding one box, in canonical order.
std::vector<Partition> add_box(const Partition& mu);
/// All partitions obtained by removing one box, in canonical order.
std::vector<Partition> remove_box(const Partition& la);

}  // namespace symfun

template <>
struct std::hash<symfun::Partition> {
  std::size_t operator()(const symfun::Partition& p) const { return p.hash(); }
};
