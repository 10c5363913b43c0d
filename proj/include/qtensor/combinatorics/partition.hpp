#pragma once

#include <compare>
#include <string>
#include <vector>

namespace qtensor::combinatorics {

/// An integral weight (lambda_1, lambda_2, ...), read as an infinite sequence
/// padded with zeros. Indices are 1-based.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<int> components) : c_(std::move(components)) {}

  int operator[](int i) const {
    return i >= 1 && i <= static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i - 1)] : 0;
  }
  const std::vector<int>& components() const { return c_; }
  int size() const { return static_cast<int>(c_.size()); }

  /// alpha_i^vee(lambda) = lambda_i - lambda_{i+1}.
  int coroot(int i) const { return (*this)[i] - (*this)[i + 1]; }
  Weight plus_epsilon(int i) const;
  /// lambda - alpha_i.
  Weight minus_alpha(int i) const;

  bool operator==(const Weight& other) const = default;
  auto operator<=>(const Weight& other) const = default;
  std::string to_string() const;

 private:
  std::vector<int> c_;
};

/// Weakly decreasing sequence of nonnegative integers with trailing zeros
/// stripped. Identified with a dominant polynomial weight.
class Partition {
 public:
  Partition() = default;
  /// Throws InvalidArgument unless parts are nonnegative and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  /// lambda_i, 1-based, zero beyond the last part.
  int part(int i) const {
    return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }
  /// Number of nonzero parts.
  int length() const { return static_cast<int>(parts_.size()); }
  /// |lambda|.
  int size() const;
  bool empty() const { return parts_.empty(); }

  bool is_addable(int row) const { return row >= 1 && (row == 1 || part(row - 1) > part(row)); }
  /// lambda + epsilon_row; throws NotAddable.
  Partition add_node(int row) const;
  /// True for rectangles (n^j), including the empty partition.
  bool is_rectangle_of_height(int n) const;

  Weight as_weight(int n) const;
  Weight as_weight() const { return Weight(parts_); }

  bool operator==(const Partition& other) const = default;
  auto operator<=>(const Partition& other) const = default;
  /// `(2,1)`; the empty partition renders as `()`.
  std::string to_string() const;

 private:
  std::vector<int> parts_;
};

/// Rows j <= n at which a node may be added to lam.
std::vector<int> addable_rows(const Partition& lam, int n);

/// All partitions of r into at most n parts, in decreasing lexicographic order.
std::vector<Partition> partitions_of(int r, int n);

/// Parses `2,1` or `2,1,0`; throws ParseError / InvalidArgument.
Partition parse_partition(const std::string& text);

/// Coroot pairings of a weight entering the Psi recursion, all computed after
/// shifting every alpha_i to alpha_{i+shift}:
///   a = alpha_j^vee(lambda),
///   c = (alpha_2 + ... + alpha_j)^vee(lambda) + j - 1   (c = 0 when j = 1),
///   d = (alpha_1 + ... + alpha_j)^vee(lambda) + j - 1.
struct PairingConstants {
  int a;
  int c;
  int d;
  bool operator==(const PairingConstants&) const = default;
};

PairingConstants pairing_constants(const Weight& lam, int j, int shift = 0);
inline PairingConstants pairing_constants(const Partition& lam, int j, int shift = 0) {
  return pairing_constants(lam.as_weight(), j, shift);
}

}  // namespace qtensor::combinatorics
