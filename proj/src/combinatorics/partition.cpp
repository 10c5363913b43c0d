#include "qtensor/combinatorics/partition.hpp"

#include <numeric>
#include <sstream>

#include "qtensor/error.hpp"

namespace qtensor::combinatorics {

namespace {

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

void partitions_rec(int remaining, int max_part, int slots, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (slots == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, slots - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Weight Weight::plus_epsilon(int i) const {
  std::vector<int> c = c_;
  if (static_cast<int>(c.size()) < i) c.resize(static_cast<std::size_t>(i), 0);
  ++c[static_cast<std::size_t>(i - 1)];
  return Weight(std::move(c));
}

Weight Weight::minus_alpha(int i) const {
  std::vector<int> c = c_;
  if (static_cast<int>(c.size()) < i + 1) c.resize(static_cast<std::size_t>(i + 1), 0);
  --c[static_cast<std::size_t>(i - 1)];
  ++c[static_cast<std::size_t>(i)];
  return Weight(std::move(c));
}

std::string Weight::to_string() const { return "(" + join(c_) + ")"; }

Partition::Partition(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw InvalidArgument("negative part in partition (" + join(parts) + ")");
    if (i > 0 && parts[i] > parts[i - 1])
      throw InvalidArgument("parts not weakly decreasing in (" + join(parts) + ")");
  }
  parts_ = std::move(parts);
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::add_node(int row) const {
  if (!is_addable(row))
    throw NotAddable("row " + std::to_string(row) + " is not addable to " + to_string());
  std::vector<int> p = parts_;
  if (row > length()) p.push_back(0);
  ++p[static_cast<std::size_t>(row - 1)];
  return Partition(std::move(p));
}

bool Partition::is_rectangle_of_height(int n) const {
  if (empty()) return true;
  if (length() != n) return false;
  for (int p : parts_) {
    if (p != parts_.front()) return false;
  }
  return true;
}

Weight Partition::as_weight(int n) const {
  if (length() > n)
    throw InvalidArgument("partition " + to_string() + " has more than " + std::to_string(n) +
                          " parts");
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < length(); ++i) c[static_cast<std::size_t>(i)] = parts_[static_cast<std::size_t>(i)];
  return Weight(std::move(c));
}

std::string Partition::to_string() const { return "(" + join(parts_) + ")"; }

std::vector<int> addable_rows(const Partition& lam, int n) {
  std::vector<int> rows;
  for (int j = 1; j <= n; ++j) {
    if (lam.is_addable(j)) rows.push_back(j);
  }
  return rows;
}

std::vector<Partition> partitions_of(int r, int n) {
  std::vector<Partition> out;
  if (r < 0 || n < 0) return out;
  std::vector<int> cur;
  partitions_rec(r, r, n, cur, out);
  return out;
}

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw ParseError("cannot parse partition '" + text + "'");
    }
    if (used != item.size()) throw ParseError("cannot parse partition '" + text + "'");
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

PairingConstants pairing_constants(const Weight& lam, int j, int shift) {
  if (j < 1) throw InvalidArgument("pairing_constants needs j >= 1");
  // Sum the shifted coroots literally: alpha_i -> alpha_{i+shift}.
  auto coroot_sum = [&](int from, int to) {
    int s = 0;
    for (int i = from; i <= to; ++i) s += lam.coroot(i + shift);
    return s;
  };
  PairingConstants pc{};
  pc.a = lam.coroot(j + shift);
  pc.c = j == 1 ? 0 : coroot_sum(2, j) + j - 1;
  pc.d = coroot_sum(1, j) + j - 1;
  return pc;
}

}  // namespace qtensor::combinatorics
