#include "qtensor/combinatorics/walk.hpp"

#include <gmpxx.h>

#include "qtensor/error.hpp"

namespace qtensor::combinatorics {

namespace {

void walks_rec(int n, int r, const std::optional<Partition>& target, Walk& cur,
               std::vector<Walk>& out) {
  if (cur.length() == r) {
    if (!target || cur.shape() == *target) out.push_back(cur);
    return;
  }
  for (int row : addable_rows(cur.shape(), n)) {
    // Prune branches that can no longer reach the target.
    if (target && cur.shape().add_node(row).part(row) > target->part(row)) continue;
    Walk next = cur.extended(row);
    walks_rec(n, r, target, next, out);
  }
}

}  // namespace

Walk Walk::from_rows(std::vector<int> rows) {
  Walk w;
  for (int row : rows) {
    if (!w.shape().is_addable(row))
      throw InvalidArgument("walk " + Walk(w).to_string() + " cannot continue in row " +
                            std::to_string(row));
    w = w.extended(row);
  }
  return w;
}

Walk Walk::extended(int row) const {
  Walk w = *this;
  w.steps_.push_back(shape().add_node(row));
  w.rows_.push_back(row);
  return w;
}

Walk Walk::prefix(int len) const {
  if (len < 0 || len > length()) throw InvalidArgument("walk prefix length out of range");
  Walk w;
  w.rows_.assign(rows_.begin(), rows_.begin() + len);
  w.steps_.assign(steps_.begin(), steps_.begin() + len + 1);
  return w;
}

std::string Walk::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(rows_[i]);
  }
  return out + "]";
}

std::vector<Walk> enumerate_walks(int n, int r, const std::optional<Partition>& target) {
  if (n < 1 || r < 0) throw InvalidArgument("enumerate_walks needs n >= 1 and r >= 0");
  std::vector<Walk> out;
  if (target && (target->size() != r || target->length() > n)) return out;
  Walk start;
  walks_rec(n, r, target, start, out);
  return out;
}

long long count_standard(const Partition& lam) {
  mpz_class num;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(lam.size()));
  mpz_class hooks = 1;
  for (int i = 1; i <= lam.length(); ++i) {
    for (int j = 1; j <= lam.part(i); ++j) {
      int arm = lam.part(i) - j;
      int leg = 0;
      while (lam.part(i + leg + 1) >= j) ++leg;
      hooks *= arm + leg + 1;
    }
  }
  mpz_class f = num / hooks;
  return f.get_si();
}

long long weyl_dim(const Partition& lam, int n) {
  if (lam.length() > n)
    throw InvalidArgument("partition " + lam.to_string() + " has more than " + std::to_string(n) +
                          " parts");
  mpq_class dim = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      dim *= mpq_class(lam.part(i) - lam.part(j) + j - i, j - i);
    }
  }
  dim.canonicalize();
  return mpz_class(dim.get_num()).get_si();
}

}  // namespace qtensor::combinatorics
