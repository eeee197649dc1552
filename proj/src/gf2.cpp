#include "laurentbr/gf2.hpp"

#include <algorithm>
#include <bit>

namespace laurentbr::gf2 {

std::vector<std::uint32_t> xor_rows(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool SparseBasis::insert(std::vector<std::uint32_t> row) {
  while (!row.empty()) {
    auto it = rows_.find(row.back());
    if (it == rows_.end()) {
      const std::uint32_t key = row.back();
      rows_.emplace(key, std::move(row));
      return true;
    }
    row = xor_rows(row, it->second);
  }
  return false;
}

Bits unit(int i) { return Bits{1} << (63 - i); }
bool get(Bits v, int i) { return (v & unit(i)) != 0; }

Bits from_vector(const std::vector<int>& v) {
  Bits b = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] & 1) b |= unit(static_cast<int>(i));
  return b;
}

std::vector<int> to_vector(Bits v, int width) {
  std::vector<int> out(width);
  for (int i = 0; i < width; ++i) out[i] = get(v, i) ? 1 : 0;
  return out;
}

std::vector<Bits> rref(std::vector<Bits> rows) {
  std::vector<Bits> basis;
  for (Bits r : rows) {
    for (Bits b : basis)
      if (r & (Bits{1} << (63 - std::countl_zero(b)))) r ^= b;
    if (!r) continue;
    const Bits lead = Bits{1} << (63 - std::countl_zero(r));
    for (Bits& b : basis)
      if (b & lead) b ^= r;
    basis.push_back(r);
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

int rank(const std::vector<Bits>& rows) { return static_cast<int>(rref(rows).size()); }

bool in_span(Bits v, const std::vector<Bits>& rows) {
  auto r = rows;
  const int before = rank(r);
  r.push_back(v);
  return rank(r) == before;
}

std::vector<Bits> intersection(const std::vector<Bits>& a, const std::vector<Bits>& b) {
  // Zassenhaus: rows (x | x) for x in a and (y | 0) for y in b; rows with zero left half span a ∩ b.
  struct Row {
    Bits left, right;
  };
  std::vector<Row> rows;
  for (Bits x : a) rows.push_back({x, x});
  for (Bits y : b) rows.push_back({y, 0});
  std::vector<Row> basis;
  for (Row r : rows) {
    for (const Row& q : basis) {
      const Bits lead = q.left ? Bits{1} << (63 - std::countl_zero(q.left)) : 0;
      if (lead ? (r.left & lead) != 0 : (r.right & (Bits{1} << (63 - std::countl_zero(q.right)))) != 0) {
        r.left ^= q.left;
        r.right ^= q.right;
      }
    }
    if (r.left || r.right) basis.push_back(r);
  }
  std::vector<Bits> out;
  for (const Row& q : basis)
    if (!q.left) out.push_back(q.right);
  return rref(out);
}

}  // namespace laurentbr::gf2
