#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace laurentbr::gf2 {

/// Incremental row basis over F_2 for sparse vectors given as sorted column lists.
class SparseBasis {
 public:
  /// Returns true when the row was independent of the rows already present.
  bool insert(std::vector<std::uint32_t> row);
  std::size_t rank() const { return rows_.size(); }

 private:
  std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> rows_;  // keyed by largest column
};

/// Symmetric difference of two sorted column lists.
std::vector<std::uint32_t> xor_rows(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);

/// Dense vectors of up to 64 coordinates. Coordinate i sits at bit 63 - i, so
/// numeric order on words is lexicographic order with coordinate 0 most significant.
using Bits = std::uint64_t;
constexpr int kMaxDense = 64;

Bits unit(int i);
bool get(Bits v, int i);
Bits from_vector(const std::vector<int>& v);
std::vector<int> to_vector(Bits v, int width);

/// Reduced row echelon basis of the span, rows sorted ascending.
std::vector<Bits> rref(std::vector<Bits> rows);
int rank(const std::vector<Bits>& rows);
bool in_span(Bits v, const std::vector<Bits>& rows);
/// Reduced row echelon basis of span(a) ∩ span(b), rows sorted ascending.
std::vector<Bits> intersection(const std::vector<Bits>& a, const std::vector<Bits>& b);

}  // namespace laurentbr::gf2
