#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace evenpoint {

/// Dense vector over F_2.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i, bool value = true) {
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (value) {
      words_[i / 64] |= mask;
    } else {
      words_[i / 64] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  bool any() const;
  std::size_t count() const;
  /// Index of the lowest set bit, or size() when zero.
  std::size_t first_set() const;
  /// Next set bit at or after `from`, or size().
  std::size_t next_set(std::size_t from) const;
  /// Dot product over F_2.
  bool dot(const BitVector& other) const;
  std::vector<int> to_ints() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Incremental row echelon form over F_2, tracking for each stored row which
/// inserted rows were combined to produce it. Pivots are lowest set bits, so
/// callers control elimination priority through column order. Rows are kept
/// sorted by pivot. With `fully_reduced` off, stored rows are never
/// back-substituted, which keeps their combinations short.
class Gf2Echelon {
 public:
  struct Row {
    BitVector value;
    BitVector combination;
    std::size_t pivot;
  };

  Gf2Echelon(std::size_t columns, std::size_t max_inputs, bool fully_reduced = true)
      : columns_(columns), inputs_(max_inputs), full_(fully_reduced) {}

  /// Reduces `value` and stores it if independent. `input_index` tags the
  /// row's combination vector. Returns true if the rank grew.
  bool insert(const BitVector& value, std::size_t input_index);
  /// Fully reduces `value` against the stored rows.
  Row reduce(const BitVector& value) const;
  bool in_span(const BitVector& value) const { return !reduce(value).value.any(); }

  std::size_t rank() const { return rows_.size(); }
  const std::vector<Row>& rows() const { return rows_; }

 private:
  std::size_t columns_;
  std::size_t inputs_;
  bool full_;
  std::vector<Row> rows_;
};

/// Rank of a list of vectors of equal length.
std::size_t gf2_rank(const std::vector<BitVector>& vectors);

/// Solves x * M = target for a row vector x, where M has rows `rows`.
/// Returns nullopt if target is not in the row space.
std::optional<BitVector> gf2_solve_left(const std::vector<BitVector>& rows,
                                        const BitVector& target);

}  // namespace evenpoint
