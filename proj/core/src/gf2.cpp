#include "evenpoint/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace evenpoint {

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size_ != size_) throw std::invalid_argument("BitVector size mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  if (other.size_ != size_) throw std::invalid_argument("BitVector size mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

bool BitVector::any() const {
  for (auto w : words_) {
    if (w != 0) return true;
  }
  return false;
}

std::size_t BitVector::count() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t BitVector::first_set() const { return next_set(0); }

std::size_t BitVector::next_set(std::size_t from) const {
  if (from >= size_) return size_;
  std::size_t word = from / 64;
  std::uint64_t bits = words_[word] & (~std::uint64_t{0} << (from % 64));
  while (true) {
    if (bits != 0) {
      const std::size_t index = word * 64 + static_cast<std::size_t>(std::countr_zero(bits));
      return index < size_ ? index : size_;
    }
    if (++word >= words_.size()) return size_;
    bits = words_[word];
  }
}

bool BitVector::dot(const BitVector& other) const {
  if (other.size_ != size_) throw std::invalid_argument("BitVector size mismatch");
  unsigned parity = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    parity ^= static_cast<unsigned>(std::popcount(words_[i] & other.words_[i])) & 1u;
  }
  return parity != 0;
}

std::vector<int> BitVector::to_ints() const {
  std::vector<int> out(size_);
  for (std::size_t i = 0; i < size_; ++i) out[i] = test(i) ? 1 : 0;
  return out;
}

Gf2Echelon::Row Gf2Echelon::reduce(const BitVector& value) const {
  Row row{value, BitVector(inputs_), columns_};
  for (const Row& stored : rows_) {
    if (row.value.test(stored.pivot)) {
      row.value ^= stored.value;
      row.combination ^= stored.combination;
    }
  }
  row.pivot = row.value.first_set();
  return row;
}

bool Gf2Echelon::insert(const BitVector& value, std::size_t input_index) {
  if (value.size() != columns_) throw std::invalid_argument("row width mismatch");
  Row row{value, BitVector(inputs_), columns_};
  row.combination.set(input_index);
  for (const Row& stored : rows_) {
    if (row.value.test(stored.pivot)) {
      row.value ^= stored.value;
      row.combination ^= stored.combination;
    }
  }
  if (!row.value.any()) return false;
  row.pivot = row.value.first_set();
  if (full_) {
    for (Row& stored : rows_) {
      if (stored.value.test(row.pivot)) {
        stored.value ^= row.value;
        stored.combination ^= row.combination;
      }
    }
  }
  auto pos = std::lower_bound(rows_.begin(), rows_.end(), row.pivot,
                              [](const Row& r, std::size_t pivot) { return r.pivot < pivot; });
  rows_.insert(pos, std::move(row));
  return true;
}

std::size_t gf2_rank(const std::vector<BitVector>& vectors) {
  if (vectors.empty()) return 0;
  Gf2Echelon echelon(vectors.front().size(), vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) echelon.insert(vectors[i], i);
  return echelon.rank();
}

std::optional<BitVector> gf2_solve_left(const std::vector<BitVector>& rows,
                                        const BitVector& target) {
  Gf2Echelon echelon(target.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) echelon.insert(rows[i], i);
  const auto reduced = echelon.reduce(target);
  if (reduced.value.any()) return std::nullopt;
  return reduced.combination;
}

}  // namespace evenpoint
