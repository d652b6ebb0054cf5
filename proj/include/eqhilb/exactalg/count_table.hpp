#ifndef EQHILB_EXACTALG_COUNT_TABLE_HPP
#define EQHILB_EXACTALG_COUNT_TABLE_HPP

#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "eqhilb/exactalg/integer.hpp"

namespace eqhilb {

// Dense box of integers indexed by (d, m) or (d, m, n). Axis 0 is the
// content degree; the remaining axes are tau-profile counts. Every index
// runs from 0 to its bound inclusive.
class CountTable {
 public:
  CountTable() = default;
  CountTable(std::vector<std::string> axes, std::vector<unsigned> bounds);

  std::size_t rank() const noexcept { return bounds_.size(); }
  const std::vector<std::string>& axes() const noexcept { return axes_; }
  const std::vector<unsigned>& bounds() const noexcept { return bounds_; }
  std::size_t size() const noexcept { return data_.size(); }

  bool contains(std::span<const unsigned> index) const;
  Integer& at(std::span<const unsigned> index);
  const Integer& at(std::span<const unsigned> index) const;
  Integer& at(std::initializer_list<unsigned> index) {
    return at(std::span<const unsigned>(index.begin(), index.size()));
  }
  const Integer& at(std::initializer_list<unsigned> index) const {
    return at(std::span<const unsigned>(index.begin(), index.size()));
  }

  std::size_t linear_index(std::span<const unsigned> index) const;
  std::vector<unsigned> index_of(std::size_t linear) const;
  const std::vector<Integer>& data() const noexcept { return data_; }
  std::vector<Integer>& data() noexcept { return data_; }

  // Visits every cell in lexicographic index order.
  void for_each(const std::function<void(std::span<const unsigned>, const Integer&)>& f) const;

  // Header "<axis0>,<axis1>,...,count", one row per cell, lexicographic order.
  void write_csv(std::ostream& os, const std::string& value_column = "count") const;

  friend bool operator==(const CountTable& a, const CountTable& b) {
    return a.bounds_ == b.bounds_ && a.data_ == b.data_;
  }

 private:
  std::vector<std::string> axes_;
  std::vector<unsigned> bounds_;
  std::vector<Integer> data_;
};

}  // namespace eqhilb

#endif  // EQHILB_EXACTALG_COUNT_TABLE_HPP
