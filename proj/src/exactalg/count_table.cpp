#include "eqhilb/exactalg/count_table.hpp"

#include <ostream>

#include "eqhilb/errors.hpp"

namespace eqhilb {

CountTable::CountTable(std::vector<std::string> axes, std::vector<unsigned> bounds)
    : axes_(std::move(axes)), bounds_(std::move(bounds)) {
  if (axes_.size() != bounds_.size()) throw UsageError("axis labels do not match bounds");
  std::size_t n = 1;
  for (unsigned b : bounds_) n *= static_cast<std::size_t>(b) + 1;
  data_.assign(n, Integer(0));
}

bool CountTable::contains(std::span<const unsigned> index) const {
  if (index.size() != bounds_.size()) return false;
  for (std::size_t i = 0; i < index.size(); ++i)
    if (index[i] > bounds_[i]) return false;
  return true;
}

std::size_t CountTable::linear_index(std::span<const unsigned> index) const {
  if (!contains(index)) throw UsageError("count table index out of range");
  std::size_t li = 0;
  for (std::size_t i = 0; i < index.size(); ++i) li = li * (bounds_[i] + 1) + index[i];
  return li;
}

std::vector<unsigned> CountTable::index_of(std::size_t linear) const {
  std::vector<unsigned> idx(bounds_.size());
  for (std::size_t i = bounds_.size(); i-- > 0;) {
    idx[i] = static_cast<unsigned>(linear % (bounds_[i] + 1));
    linear /= bounds_[i] + 1;
  }
  return idx;
}

Integer& CountTable::at(std::span<const unsigned> index) { return data_[linear_index(index)]; }

const Integer& CountTable::at(std::span<const unsigned> index) const {
  return data_[linear_index(index)];
}

void CountTable::for_each(
    const std::function<void(std::span<const unsigned>, const Integer&)>& f) const {
  for (std::size_t li = 0; li < data_.size(); ++li) {
    const auto idx = index_of(li);
    f(idx, data_[li]);
  }
}

void CountTable::write_csv(std::ostream& os, const std::string& value_column) const {
  for (const auto& a : axes_) os << a << ',';
  os << value_column << '\n';
  for_each([&](std::span<const unsigned> idx, const Integer& v) {
    for (unsigned i : idx) os << i << ',';
    os << v.get_str() << '\n';
  });
}

}  // namespace eqhilb
