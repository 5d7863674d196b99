#ifndef SGA_EXACT_SPAN_HPP
#define SGA_EXACT_SPAN_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace sga {

/// Incremental row-echelon form over an exact field.
///
/// Vectors are sparse maps from an ordered coordinate key to a nonzero field
/// value. Each stored row pivots on its first key and remembers how it is
/// combined from the vectors inserted so far, so membership queries also
/// return coordinates with respect to the inserted vectors.
template <class Key, class Field, class Compare = std::less<Key>>
class ExactSpan {
 public:
  using Vector = std::map<Key, Field, Compare>;
  using Coordinates = std::vector<Field>;

  std::size_t dimension() const { return inserted_; }

  bool contains(const Vector& v) const { return reduce(v).remainder.empty(); }

  /// Coordinates of v in terms of the inserted vectors, or nullopt if v is outside the span.
  std::optional<Coordinates> coordinates(const Vector& v) const {
    Reduction r = reduce(v);
    if (!r.remainder.empty()) return std::nullopt;
    r.combination.resize(inserted_);
    return std::move(r.combination);
  }

  /// Appends v if it is independent of the current span. Returns false (and leaves the span unchanged) otherwise.
  bool insert(const Vector& v) {
    Reduction r = reduce(v);
    if (r.remainder.empty()) return false;
    // remainder = v - sum(combination_i * e_i); the new row is expressed through e_new as well.
    Coordinates combo(inserted_ + 1);
    for (std::size_t i = 0; i < r.combination.size(); ++i) combo[i] = -r.combination[i];
    combo[inserted_] = Field(1);
    const Field scale = Field(1) / r.remainder.begin()->second;
    for (auto& [k, x] : r.remainder) x *= scale;
    for (auto& x : combo) x *= scale;
    const Key pivot = r.remainder.begin()->first;
    rows_.emplace(pivot, Row{std::move(r.remainder), std::move(combo)});
    ++inserted_;
    return true;
  }

 private:
  struct Row {
    Vector entries;         // pivot entry normalized to one
    Coordinates combination;  // row = sum(combination[i] * inserted_i)
  };

  struct Reduction {
    Vector remainder;
    Coordinates combination;
  };

  Reduction reduce(const Vector& v) const {
    Reduction r{v, Coordinates(inserted_)};
    // Row entries never precede their pivot, so eliminating in ascending key order never revisits a key.
    auto it = r.remainder.begin();
    while (it != r.remainder.end()) {
      auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        ++it;
        continue;
      }
      const Key key = it->first;
      const Field factor = it->second;
      for (const auto& [k, x] : row->second.entries) {
        auto [slot, fresh] = r.remainder.try_emplace(k, Field());
        slot->second -= factor * x;
        if (slot->second.is_zero()) r.remainder.erase(slot);
      }
      const auto& combo = row->second.combination;
      for (std::size_t i = 0; i < combo.size(); ++i) r.combination[i] += factor * combo[i];
      it = r.remainder.upper_bound(key);
    }
    return r;
  }

  std::map<Key, Row, Compare> rows_;
  std::size_t inserted_ = 0;
};

}  // namespace sga

#endif  // SGA_EXACT_SPAN_HPP
