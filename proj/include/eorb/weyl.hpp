#pragma once

// Finite matrix groups by full enumeration, with their conjugacy classes.

#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "eorb/matrix.hpp"

namespace eorb::weyl {

class GroupCapExceeded : public Error {
 public:
  GroupCapExceeded(std::size_t cap, std::size_t partial);
  std::size_t partial_count() const { return partial_; }

 private:
  std::size_t partial_;
};

class MatrixGroup {
 public:
  MatrixGroup() = default;
  MatrixGroup(std::vector<IntegerMatrix> elements, std::vector<std::size_t> generator_indices);

  std::size_t size() const { return elements_.size(); }
  const std::vector<IntegerMatrix>& elements() const { return elements_; }
  const IntegerMatrix& element(std::size_t i) const { return elements_[i]; }
  const std::vector<std::size_t>& generator_indices() const { return generator_indices_; }
  std::size_t dimension() const { return elements_.empty() ? 0 : elements_[0].rows(); }

  std::optional<std::size_t> index_of(const IntegerMatrix& m) const;
  bool contains(const IntegerMatrix& m) const { return index_of(m).has_value(); }

 private:
  std::vector<IntegerMatrix> elements_;
  std::vector<std::size_t> generator_indices_;
  std::unordered_map<IntegerMatrix, std::size_t, MatrixHash> index_;
};

/// Breadth-first closure starting from the identity. Generators are applied
/// in sorted order, so the element order is deterministic. `dimension` is
/// only needed when the generator list is empty.
MatrixGroup generate_group(std::span<const IntegerMatrix> generators, std::size_t cap,
                           std::size_t dimension = 0);

struct ConjugacyClass {
  std::size_t representative;  // index into the group's element order (least member)
  std::size_t size;
};

struct ConjugacyClassTable {
  std::vector<ConjugacyClass> classes;
  std::vector<std::size_t> class_of;  // element index -> class index
};

ConjugacyClassTable conjugacy_classes(const MatrixGroup& group);

/// Elements of `group` commuting with w, in the group's element order.
MatrixGroup centralizer(const MatrixGroup& group, const IntegerMatrix& w);

}  // namespace eorb::weyl
