#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "idexp/error.hpp"

namespace idexp {

// Distinguished variable blocks (u | y | adjoined), flat index order u-block,
// then y-block, then adjoined block. Adjoining appends, so existing flat
// indices stay valid. Immutable; shared by every polynomial over it.
class VarSplit {
 public:
  enum class Block { U, Y, Adjoined };

  VarSplit(std::vector<std::string> u_names, std::vector<std::string> y_names);

  // New split with one fresh variable appended to the adjoined block.
  std::shared_ptr<const VarSplit> adjoined(const std::string& name) const;

  int size() const { return static_cast<int>(names_.size()); }
  int u_size() const { return e_; }
  int y_size() const { return r_; }
  int adjoined_size() const { return size() - e_ - r_; }

  Block block(int flat_index) const;
  const std::string& name(int flat_index) const { return names_.at(flat_index); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index_of(const std::string& name) const;

  // Flat indices of the u-block plus the adjoined block, in flat order. These
  // are the "coefficient" directions used by every polyhedron construction.
  std::vector<int> u_like_indices() const;
  std::vector<int> y_indices() const;

  bool same_names(const VarSplit& other) const { return names_ == other.names_ && e_ == other.e_ && r_ == other.r_; }

 private:
  VarSplit() = default;
  std::vector<std::string> names_;
  int e_ = 0;
  int r_ = 0;
};

using VarSplitPtr = std::shared_ptr<const VarSplit>;

VarSplitPtr make_split(std::vector<std::string> u_names, std::vector<std::string> y_names);

// True when polynomials over `a` can be used where `b` is expected.
inline bool compatible(const VarSplitPtr& a, const VarSplitPtr& b) {
  return a == b || (a && b && a->same_names(*b));
}

}  // namespace idexp
