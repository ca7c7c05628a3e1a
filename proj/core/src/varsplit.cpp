#include "idexp/varsplit.hpp"

#include <algorithm>
#include <set>

namespace idexp {

namespace {

void validate_name(const std::string& n) {
  if (n.empty()) throw input_error("empty variable name");
  if (!(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_'))
    throw input_error("variable name must start with a letter or underscore: " + n);
  for (char c : n) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
      throw input_error("invalid character in variable name: " + n);
  }
}

}  // namespace

VarSplit::VarSplit(std::vector<std::string> u_names, std::vector<std::string> y_names) {
  e_ = static_cast<int>(u_names.size());
  r_ = static_cast<int>(y_names.size());
  names_ = std::move(u_names);
  names_.insert(names_.end(), y_names.begin(), y_names.end());
  std::set<std::string> seen;
  for (const auto& n : names_) {
    validate_name(n);
    if (!seen.insert(n).second) throw input_error("duplicate variable name: " + n);
  }
}

std::shared_ptr<const VarSplit> VarSplit::adjoined(const std::string& name) const {
  validate_name(name);
  if (index_of(name)) throw input_error("adjoined variable already exists: " + name);
  auto copy = std::shared_ptr<VarSplit>(new VarSplit(*this));
  copy->names_.push_back(name);
  return copy;
}

VarSplit::Block VarSplit::block(int i) const {
  if (i < 0 || i >= size()) throw input_error("variable index out of range");
  if (i < e_) return Block::U;
  if (i < e_ + r_) return Block::Y;
  return Block::Adjoined;
}

std::optional<int> VarSplit::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<int>(it - names_.begin());
}

std::vector<int> VarSplit::u_like_indices() const {
  std::vector<int> out;
  for (int i = 0; i < e_; ++i) out.push_back(i);
  for (int i = e_ + r_; i < size(); ++i) out.push_back(i);
  return out;
}

std::vector<int> VarSplit::y_indices() const {
  std::vector<int> out;
  for (int i = e_; i < e_ + r_; ++i) out.push_back(i);
  return out;
}

VarSplitPtr make_split(std::vector<std::string> u_names, std::vector<std::string> y_names) {
  return std::make_shared<const VarSplit>(std::move(u_names), std::move(y_names));
}

}  // namespace idexp
