#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>

namespace anticycle {

/// Missing entry, unreadable override file, or a computed cover that exceeds
/// the configured value.
class PhiTableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Erdős-Pósa sizes phi(s): with no s disjoint cycles, some phi(s) vertices
/// meet every cycle. Values are configuration, checked at runtime.
class PhiTable {
 public:
  /// {1: 0, 2: 3, 3: 6}
  static PhiTable defaults();
  /// Lines `s value`; blank lines and '#' comments skipped.
  static PhiTable parse(std::istream& in);
  /// Defaults overridden by the file named in ANTICYCLE_PHI_TABLE, read once.
  static const PhiTable& active();

  int operator()(int s) const;
  bool has(int s) const { return values_.count(s) != 0; }
  void set(int s, int value);
  void merge(const PhiTable& over);
  const std::map<int, int>& values() const { return values_; }

 private:
  std::map<int, int> values_;
};

}  // namespace anticycle
