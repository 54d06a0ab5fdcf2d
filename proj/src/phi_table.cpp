#include "anticycle/phi_table.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace anticycle {

PhiTable PhiTable::defaults() {
  PhiTable t;
  t.set(1, 0);
  t.set(2, 3);
  t.set(3, 6);
  return t;
}

PhiTable PhiTable::parse(std::istream& in) {
  PhiTable t;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    int s = 0;
    int value = 0;
    if (!(ls >> s)) continue;
    std::string extra;
    if (!(ls >> value) || (ls >> extra)) {
      throw PhiTableError("phi table line " + std::to_string(lineno) + ": expected `s value`");
    }
    t.set(s, value);
  }
  return t;
}

const PhiTable& PhiTable::active() {
  static const PhiTable table = [] {
    PhiTable t = defaults();
    if (const char* path = std::getenv("ANTICYCLE_PHI_TABLE"); path != nullptr && *path != '\0') {
      std::ifstream in(path);
      if (!in) throw PhiTableError(std::string("cannot open phi table ") + path);
      t.merge(parse(in));
    }
    return t;
  }();
  return table;
}

int PhiTable::operator()(int s) const {
  const auto it = values_.find(s);
  if (it == values_.end()) throw PhiTableError("phi(" + std::to_string(s) + ") is not configured");
  return it->second;
}

void PhiTable::set(int s, int value) {
  if (s < 1 || value < 0) throw PhiTableError("invalid phi entry " + std::to_string(s) + " " + std::to_string(value));
  values_[s] = value;
}

void PhiTable::merge(const PhiTable& over) {
  for (const auto& [s, v] : over.values_) values_[s] = v;
}

}  // namespace anticycle
