#ifndef MRPATH_IO_HPP
#define MRPATH_IO_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mrpath/framework.hpp"
#include "mrpath/graph.hpp"
#include "mrpath/treedec.hpp"
#include "mrpath/wall.hpp"

namespace mrp {

struct InstanceBundle {
  Framework framework;
  std::optional<RotationSystem> embedding;
  std::optional<WallModel> wall;
  std::map<std::string, std::string> meta;  // name, seed, generator, ...
};

struct ParseError : std::runtime_error {
  ParseError(int line, int col, const std::string& msg);
  int line;
  int col;
};

InstanceBundle parse_instance(const std::string& text);
std::string write_instance(const InstanceBundle& b);
InstanceBundle read_instance_file(const std::string& path);

// "TD <bags>" then one line per bag: "<parent> : <vertices>", parent -1 for the root.
TreeDecomposition parse_td(const std::string& text);
std::string write_td(const TreeDecomposition& td);

struct ResultRecord {
  std::string answer;  // YES, NO or INCOMPLETE
  std::vector<int> path;
  std::vector<int> independent_set;
  std::vector<int> deletions;
  std::vector<std::string> log;  // written as "# " lines after the record
};

std::string format_result(const ResultRecord& r);

}  // namespace mrp

#endif
