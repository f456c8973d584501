#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "scor/objectives.hpp"

namespace scor {

/// A labelled marker table: first column the ordinal class label 0..M-1, then d
/// numeric marker columns. Comma separated, header row required, '.' decimal point.
struct DatasetFile {
  std::string path;
  std::string label_name;
  std::vector<std::string> column_names;  ///< marker names, d entries
  MulticlassSample sample;
};

/// Label remapping applied before class indices are checked, e.g. {3: 2, 4: 2}.
using LabelMap = std::map<long, long>;

/// Parses "from:to,from:to". Throws InvalidConfig on malformed input.
LabelMap parse_label_map(std::string_view text);

DatasetFile parse_dataset(std::istream& in, std::string path = "<stream>",
                          const LabelMap& merge = {});
DatasetFile read_dataset(const std::string& path, const LabelMap& merge = {});

/// Writes class 0's rows first, then class 1's, ..., each in stored order, with
/// shortest round-trip number formatting.
void write_dataset(std::ostream& out, const DatasetFile& data);
void write_dataset(const std::string& path, const DatasetFile& data);

/// Builds a DatasetFile around a sample with generated names x1..xd.
DatasetFile make_dataset(MulticlassSample sample, std::string path = "");

/// Indices of marker columns that take a single value across all subjects.
std::vector<std::size_t> constant_columns(const MulticlassSample& sample);

struct ScreenResult {
  std::vector<std::size_t> kept;     ///< ascending
  std::vector<std::size_t> removed;  ///< in removal order
};

/// Pooled Pearson correlation matrix of the marker columns (all classes together).
std::vector<std::vector<double>> correlation_matrix(const MulticlassSample& sample);

/// Greedy correlation screen: while some pair of remaining columns has |r| >= threshold,
/// drop the column with the highest mean |r| to the other remaining columns (first
/// column on ties).
ScreenResult screen_correlated(const MulticlassSample& sample, double threshold = 0.8);

DatasetFile select_columns(const DatasetFile& data, const std::vector<std::size_t>& columns);

}  // namespace scor
