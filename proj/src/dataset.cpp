#include "scor/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "scor/errors.hpp"

namespace scor {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

template <typename T>
bool parse_number(std::string_view text, T& value) {
  if (text.empty()) return false;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (*first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc() && ptr == last;
}

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

}  // namespace

LabelMap parse_label_map(std::string_view text) {
  LabelMap map;
  for (std::string_view item : split(text)) {
    if (item.empty()) continue;
    const std::size_t colon = item.find(':');
    long from = 0;
    long to = 0;
    if (colon == std::string_view::npos || !parse_number(trim(item.substr(0, colon)), from) ||
        !parse_number(trim(item.substr(colon + 1)), to)) {
      throw InvalidConfig("bad label mapping '" + std::string(item) + "' (expected from:to)");
    }
    map[from] = to;
  }
  return map;
}

DatasetFile parse_dataset(std::istream& in, std::string path, const LabelMap& merge) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    for (auto f : split(line)) header.emplace_back(f);
    break;
  }
  if (header.empty()) throw ParseError(path + ": missing header row", line_no, 0);
  if (header.size() < 2) throw ParseError(path + ": need a label column and at least one marker", line_no, 1);
  const std::size_t d = header.size() - 1;

  std::map<long, std::vector<double>> by_label;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split(line);
    if (fields.size() != header.size()) {
      throw ParseError(path + ": expected " + std::to_string(header.size()) + " fields, found " +
                           std::to_string(fields.size()),
                       line_no, std::min(fields.size(), header.size()) + 1);
    }
    long label = 0;
    if (!parse_number(fields[0], label)) {
      throw ParseError(path + ": label '" + std::string(fields[0]) + "' is not an integer", line_no, 1);
    }
    if (auto it = merge.find(label); it != merge.end()) label = it->second;
    if (label < 0) throw ParseError(path + ": negative class label", line_no, 1);
    auto& block = by_label[label];
    for (std::size_t k = 1; k < fields.size(); ++k) {
      double v = 0.0;
      if (!parse_number(fields[k], v) || !std::isfinite(v)) {
        throw ParseError(path + ": value '" + std::string(fields[k]) + "' is not a finite number",
                         line_no, k + 1);
      }
      block.push_back(v);
    }
  }
  if (by_label.empty()) throw ParseError(path + ": no data rows", line_no, 0);

  const long num_classes = by_label.rbegin()->first + 1;
  std::vector<std::vector<double>> blocks;
  for (long j = 0; j < num_classes; ++j) {
    auto it = by_label.find(j);
    if (it == by_label.end()) {
      throw ClassGap(path + ": class label " + std::to_string(j) + " has no rows (labels must cover 0.." +
                     std::to_string(num_classes - 1) + ")");
    }
    blocks.push_back(std::move(it->second));
  }
  if (blocks.size() < 2) throw ClassGap(path + ": need at least two classes");

  return DatasetFile{
      .path = std::move(path),
      .label_name = header[0],
      .column_names = std::vector<std::string>(header.begin() + 1, header.end()),
      .sample = MulticlassSample(d, std::move(blocks)),
  };
}

DatasetFile read_dataset(const std::string& path, const LabelMap& merge) {
  std::ifstream in(path);
  if (!in) throw InvalidConfig("cannot open data file '" + path + "'");
  return parse_dataset(in, path, merge);
}

void write_dataset(std::ostream& out, const DatasetFile& data) {
  out << (data.label_name.empty() ? "label" : data.label_name);
  for (const auto& name : data.column_names) out << ',' << name;
  out << '\n';
  const auto& s = data.sample;
  for (std::size_t j = 0; j < s.num_classes(); ++j) {
    for (std::size_t r = 0; r < s.class_size(j); ++r) {
      out << j;
      for (double v : s.row(j, r)) out << ',' << format_double(v);
      out << '\n';
    }
  }
}

void write_dataset(const std::string& path, const DatasetFile& data) {
  std::ofstream out(path);
  if (!out) throw InvalidConfig("cannot write '" + path + "'");
  write_dataset(out, data);
}

DatasetFile make_dataset(MulticlassSample sample, std::string path) {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < sample.dimension(); ++k) names.push_back("x" + std::to_string(k + 1));
  return DatasetFile{
      .path = std::move(path),
      .label_name = "label",
      .column_names = std::move(names),
      .sample = std::move(sample),
  };
}

std::vector<std::size_t> constant_columns(const MulticlassSample& sample) {
  std::vector<std::size_t> out;
  const double first_unset = std::nan("");
  for (std::size_t k = 0; k < sample.dimension(); ++k) {
    double first = first_unset;
    bool constant = true;
    for (std::size_t j = 0; j < sample.num_classes() && constant; ++j) {
      for (std::size_t r = 0; r < sample.class_size(j); ++r) {
        const double v = sample.row(j, r)[k];
        if (std::isnan(first)) {
          first = v;
        } else if (v != first) {
          constant = false;
          break;
        }
      }
    }
    if (constant) out.push_back(k);
  }
  return out;
}

std::vector<std::vector<double>> correlation_matrix(const MulticlassSample& sample) {
  const std::size_t d = sample.dimension();
  const double n = static_cast<double>(sample.total_size());
  std::vector<double> mean(d, 0.0);
  for (std::size_t j = 0; j < sample.num_classes(); ++j) {
    for (std::size_t r = 0; r < sample.class_size(j); ++r) {
      const auto row = sample.row(j, r);
      for (std::size_t k = 0; k < d; ++k) mean[k] += row[k];
    }
  }
  for (double& m : mean) m /= n;
  std::vector<std::vector<double>> cov(d, std::vector<double>(d, 0.0));
  for (std::size_t j = 0; j < sample.num_classes(); ++j) {
    for (std::size_t r = 0; r < sample.class_size(j); ++r) {
      const auto row = sample.row(j, r);
      for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = a; b < d; ++b) cov[a][b] += (row[a] - mean[a]) * (row[b] - mean[b]);
      }
    }
  }
  std::vector<std::vector<double>> corr(d, std::vector<double>(d, 0.0));
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a; b < d; ++b) {
      const double denom = std::sqrt(cov[a][a] * cov[b][b]);
      const double r = a == b ? 1.0 : (denom > 0.0 ? cov[a][b] / denom : 0.0);
      corr[a][b] = corr[b][a] = r;
    }
  }
  return corr;
}

ScreenResult screen_correlated(const MulticlassSample& sample, double threshold) {
  if (!(threshold > 0.0)) throw InvalidConfig("screen threshold must be > 0");
  const auto corr = correlation_matrix(sample);
  std::vector<std::size_t> remaining(sample.dimension());
  for (std::size_t k = 0; k < remaining.size(); ++k) remaining[k] = k;
  ScreenResult result;

  auto violated = [&] {
    for (std::size_t a = 0; a < remaining.size(); ++a) {
      for (std::size_t b = a + 1; b < remaining.size(); ++b) {
        if (std::abs(corr[remaining[a]][remaining[b]]) >= threshold) return true;
      }
    }
    return false;
  };
  while (remaining.size() > 1 && violated()) {
    std::size_t worst = 0;
    double worst_mean = -1.0;
    for (std::size_t a = 0; a < remaining.size(); ++a) {
      double sum = 0.0;
      for (std::size_t b = 0; b < remaining.size(); ++b) {
        if (a != b) sum += std::abs(corr[remaining[a]][remaining[b]]);
      }
      const double mean = sum / static_cast<double>(remaining.size() - 1);
      if (mean > worst_mean) {
        worst_mean = mean;
        worst = a;
      }
    }
    result.removed.push_back(remaining[worst]);
    remaining.erase(remaining.begin() + static_cast<long>(worst));
  }
  result.kept = std::move(remaining);
  return result;
}

DatasetFile select_columns(const DatasetFile& data, const std::vector<std::size_t>& columns) {
  if (columns.empty()) throw InvalidConfig("no columns selected");
  const auto& s = data.sample;
  std::vector<std::vector<double>> blocks(s.num_classes());
  for (std::size_t j = 0; j < s.num_classes(); ++j) {
    for (std::size_t r = 0; r < s.class_size(j); ++r) {
      const auto row = s.row(j, r);
      for (std::size_t k : columns) blocks[j].push_back(row[k]);
    }
  }
  std::vector<std::string> names;
  for (std::size_t k : columns) names.push_back(data.column_names.at(k));
  return DatasetFile{
      .path = data.path,
      .label_name = data.label_name,
      .column_names = std::move(names),
      .sample = MulticlassSample(columns.size(), std::move(blocks)),
  };
}

}  // namespace scor
