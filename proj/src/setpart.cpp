#include "partalg/setpart.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "partalg/error.hpp"

namespace partalg {

SetPartition SetPartition::from_labels(const std::vector<int>& labels) {
  if (labels.empty())
    throw Error(ErrorKind::invalid_argument, "set partition of an empty ground set");
  if (labels.size() > 255)
    throw Error(ErrorKind::budget, "ground set larger than 255 elements");
  SetPartition p;
  p.labels_.resize(labels.size());
  std::map<int, std::uint8_t> renumber;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, inserted] =
        renumber.emplace(labels[i], static_cast<std::uint8_t>(renumber.size()));
    p.labels_[i] = it->second;
  }
  p.block_count_ = renumber.size();
  return p;
}

SetPartition SetPartition::from_blocks(
    std::size_t m, const std::vector<std::vector<int>>& blocks) {
  if (m == 0)
    throw Error(ErrorKind::invalid_argument, "set partition of an empty ground set");
  std::vector<int> labels(m, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty())
      throw Error(ErrorKind::invalid_argument, "empty block in set partition");
    for (int e : blocks[b]) {
      if (e < 1 || static_cast<std::size_t>(e) > m)
        throw Error(ErrorKind::invalid_argument,
                    "element " + std::to_string(e) + " outside [1," +
                        std::to_string(m) + "]");
      if (labels[e - 1] != -1)
        throw Error(ErrorKind::invalid_argument,
                    "element " + std::to_string(e) + " appears twice");
      labels[e - 1] = static_cast<int>(b);
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (labels[i] == -1)
      throw Error(ErrorKind::invalid_argument,
                  "element " + std::to_string(i + 1) + " missing from blocks");
  }
  return from_labels(labels);
}

namespace {

std::size_t max_element_of(const std::vector<std::vector<int>>& blocks) {
  std::size_t m = 0;
  for (const auto& b : blocks)
    for (int e : b) m = std::max<std::size_t>(m, e < 0 ? 0 : e);
  return m;
}

}  // namespace

SetPartition SetPartition::from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse(j.get<std::string>());
  if (!j.is_array()) throw ParseError("set partition must be an array of arrays", 0);
  std::vector<std::vector<int>> blocks;
  for (const auto& b : j) {
    if (!b.is_array()) throw ParseError("block must be an array", 0);
    blocks.push_back(b.get<std::vector<int>>());
  }
  return from_blocks(max_element_of(blocks), blocks);
}

SetPartition SetPartition::parse(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ParseError("empty set partition", 0);
  if (text[first] == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(e.what(), e.byte);
    }
    return from_json(j);
  }
  std::vector<std::vector<int>> blocks(1);
  std::size_t i = 0;
  bool expect_number = true;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (!expect_number) throw ParseError("expected ',' or '|'", i);
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > 100000) throw ParseError("element too large", i);
        ++i;
      }
      blocks.back().push_back(v);
      expect_number = false;
    } else if (c == ',') {
      if (expect_number) throw ParseError("expected element", i);
      expect_number = true;
      ++i;
    } else if (c == '|') {
      if (expect_number) throw ParseError("expected element", i);
      blocks.emplace_back();
      expect_number = true;
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  if (expect_number) throw ParseError("set partition ends unexpectedly", text.size());
  return from_blocks(max_element_of(blocks), blocks);
}

SetPartition SetPartition::singletons(std::size_t m) {
  std::vector<int> labels(m);
  std::iota(labels.begin(), labels.end(), 0);
  return from_labels(labels);
}

SetPartition SetPartition::one_block(std::size_t m) {
  return from_labels(std::vector<int>(m, 0));
}

std::vector<std::vector<int>> SetPartition::blocks() const {
  std::vector<std::vector<int>> out(block_count_);
  for (std::size_t i = 0; i < labels_.size(); ++i)
    out[labels_[i]].push_back(static_cast<int>(i + 1));
  return out;
}

std::string SetPartition::to_string() const {
  std::string s;
  bool first_block = true;
  for (const auto& b : blocks()) {
    if (!first_block) s += '|';
    first_block = false;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(b[i]);
    }
  }
  return s;
}

nlohmann::json SetPartition::to_json() const { return blocks(); }

void for_each_growth_string(
    std::size_t m, std::size_t max_blocks,
    const std::function<void(const std::vector<std::uint8_t>&, std::size_t)>&
        visit) {
  if (m == 0) throw Error(ErrorKind::invalid_argument, "empty ground set");
  if (max_blocks == 0) return;
  std::vector<std::uint8_t> a(m, 0);
  // prefix_max[i] = number of distinct blocks among a[0..i]
  std::vector<std::size_t> used(m, 1);
  while (true) {
    visit(a, used[m - 1]);
    // find rightmost position that can be incremented
    std::size_t i = m - 1;
    while (i > 0) {
      std::size_t limit = std::min(used[i - 1], max_blocks - 1);
      if (a[i] < limit) break;
      --i;
    }
    if (i == 0) return;
    ++a[i];
    used[i] = std::max<std::size_t>(used[i - 1], a[i] + 1u);
    for (std::size_t j = i + 1; j < m; ++j) {
      a[j] = 0;
      used[j] = used[j - 1];
    }
  }
}

std::vector<SetPartition> enumerate_set_partitions(
    std::size_t m, std::optional<std::size_t> max_blocks) {
  if (m == 0) throw Error(ErrorKind::invalid_argument, "empty ground set");
  std::vector<SetPartition> out;
  std::vector<int> labels(m);
  for_each_growth_string(m, max_blocks.value_or(m),
                         [&](const std::vector<std::uint8_t>& a, std::size_t) {
                           labels.assign(a.begin(), a.end());
                           out.push_back(SetPartition::from_labels(labels));
                         });
  return out;
}

bool is_refinement(const SetPartition& pi, const SetPartition& rho) {
  if (pi.size() != rho.size())
    throw Error(ErrorKind::dimension, "refinement test on different ground sets");
  // every block of pi maps into a single block of rho
  std::vector<int> image(pi.block_count(), -1);
  for (std::size_t i = 0; i < pi.size(); ++i) {
    int b = pi.labels()[i];
    int r = rho.labels()[i];
    if (image[b] == -1)
      image[b] = r;
    else if (image[b] != r)
      return false;
  }
  return true;
}

std::vector<SetPartition> coarsenings(const SetPartition& pi) {
  std::vector<SetPartition> out;
  std::vector<int> labels(pi.size());
  for_each_growth_string(
      pi.block_count(), pi.block_count(),
      [&](const std::vector<std::uint8_t>& merge, std::size_t) {
        for (std::size_t i = 0; i < pi.size(); ++i)
          labels[i] = merge[pi.labels()[i]];
        out.push_back(SetPartition::from_labels(labels));
      });
  std::sort(out.begin(), out.end());
  return out;
}

long long mobius(const SetPartition& pi, const SetPartition& rho) {
  if (!is_refinement(pi, rho))
    throw Error(ErrorKind::order, "mobius(" + pi.to_string() + ", " +
                                      rho.to_string() + "): not a refinement");
  if (pi.block_count() > 21)
    throw Error(ErrorKind::budget, "mobius value exceeds 64-bit range");
  std::vector<int> count(rho.block_count(), 0);
  std::vector<bool> seen(pi.block_count(), false);
  for (std::size_t i = 0; i < pi.size(); ++i) {
    int b = pi.labels()[i];
    if (!seen[b]) {
      seen[b] = true;
      ++count[rho.labels()[i]];
    }
  }
  long long result = 1;
  for (int b : count) {
    for (int j = 2; j < b; ++j) result *= j;
    if ((b - 1) % 2) result = -result;
  }
  return result;
}

SetPartition restrict_to(const SetPartition& pi, const std::vector<int>& elements) {
  std::vector<int> labels;
  labels.reserve(elements.size());
  for (int e : elements) labels.push_back(pi.block_of(e));
  return SetPartition::from_labels(labels);
}

PropagatingData propagating_data(const SetPartition& pi) {
  if (pi.size() % 2)
    throw Error(ErrorKind::parity, "propagating data needs an even ground set");
  int k = static_cast<int>(pi.size() / 2);
  std::vector<int> bottom(k), top(k);
  std::iota(bottom.begin(), bottom.end(), 1);
  std::iota(top.begin(), top.end(), k + 1);
  return {restrict_to(pi, bottom), restrict_to(pi, top), pi.block_count()};
}

}  // namespace partalg
