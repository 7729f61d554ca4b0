#include "partalg/tableaux.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "partalg/error.hpp"

namespace partalg {

namespace {

std::string level_name(int two_level) {
  return two_level % 2 ? std::to_string(two_level / 2) + ".5" : std::to_string(two_level / 2);
}

IntegerPartition shape_of(const std::vector<std::vector<Box>>& rows) {
  std::vector<int> parts;
  for (const auto& r : rows)
    if (!r.empty()) parts.push_back(static_cast<int>(r.size()));
  return IntegerPartition(parts);
}

// Row index where two shapes differing by one box differ.
int differing_row(const IntegerPartition& a, const IntegerPartition& b) {
  int rows = std::max(a.length(), b.length());
  int found = -1;
  for (int i = 0; i < rows; ++i) {
    int d = a.part(i) - b.part(i);
    if (d == 0) continue;
    if (std::abs(d) != 1 || found >= 0)
      throw Error(ErrorKind::invalid_argument,
                  "shapes " + a.to_string() + " and " + b.to_string() + " differ by more than a box");
    found = i;
  }
  if (found < 0)
    throw Error(ErrorKind::invalid_argument, "shapes " + a.to_string() + " are equal, not a box apart");
  return found;
}

}  // namespace

// ---------------------------------------------------------------------------
// Bratteli diagram

BratteliDiagram::BratteliDiagram(int n, std::vector<std::vector<BratteliVertex>> levels)
    : n_(n), levels_(std::move(levels)) {}

BigInt BratteliDiagram::paths_to(const IntegerPartition& shape, int two_level) const {
  for (const auto& v : level(two_level))
    if (v.shape == shape) return v.paths;
  return 0;
}

std::string BratteliDiagram::to_dot() const {
  std::ostringstream out;
  auto id = [](int level, const IntegerPartition& p) {
    return "\"" + std::to_string(level) + ":" + p.to_string() + "\"";
  };
  out << "digraph bratteli {\n  // n=" << n_ << " levels=0.." << level_name(max_two_level())
      << "\n  node [shape=plaintext];\n";
  for (int t = 0; t <= max_two_level(); ++t) {
    out << "  { rank=same;";
    for (const auto& v : levels_[t])
      out << ' ' << id(t, v.shape) << " [label=\"" << v.shape.to_string() << ':'
          << partalg::to_string(v.paths) << "\"];";
    out << " }\n";
  }
  for (int t = 1; t <= max_two_level(); ++t)
    for (const auto& parent : levels_[t - 1]) {
      auto children = t % 2 ? remove_box(parent.shape) : add_box(parent.shape);
      for (const auto& c : children)
        out << "  " << id(t - 1, parent.shape) << " -> " << id(t, c) << ";\n";
    }
  out << "}\n";
  return out.str();
}

nlohmann::json BratteliDiagram::to_json() const {
  nlohmann::json levels = nlohmann::json::array();
  for (int t = 0; t <= max_two_level(); ++t) {
    nlohmann::json vs = nlohmann::json::array();
    for (const auto& v : levels_[t])
      vs.push_back({{"shape", v.shape.to_string()}, {"paths", partalg::to_string(v.paths)}});
    levels.push_back({{"level", level_name(t)}, {"vertices", vs}});
  }
  return {{"n", n_}, {"levels", levels}};
}

BratteliDiagram build_bratteli(int n, int max_two_level) {
  if (n < 2) throw Error(ErrorKind::invalid_argument, "the Bratteli diagram needs n >= 2");
  if (max_two_level < 0) throw Error(ErrorKind::invalid_argument, "negative level");
  std::vector<std::vector<BratteliVertex>> levels;
  levels.push_back({{IntegerPartition::row(n), 1}});
  for (int t = 1; t <= max_two_level; ++t) {
    std::map<IntegerPartition, BigInt, std::greater<>> next;
    for (const auto& v : levels.back()) {
      auto children = t % 2 ? remove_box(v.shape) : add_box(v.shape);
      for (auto& c : children) next[c] += v.paths;
    }
    std::vector<BratteliVertex> level;
    for (auto& [shape, paths] : next) level.push_back({shape, paths});
    levels.push_back(std::move(level));
  }
  return BratteliDiagram(n, std::move(levels));
}

// ---------------------------------------------------------------------------
// vacillating tableaux

void VacillatingTableau::validate() const {
  if (shapes.empty() || shapes.size() % 2 == 0)
    throw Error(ErrorKind::invalid_argument, "a vacillating tableau has an odd number of shapes");
  if (shapes.front() != IntegerPartition::row(n))
    throw Error(ErrorKind::invalid_argument, "a vacillating tableau starts at [n]");
  for (std::size_t i = 1; i < shapes.size(); ++i) {
    const auto& prev = shapes[i - 1];
    const auto& cur = shapes[i];
    int expected = i % 2 ? prev.size() - 1 : prev.size() + 1;
    if (cur.size() != expected || (i % 2 ? !prev.contains(cur) : !cur.contains(prev)))
      throw Error(ErrorKind::invalid_argument, "step " + level_name(static_cast<int>(i)) +
                                                   " of " + to_string() +
                                                   " does not remove/add a single box");
  }
}

std::string VacillatingTableau::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < shapes.size(); ++i) s += (i ? "," : "") + shapes[i].to_string();
  return s + ")";
}

nlohmann::json VacillatingTableau::to_json() const {
  nlohmann::json s = nlohmann::json::array();
  for (const auto& p : shapes) s.push_back(p.to_string());
  return {{"n", n}, {"k", length()}, {"shapes", s}};
}

VacillatingTableau VacillatingTableau::parse(std::string_view text) {
  std::size_t open = text.find('(');
  std::size_t close = text.rfind(')');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open)
    throw ParseError("expected a parenthesized shape sequence", 0);
  VacillatingTableau vt;
  std::size_t i = open + 1;
  while (i < close) {
    std::size_t lb = text.find('[', i);
    if (lb == std::string_view::npos || lb > close) throw ParseError("expected '['", i);
    std::size_t rb = text.find(']', lb);
    if (rb == std::string_view::npos || rb > close) throw ParseError("missing ']'", lb);
    try {
      vt.shapes.push_back(IntegerPartition::parse(text.substr(lb, rb - lb + 1)));
    } catch (const Error&) {
      throw ParseError("bad partition", lb);
    }
    i = rb + 1;
    while (i < close && (text[i] == ',' || std::isspace(static_cast<unsigned char>(text[i])))) ++i;
  }
  if (vt.shapes.empty()) throw ParseError("no shapes", open);
  vt.n = vt.shapes.front().size();
  vt.validate();
  return vt;
}

std::vector<VacillatingTableau> enumerate_vacillating(const IntegerPartition& lambda, int k,
                                                      int n) {
  if (lambda.size() != n)
    throw Error(ErrorKind::invalid_argument, lambda.to_string() + " is not a partition of n");
  std::vector<VacillatingTableau> out;
  VacillatingTableau cur{n, {IntegerPartition::row(n)}};
  auto distance = [&](const IntegerPartition& mu) {
    int d = 0;
    for (int i = 0; i < mu.length(); ++i) d += std::max(0, mu.part(i) - lambda.part(i));
    return d;
  };
  auto rec = [&](auto& self, int step) -> void {
    const auto& last = cur.shapes.back();
    if (step == 2 * k) {
      if (last == lambda) out.push_back(cur);
      return;
    }
    if (distance(last) > (2 * k - step + 1) / 2) return;
    auto children = step % 2 ? add_box(last) : remove_box(last);
    std::sort(children.begin(), children.end());
    for (auto& c : children) {
      cur.shapes.push_back(c);
      self(self, step + 1);
      cur.shapes.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::pair<VacillatingTableau, VacillatingTableau> halves_split(const VacillatingTableau& vt) {
  vt.validate();
  if (vt.length() % 2 || vt.shape() != IntegerPartition::row(vt.n))
    throw Error(ErrorKind::invalid_argument, "splitting needs shape [n] and even length");
  const std::size_t mid = vt.shapes.size() / 2;
  VacillatingTableau first{vt.n, {vt.shapes.begin(), vt.shapes.begin() + mid + 1}};
  VacillatingTableau second{vt.n, {vt.shapes.rbegin(), vt.shapes.rbegin() + mid + 1}};
  return {first, second};
}

VacillatingTableau halves_join(const VacillatingTableau& first, const VacillatingTableau& second) {
  first.validate();
  second.validate();
  if (first.n != second.n || first.shape() != second.shape() || first.length() != second.length())
    throw Error(ErrorKind::invalid_argument, "halves must share n, shape and length");
  VacillatingTableau out{first.n, first.shapes};
  out.shapes.insert(out.shapes.end(), second.shapes.rbegin() + 1, second.shapes.rend());
  return out;
}

// ---------------------------------------------------------------------------
// set-partition tableaux

IntegerPartition SetPartitionTableau::shape() const { return shape_of(rows); }

int SetPartitionTableau::blocks() const {
  int t = 0;
  for (const auto& r : rows)
    for (const auto& b : r) t += !b.empty();
  return t;
}

SetPartition SetPartitionTableau::set_partition() const {
  std::vector<std::vector<int>> blocks;
  for (const auto& r : rows)
    for (const auto& b : r)
      if (!b.empty()) blocks.push_back(b);
  return SetPartition::from_blocks(static_cast<std::size_t>(k), blocks);
}

void SetPartitionTableau::validate() const {
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::invalid_argument, "set-partition tableau " + to_string() + ": " + why);
  };
  if (rows.empty()) fail("no rows");
  for (std::size_t r = 1; r < rows.size(); ++r)
    if (rows[r].empty() || rows[r].size() > rows[r - 1].size()) fail("rows do not form a partition");
  if (shape().size() != n) fail("shape is not a partition of n");
  std::vector<int> seen(static_cast<std::size_t>(k) + 1, 0);
  bool zeros_done = false;
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      const Box& b = rows[r][c];
      if (b.empty()) {
        if (r > 0 || zeros_done) fail("zero boxes must open the first row");
        continue;
      }
      if (r == 0) zeros_done = true;
      if (!std::is_sorted(b.begin(), b.end())) fail("box contents are not sorted");
      for (int v : b) {
        if (v < 1 || v > k) fail("entry outside [1,k]");
        if (seen[static_cast<std::size_t>(v)]++) fail("entry repeated");
      }
      if (c > 0 && !rows[r][c - 1].empty() && box_key(rows[r][c - 1]) >= box_key(b))
        fail("row not increasing");
      if (r > 0 && box_key(rows[r - 1][c]) >= box_key(b)) fail("column not increasing");
    }
  for (int v = 1; v <= k; ++v)
    if (!seen[static_cast<std::size_t>(v)]) fail("entry " + std::to_string(v) + " missing");
  if (blocks() < shape().size() - shape().part(0)) fail("fewer blocks than |lambda#|");
}

std::string format_rows(const std::vector<std::vector<Box>>& rows) {
  std::string s;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) s += " / ";
    for (const auto& b : rows[r]) {
      s += "[";
      if (b.empty()) s += "0";
      for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
      s += "]";
    }
  }
  return s;
}

std::string SetPartitionTableau::to_string() const { return format_rows(rows); }

nlohmann::json SetPartitionTableau::to_json() const {
  nlohmann::json js = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json jr = nlohmann::json::array();
    for (const auto& b : r) jr.push_back(b.empty() ? nlohmann::json(0) : nlohmann::json(b));
    js.push_back(jr);
  }
  return {{"n", n}, {"k", k}, {"shape", shape().to_string()}, {"rows", js}};
}

SetPartitionTableau SetPartitionTableau::from_json(const nlohmann::json& j) {
  try {
    SetPartitionTableau t;
    t.n = j.at("n").get<int>();
    t.k = j.at("k").get<int>();
    for (const auto& jr : j.at("rows")) {
      std::vector<Box> row;
      for (const auto& jb : jr) row.push_back(jb.is_number() ? Box{} : jb.get<Box>());
      t.rows.push_back(std::move(row));
    }
    t.validate();
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("tableau JSON: ") + e.what(), 0);
  }
}

SetPartitionTableau SetPartitionTableau::parse(std::string_view text) {
  SetPartitionTableau t;
  t.rows.emplace_back();
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '/') {
      if (t.rows.back().empty()) throw ParseError("empty row", i);
      t.rows.emplace_back();
      ++i;
    } else if (c == '[') {
      std::size_t rb = text.find(']', i);
      if (rb == std::string_view::npos) throw ParseError("missing ']'", i);
      Box box;
      std::size_t j = i + 1;
      while (j < rb) {
        if (std::isspace(static_cast<unsigned char>(text[j])) || text[j] == ',') {
          ++j;
          continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(text[j]))) throw ParseError("expected a number", j);
        int v = 0;
        while (j < rb && std::isdigit(static_cast<unsigned char>(text[j]))) {
          v = v * 10 + (text[j] - '0');
          if (v > 100000) throw ParseError("entry too large", j);
          ++j;
        }
        box.push_back(v);
      }
      if (box.empty()) throw ParseError("empty box", i);
      if (box == Box{0}) box.clear();
      t.rows.back().push_back(std::move(box));
      i = rb + 1;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  if (t.rows.back().empty()) throw ParseError("empty row", text.size());
  for (const auto& r : t.rows) {
    t.n += static_cast<int>(r.size());
    for (const auto& b : r)
      for (int v : b) t.k = std::max(t.k, v);
  }
  t.validate();
  return t;
}

std::vector<SetPartitionTableau> enumerate_spt(const IntegerPartition& lambda, int k, int n) {
  if (lambda.size() != n)
    throw Error(ErrorKind::invalid_argument, lambda.to_string() + " is not a partition of n");
  if (k < 0) throw Error(ErrorKind::invalid_argument, "negative k");
  std::vector<SetPartitionTableau> out;
  const int hash_size = n - lambda.part(0);
  for (int t = hash_size; t <= n; ++t) {
    if (lambda.part(0) < n - t) continue;
    std::vector<std::vector<std::vector<int>>> partitions;  // blocks sorted by max
    if (k == 0) {
      if (t == 0) partitions.emplace_back();
    } else if (t >= 1 && t <= k) {
      for (const auto& pi : enumerate_set_partitions(static_cast<std::size_t>(k), static_cast<std::size_t>(t))) {
        if (static_cast<int>(pi.block_count()) != t) continue;
        auto blocks = pi.blocks();
        std::sort(blocks.begin(), blocks.end(),
                  [](const auto& a, const auto& b) { return a.back() < b.back(); });
        partitions.push_back(std::move(blocks));
      }
    }
    if (partitions.empty()) continue;
    auto fillings = standard_skew_tableaux(SkewShape(lambda, IntegerPartition::row(n - t)));
    for (const auto& blocks : partitions)
      for (const auto& f : fillings) {
        SetPartitionTableau spt{n, k, {}};
        for (const auto& row : f) {
          std::vector<Box> boxes;
          for (int v : row) boxes.push_back(v == 0 ? Box{} : blocks[static_cast<std::size_t>(v - 1)]);
          spt.rows.push_back(std::move(boxes));
        }
        out.push_back(std::move(spt));
      }
  }
  return out;
}

int schensted_insert(std::vector<std::vector<Box>>& rows, Box box) {
  for (std::size_t r = 0;; ++r) {
    if (r == rows.size()) {
      rows.push_back({std::move(box)});
      return static_cast<int>(r);
    }
    auto& row = rows[r];
    const int key = box_key(box);
    auto it = std::find_if(row.begin(), row.end(), [&](const Box& b) { return box_key(b) > key; });
    if (it == row.end()) {
      row.push_back(std::move(box));
      return static_cast<int>(r);
    }
    std::swap(box, *it);
  }
}

Box schensted_uninsert(std::vector<std::vector<Box>>& rows, int row) {
  if (row < 0 || row >= static_cast<int>(rows.size()) || rows[row].empty())
    throw Error(ErrorKind::invalid_argument, "no cell to un-insert in row " + std::to_string(row));
  if (row + 1 < static_cast<int>(rows.size()) && rows[row + 1].size() == rows[row].size())
    throw Error(ErrorKind::invalid_argument, "cell at the end of row " + std::to_string(row) +
                                                 " is not removable");
  Box box = std::move(rows[row].back());
  rows[row].pop_back();
  if (rows[row].empty()) rows.erase(rows.begin() + row);
  for (int r = row - 1; r >= 0; --r) {
    auto& cur = rows[r];
    const int key = box_key(box);
    auto it = std::find_if(cur.rbegin(), cur.rend(), [&](const Box& b) { return box_key(b) < key; });
    if (it == cur.rend())
      throw Error(ErrorKind::invalid_argument, "un-insertion found no smaller box in row " +
                                                   std::to_string(r));
    std::swap(box, *it);
  }
  return box;
}

VacillatingTableau bijection_A(const SetPartitionTableau& spt, std::vector<BijectionStep>* trace) {
  spt.validate();
  auto rows = spt.rows;
  std::vector<IntegerPartition> shapes{shape_of(rows)};
  if (trace) trace->push_back({2 * spt.k, rows});
  for (int j = spt.k; j >= 1; --j) {
    // the box holding j has the largest key, so it ends its row and column
    int r = -1;
    for (std::size_t i = 0; i < rows.size() && r < 0; ++i)
      if (!rows[i].empty() && box_key(rows[i].back()) == j) r = static_cast<int>(i);
    if (r < 0) throw Error(ErrorKind::invalid_argument, "entry " + std::to_string(j) + " is not at a corner");
    Box b = std::move(rows[r].back());
    rows[r].pop_back();
    if (rows[r].empty()) rows.erase(rows.begin() + r);
    shapes.push_back(shape_of(rows));
    if (trace) trace->push_back({2 * j - 1, rows});
    b.pop_back();
    schensted_insert(rows, std::move(b));
    shapes.push_back(shape_of(rows));
    if (trace) trace->push_back({2 * j - 2, rows});
  }
  std::reverse(shapes.begin(), shapes.end());
  if (trace) std::reverse(trace->begin(), trace->end());
  VacillatingTableau vt{spt.n, std::move(shapes)};
  vt.validate();
  return vt;
}

SetPartitionTableau bijection_B(const VacillatingTableau& vt, std::vector<BijectionStep>* trace) {
  vt.validate();
  std::vector<std::vector<Box>> rows{std::vector<Box>(static_cast<std::size_t>(vt.n))};
  if (trace) trace->push_back({0, rows});
  for (int j = 0; j < vt.length(); ++j) {
    const auto& whole = vt.shapes[2 * j];
    const auto& half = vt.shapes[2 * j + 1];
    const auto& next = vt.shapes[2 * j + 2];
    Box b = schensted_uninsert(rows, differing_row(whole, half));
    if (trace) trace->push_back({2 * j + 1, rows});
    b.push_back(j + 1);  // a zero box becomes {j+1}
    int r = differing_row(next, half);
    if (r == static_cast<int>(rows.size())) rows.emplace_back();
    rows[r].push_back(std::move(b));
    if (trace) trace->push_back({2 * j + 2, rows});
  }
  SetPartitionTableau spt{vt.n, vt.length(), std::move(rows)};
  spt.validate();
  return spt;
}

std::string format_trace(const std::vector<BijectionStep>& steps) {
  std::string s;
  for (const auto& st : steps)
    s += "j=" + level_name(st.two_level) + "  " + shape_of(st.rows).to_string() + "  " +
         format_rows(st.rows) + "\n";
  return s;
}

}  // namespace partalg
