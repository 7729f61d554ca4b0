#include "partalg/combinatorics.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>

#include "partalg/error.hpp"

namespace partalg {

IntegerPartition::IntegerPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw Error(ErrorKind::invalid_argument, "partition parts must be positive");
    if (i && parts_[i] > parts_[i - 1])
      throw Error(ErrorKind::invalid_argument, "partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

IntegerPartition IntegerPartition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  bool bracket = i < text.size() && text[i] == '[';
  if (bracket) ++i;
  skip();
  bool expect_number = true;
  while (i < text.size() && text[i] != ']') {
    if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      if (!expect_number) throw ParseError("expected ','", i);
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > 1000000) throw ParseError("part too large", i);
        ++i;
      }
      parts.push_back(v);
      expect_number = false;
    } else if (text[i] == ',') {
      if (expect_number) throw ParseError("expected part", i);
      expect_number = true;
      ++i;
    } else if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + text[i] + "'", i);
    }
  }
  if (!parts.empty() && expect_number) throw ParseError("partition ends after ','", i);
  if (bracket) {
    if (i >= text.size()) throw ParseError("missing ']'", i);
    ++i;
  }
  skip();
  if (i != text.size()) throw ParseError("trailing characters", i);
  try {
    return IntegerPartition(std::move(parts));
  } catch (const Error& e) {
    throw ParseError(e.what(), 0);
  }
}

IntegerPartition IntegerPartition::row(int n) {
  if (n < 0) throw Error(ErrorKind::invalid_argument, "negative partition size");
  return n == 0 ? IntegerPartition() : IntegerPartition({n});
}

int IntegerPartition::column(int j) const noexcept {
  int c = 0;
  while (c < length() && parts_[static_cast<std::size_t>(c)] > j) ++c;
  return c;
}

IntegerPartition IntegerPartition::without_first_row() const {
  if (parts_.empty()) return {};
  return IntegerPartition(std::vector<int>(parts_.begin() + 1, parts_.end()));
}

bool IntegerPartition::contains(const IntegerPartition& inner) const noexcept {
  if (inner.length() > length()) return false;
  for (int i = 0; i < inner.length(); ++i)
    if (inner.part(i) > part(i)) return false;
  return true;
}

int IntegerPartition::multiplicity_of(int v) const noexcept {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), v));
}

std::string IntegerPartition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

SkewShape::SkewShape(IntegerPartition outer_shape, IntegerPartition inner_shape)
    : outer(std::move(outer_shape)), inner(std::move(inner_shape)) {
  if (!outer.contains(inner))
    throw Error(ErrorKind::invalid_argument,
                inner.to_string() + " does not fit inside " + outer.to_string());
}

namespace {

std::mutex stirling_mutex;
std::vector<std::vector<BigInt>> stirling_rows{{BigInt(1)}};

}  // namespace

BigInt stirling2(int k, int t) {
  if (k < 0 || t < 0) throw Error(ErrorKind::invalid_argument, "negative Stirling index");
  if (t > k) return 0;
  std::lock_guard lock(stirling_mutex);
  while (static_cast<int>(stirling_rows.size()) <= k) {
    const auto& prev = stirling_rows.back();
    std::size_t r = stirling_rows.size();
    std::vector<BigInt> row(r + 1, 0);
    for (std::size_t j = 1; j <= r; ++j) {
      BigInt a = j < prev.size() ? prev[j] : BigInt(0);
      row[j] = BigInt(static_cast<unsigned long>(j)) * a + prev[j - 1];
    }
    stirling_rows.push_back(std::move(row));
  }
  return stirling_rows[k][t];
}

BigInt restricted_bell(int m, int n) {
  if (m < 0 || n < 0) throw Error(ErrorKind::invalid_argument, "negative Bell index");
  BigInt total = 0;
  for (int t = 0; t <= std::min(m, n); ++t) total += stirling2(m, t);
  return total;
}

BigInt bell(int m) { return restricted_bell(m, m); }

int hook_length(const IntegerPartition& lambda, int row, int col) {
  if (row < 0 || row >= lambda.length() || col < 0 || col >= lambda.part(row))
    throw Error(ErrorKind::invalid_argument, "cell outside the Young diagram");
  return (lambda.part(row) - col - 1) + (lambda.column(col) - row - 1) + 1;
}

BigInt hook_dimension(const IntegerPartition& lambda) {
  BigInt denom = 1;
  for (int r = 0; r < lambda.length(); ++r)
    for (int c = 0; c < lambda.part(r); ++c) denom *= hook_length(lambda, r, c);
  return factorial(static_cast<unsigned long>(lambda.size())) / denom;
}

namespace {

BigInt count_skew(const IntegerPartition& outer, const IntegerPartition& inner,
                  std::map<IntegerPartition, BigInt>& memo) {
  if (outer == inner) return 1;
  if (auto it = memo.find(outer); it != memo.end()) return it->second;
  BigInt total = 0;
  for (const auto& smaller : remove_box(outer))
    if (smaller.contains(inner)) total += count_skew(smaller, inner, memo);
  memo.emplace(outer, total);
  return total;
}

}  // namespace

BigInt skew_count(const SkewShape& shape) {
  std::map<IntegerPartition, BigInt> memo;
  return count_skew(shape.outer, shape.inner, memo);
}

BigInt skew_count_aitken(const SkewShape& shape) {
  int l = shape.outer.length();
  if (l == 0) return 1;
  std::vector<std::vector<Rational>> a(l, std::vector<Rational>(l));
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) {
      int d = shape.outer.part(i) - shape.inner.part(j) - i + j;
      a[i][j] = d < 0 ? Rational(0) : Rational(1, factorial(static_cast<unsigned long>(d)));
    }
  }
  Rational det = 1;
  for (int c = 0; c < l; ++c) {
    int pivot = -1;
    for (int r = c; r < l; ++r)
      if (a[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != c) {
      std::swap(a[pivot], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (int r = c + 1; r < l; ++r) {
      if (a[r][c] == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (int j = c; j < l; ++j) a[r][j] -= f * a[c][j];
    }
  }
  Rational result = det * Rational(factorial(static_cast<unsigned long>(shape.size())));
  return result.get_num();
}

std::vector<std::vector<std::vector<int>>> standard_skew_tableaux(const SkewShape& shape) {
  std::vector<std::vector<std::vector<int>>> out;
  int rows = shape.outer.length();
  std::vector<std::vector<int>> grid(rows);
  for (int r = 0; r < rows; ++r) grid[r].assign(shape.outer.part(r), 0);
  std::vector<int> filled(rows);
  for (int r = 0; r < rows; ++r) filled[r] = shape.inner.part(r);
  int total = shape.size();
  auto recurse = [&](auto& self, int next) -> void {
    if (next > total) {
      out.push_back(grid);
      return;
    }
    for (int r = 0; r < rows; ++r) {
      int c = filled[r];
      if (c >= shape.outer.part(r)) continue;
      if (r > 0 && filled[r - 1] <= c) continue;
      grid[r][c] = next;
      ++filled[r];
      self(self, next + 1);
      --filled[r];
      grid[r][c] = 0;
    }
  };
  recurse(recurse, 1);
  return out;
}

BigInt kostka_hook(const IntegerPartition& lambda, int t) {
  int zeros = lambda.size() - t;
  if (t < 0 || zeros < 0) return 0;
  auto inner = IntegerPartition::row(zeros);
  if (!lambda.contains(inner)) return 0;
  return skew_count(SkewShape(lambda, inner));
}

std::vector<IntegerPartition> integer_partitions(int n) {
  if (n < 0) throw Error(ErrorKind::invalid_argument, "negative partition size");
  std::vector<IntegerPartition> out;
  std::vector<int> cur;
  auto rec = [&](auto& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

std::vector<IntegerPartition> remove_box(const IntegerPartition& lambda) {
  std::vector<IntegerPartition> out;
  for (int r = 0; r < lambda.length(); ++r) {
    if (lambda.part(r + 1) < lambda.part(r)) {
      auto parts = lambda.parts();
      if (--parts[r] == 0) parts.pop_back();
      out.emplace_back(std::move(parts));
    }
  }
  return out;
}

std::vector<IntegerPartition> add_box(const IntegerPartition& lambda) {
  std::vector<IntegerPartition> out;
  for (int r = 0; r <= lambda.length(); ++r) {
    if (r == 0 || lambda.part(r - 1) > lambda.part(r)) {
      auto parts = lambda.parts();
      if (r == lambda.length())
        parts.push_back(1);
      else
        ++parts[r];
      out.emplace_back(std::move(parts));
    }
  }
  return out;
}

}  // namespace partalg
