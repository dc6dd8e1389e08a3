#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace forbcfg {

// One column of an m-rowed matrix over {0..s-1}, s <= 4, packed 2 bits per
// row.  Row 1 sits in the highest used bits, so for a fixed m the integer
// order of packed columns is exactly lexicographic order with row 1 most
// significant.
using Column = std::uint64_t;

inline constexpr int kMaxRows = 32;
inline constexpr std::int64_t kMaxUniverseColumns = std::int64_t{1} << 26;

class SMatrix {
 public:
  SMatrix(int rows, int alphabet);
  SMatrix(int rows, int alphabet, std::vector<Column> columns);

  int rows() const { return rows_; }
  int alphabet() const { return alphabet_; }
  std::int64_t ncols() const { return static_cast<std::int64_t>(cols_.size()); }
  const std::vector<Column>& columns() const { return cols_; }
  Column column(std::int64_t j) const { return cols_[static_cast<size_t>(j)]; }

  // Entry at column j (0-based) and row i (1-based, matching pair notation).
  int entry(std::int64_t j, int row) const {
    return static_cast<int>((cols_[static_cast<size_t>(j)] >>
                             (2 * (rows_ - row))) & 3u);
  }
  static int entry_of(Column c, int rows, int row) {
    return static_cast<int>((c >> (2 * (rows - row))) & 3u);
  }

  // Appends a column, validating every digit against the alphabet.
  void append(Column c);

  Column pack(const std::vector<std::uint8_t>& digits) const;
  std::vector<std::uint8_t> unpack(Column c) const;

  SMatrix canonical() const;
  bool is_canonical() const;

  bool operator==(const SMatrix& other) const = default;

 private:
  int rows_;
  int alphabet_;
  std::vector<Column> cols_;
};

bool is_simple(const SMatrix& a);

// All s^m distinct columns in canonical order.
SMatrix universe(int m, int s);

// Concatenation of p copies of f, canonicalized (duplicates kept).
SMatrix concat_copies(const SMatrix& f, int p);

// A 2-rowed configuration given symbolically or as an explicit matrix.
struct ConfigurationF {
  enum class Kind { Explicit, Fabcd, PK2, PI2, Kk, Ik };

  Kind kind = Kind::Fabcd;
  int a = 0, b = 0, c = 0, d = 0;       // Fabcd
  int p = 0;                            // PK2 / PI2
  int k = 0;                            // Kk / Ik
  std::optional<SMatrix> pattern;       // Explicit

  static ConfigurationF fabcd(int a, int b, int c, int d);
  static ConfigurationF p_k2(int p);
  static ConfigurationF p_i2(int p);
  static ConfigurationF k_k(int k);
  static ConfigurationF i_k(int k);
  static ConfigurationF explicit_matrix(SMatrix m);

  // (a,b,c,d) thresholds when the configuration is 2-rowed 0/1.
  std::optional<std::array<int, 4>> as_2rowed() const;

  std::string describe() const;
};

SMatrix expand(const ConfigurationF& f);

// Text format: optional leading '#' comment lines, a "m n s" header, then m
// lines of n digits; column j is the vertical slice at position j.
SMatrix read_matrix(std::istream& in);
SMatrix read_matrix(std::string_view text);
// Emits canonical column order, no comments, trailing newline.
std::string write_matrix(const SMatrix& a);

}  // namespace forbcfg
