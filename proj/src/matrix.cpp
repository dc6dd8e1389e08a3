#include "forbcfg/matrix.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>

#include "forbcfg/errors.hpp"

namespace forbcfg {

namespace {

void validate_shape(int rows, int alphabet) {
  if (rows < 1 || rows > kMaxRows)
    throw DomainError("row count must be in [1, " + std::to_string(kMaxRows) +
                      "], got " + std::to_string(rows));
  if (alphabet < 2 || alphabet > 4)
    throw DomainError("alphabet size must be in [2, 4], got " +
                      std::to_string(alphabet));
}

}  // namespace

SMatrix::SMatrix(int rows, int alphabet) : rows_(rows), alphabet_(alphabet) {
  validate_shape(rows, alphabet);
}

SMatrix::SMatrix(int rows, int alphabet, std::vector<Column> columns)
    : rows_(rows), alphabet_(alphabet) {
  validate_shape(rows, alphabet);
  cols_.reserve(columns.size());
  for (Column c : columns) append(c);
}

void SMatrix::append(Column c) {
  if (rows_ < kMaxRows && (c >> (2 * rows_)) != 0)
    throw DomainError("column has bits beyond row " + std::to_string(rows_));
  for (int i = 1; i <= rows_; ++i) {
    int digit = entry_of(c, rows_, i);
    if (digit >= alphabet_)
      throw DomainError("digit " + std::to_string(digit) + " at row " +
                        std::to_string(i) + " exceeds alphabet " +
                        std::to_string(alphabet_));
  }
  cols_.push_back(c);
}

Column SMatrix::pack(const std::vector<std::uint8_t>& digits) const {
  if (static_cast<int>(digits.size()) != rows_)
    throw DomainError("expected " + std::to_string(rows_) + " digits");
  Column c = 0;
  for (int i = 1; i <= rows_; ++i) {
    if (digits[static_cast<size_t>(i - 1)] >= alphabet_)
      throw DomainError("digit exceeds alphabet at row " + std::to_string(i));
    c |= static_cast<Column>(digits[static_cast<size_t>(i - 1)])
         << (2 * (rows_ - i));
  }
  return c;
}

std::vector<std::uint8_t> SMatrix::unpack(Column c) const {
  std::vector<std::uint8_t> digits(static_cast<size_t>(rows_));
  for (int i = 1; i <= rows_; ++i)
    digits[static_cast<size_t>(i - 1)] =
        static_cast<std::uint8_t>(entry_of(c, rows_, i));
  return digits;
}

SMatrix SMatrix::canonical() const {
  SMatrix out = *this;
  std::sort(out.cols_.begin(), out.cols_.end());
  return out;
}

bool SMatrix::is_canonical() const {
  return std::is_sorted(cols_.begin(), cols_.end());
}

bool is_simple(const SMatrix& a) {
  std::vector<Column> cols = a.columns();
  std::sort(cols.begin(), cols.end());
  return std::adjacent_find(cols.begin(), cols.end()) == cols.end();
}

SMatrix universe(int m, int s) {
  validate_shape(m, s);
  std::int64_t count = 1;
  for (int i = 0; i < m; ++i) {
    count *= s;
    if (count > kMaxUniverseColumns)
      throw SizeError("universe " + std::to_string(s) + "^" +
                      std::to_string(m) + " exceeds the column limit");
  }
  std::vector<Column> cols;
  cols.reserve(static_cast<size_t>(count));
  std::vector<std::uint8_t> digits(static_cast<size_t>(m), 0);
  SMatrix out(m, s);
  for (;;) {
    cols.push_back(out.pack(digits));
    int i = m - 1;
    while (i >= 0 && digits[static_cast<size_t>(i)] == s - 1) {
      digits[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++digits[static_cast<size_t>(i)];
  }
  return SMatrix(m, s, std::move(cols));
}

SMatrix concat_copies(const SMatrix& f, int p) {
  if (p < 1) throw DomainError("copy count must be positive");
  std::vector<Column> cols;
  cols.reserve(static_cast<size_t>(f.ncols()) * static_cast<size_t>(p));
  for (int t = 0; t < p; ++t)
    cols.insert(cols.end(), f.columns().begin(), f.columns().end());
  return SMatrix(f.rows(), f.alphabet(), std::move(cols)).canonical();
}

ConfigurationF ConfigurationF::fabcd(int a, int b, int c, int d) {
  if (a < 0 || b < 0 || c < 0 || d < 0)
    throw DomainError("F(a,b,c,d) needs non-negative multiplicities");
  ConfigurationF f;
  f.kind = Kind::Fabcd;
  f.a = a;
  f.b = b;
  f.c = c;
  f.d = d;
  return f;
}

ConfigurationF ConfigurationF::p_k2(int p) {
  if (p < 1) throw DomainError("p must be positive");
  ConfigurationF f;
  f.kind = Kind::PK2;
  f.p = p;
  return f;
}

ConfigurationF ConfigurationF::p_i2(int p) {
  if (p < 1) throw DomainError("p must be positive");
  ConfigurationF f;
  f.kind = Kind::PI2;
  f.p = p;
  return f;
}

ConfigurationF ConfigurationF::k_k(int k) {
  if (k < 1) throw DomainError("k must be positive");
  ConfigurationF f;
  f.kind = Kind::Kk;
  f.k = k;
  return f;
}

ConfigurationF ConfigurationF::i_k(int k) {
  if (k < 1) throw DomainError("k must be positive");
  ConfigurationF f;
  f.kind = Kind::Ik;
  f.k = k;
  return f;
}

ConfigurationF ConfigurationF::explicit_matrix(SMatrix m) {
  ConfigurationF f;
  f.kind = Kind::Explicit;
  f.pattern = std::move(m);
  return f;
}

std::optional<std::array<int, 4>> ConfigurationF::as_2rowed() const {
  switch (kind) {
    case Kind::Fabcd:
      return std::array<int, 4>{a, b, c, d};
    case Kind::PK2:
      return std::array<int, 4>{p, p, p, p};
    case Kind::PI2:
      return std::array<int, 4>{0, p, p, 0};
    case Kind::Kk:
      if (k == 2) return std::array<int, 4>{1, 1, 1, 1};
      return std::nullopt;
    case Kind::Ik:
      if (k == 2) return std::array<int, 4>{0, 1, 1, 0};
      return std::nullopt;
    case Kind::Explicit: {
      const SMatrix& m = *pattern;
      if (m.rows() != 2) return std::nullopt;
      std::array<int, 4> counts{0, 0, 0, 0};
      for (std::int64_t j = 0; j < m.ncols(); ++j) {
        int x = m.entry(j, 1), y = m.entry(j, 2);
        if (x > 1 || y > 1) return std::nullopt;
        ++counts[static_cast<size_t>(x * 2 + y)];
      }
      // counts is indexed by pattern code (00,01,10,11); F orders (a,b,c,d)
      // as (00,10,01,11).
      return std::array<int, 4>{counts[0], counts[2], counts[1], counts[3]};
    }
  }
  return std::nullopt;
}

std::string ConfigurationF::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Fabcd:
      os << "F(" << a << "," << b << "," << c << "," << d << ")";
      break;
    case Kind::PK2:
      os << p << "*K2";
      break;
    case Kind::PI2:
      os << p << "*I2";
      break;
    case Kind::Kk:
      os << "K" << k;
      break;
    case Kind::Ik:
      os << "I" << k;
      break;
    case Kind::Explicit:
      os << "explicit(" << pattern->rows() << "x" << pattern->ncols() << ")";
      break;
  }
  return os.str();
}

namespace {

SMatrix expand_fabcd(int a, int b, int c, int d) {
  SMatrix f(2, 2);
  std::vector<Column> cols;
  auto emit = [&](int x, int y, int times) {
    Column col = (static_cast<Column>(x) << 2) | static_cast<Column>(y);
    for (int t = 0; t < times; ++t) cols.push_back(col);
  };
  emit(0, 0, a);
  emit(1, 0, b);
  emit(0, 1, c);
  emit(1, 1, d);
  return SMatrix(2, 2, std::move(cols)).canonical();
}

}  // namespace

SMatrix expand(const ConfigurationF& f) {
  switch (f.kind) {
    case ConfigurationF::Kind::Explicit:
      return *f.pattern;
    case ConfigurationF::Kind::Fabcd:
      return expand_fabcd(f.a, f.b, f.c, f.d);
    case ConfigurationF::Kind::PK2:
      return expand_fabcd(f.p, f.p, f.p, f.p);
    case ConfigurationF::Kind::PI2:
      return expand_fabcd(0, f.p, f.p, 0);
    case ConfigurationF::Kind::Kk:
      return universe(f.k, 2);
    case ConfigurationF::Kind::Ik: {
      SMatrix id(f.k, 2);
      std::vector<Column> cols;
      for (int i = 1; i <= f.k; ++i) {
        std::vector<std::uint8_t> digits(static_cast<size_t>(f.k), 0);
        digits[static_cast<size_t>(i - 1)] = 1;
        cols.push_back(id.pack(digits));
      }
      return SMatrix(f.k, 2, std::move(cols)).canonical();
    }
  }
  throw DomainError("unknown configuration kind");
}

SMatrix read_matrix(std::istream& in) {
  std::string line;
  int lineno = 0;
  // Header: first non-comment line is "m n s".
  int m = 0, s = 0;
  std::int64_t n = 0;
  for (;;) {
    if (!std::getline(in, line))
      throw ParseError("missing header line", lineno + 1, 1);
    ++lineno;
    if (!line.empty() && line[0] == '#') continue;
    std::istringstream hdr(line);
    if (!(hdr >> m >> n >> s))
      throw ParseError("header must be \"m n s\"", lineno, 1);
    std::string trailing;
    if (hdr >> trailing)
      throw ParseError("unexpected token after header", lineno, 1);
    break;
  }
  if (m < 1 || m > kMaxRows)
    throw ParseError("row count out of range", lineno, 1);
  if (s < 2 || s > 4) throw ParseError("alphabet out of range", lineno, 1);
  if (n < 0) throw ParseError("negative column count", lineno, 1);

  std::vector<std::vector<std::uint8_t>> rows_digits;
  rows_digits.reserve(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    if (!std::getline(in, line))
      throw ParseError("expected " + std::to_string(m) + " matrix rows",
                       lineno + 1, 1);
    ++lineno;
    if (static_cast<std::int64_t>(line.size()) != n)
      throw ParseError("row has " + std::to_string(line.size()) +
                           " entries, expected " + std::to_string(n),
                       lineno, static_cast<int>(line.size()) + 1);
    std::vector<std::uint8_t> digits;
    digits.reserve(static_cast<size_t>(n));
    for (std::int64_t j = 0; j < n; ++j) {
      char ch = line[static_cast<size_t>(j)];
      if (ch < '0' || ch > '9')
        throw ParseError("non-digit entry", lineno, static_cast<int>(j) + 1);
      int digit = ch - '0';
      if (digit >= s)
        throw ParseError("digit " + std::to_string(digit) +
                             " out of alphabet {0.." + std::to_string(s - 1) +
                             "}",
                         lineno, static_cast<int>(j) + 1);
      digits.push_back(static_cast<std::uint8_t>(digit));
    }
    rows_digits.push_back(std::move(digits));
  }

  SMatrix out(m, s);
  std::vector<std::uint8_t> col(static_cast<size_t>(m));
  for (std::int64_t j = 0; j < n; ++j) {
    for (int i = 0; i < m; ++i)
      col[static_cast<size_t>(i)] =
          rows_digits[static_cast<size_t>(i)][static_cast<size_t>(j)];
    out.append(out.pack(col));
  }
  return out;
}

SMatrix read_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_matrix(in);
}

std::string write_matrix(const SMatrix& a) {
  SMatrix c = a.canonical();
  std::ostringstream os;
  os << c.rows() << " " << c.ncols() << " " << c.alphabet() << "\n";
  for (int i = 1; i <= c.rows(); ++i) {
    for (std::int64_t j = 0; j < c.ncols(); ++j)
      os << static_cast<char>('0' + c.entry(j, i));
    os << "\n";
  }
  return os.str();
}

}  // namespace forbcfg
