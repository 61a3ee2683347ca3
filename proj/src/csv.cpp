#include "liebrst/csv.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace liebrst {

namespace {

std::string trim(std::string_view s)
{
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_fields(const std::string& line)
{
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(trim(field));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::string format_double(double x, int digits)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x == 0.0 ? 0.0 : x);
  return buf;
}

double parse_double(const std::string& s)
{
  if (s.empty()) throw std::invalid_argument("empty number");
  std::size_t used = 0;
  double x = std::stod(s, &used);
  if (used != s.size()) throw std::invalid_argument("malformed number '" + s + "'");
  return x;
}

template <typename Parse>
auto read_blocks(std::istream& is, Parse parse)
{
  using Value = decltype(parse(std::string()));
  std::vector<std::vector<std::vector<Value>>> blocks;
  std::vector<std::vector<Value>> current;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') {
      if (!current.empty()) blocks.push_back(std::move(current));
      current.clear();
      continue;
    }
    std::vector<Value> row;
    for (const auto& f : split_fields(t)) {
      try {
        row.push_back(parse(f));
      } catch (const std::exception& e) {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
      }
    }
    if (!current.empty() && row.size() != current.front().size())
      throw std::invalid_argument("line " + std::to_string(lineno) + ": ragged row");
    current.push_back(std::move(row));
  }
  if (!current.empty()) blocks.push_back(std::move(current));
  return blocks;
}

}  // namespace

void write_csv(std::ostream& os, const RationalMatrix& m)
{
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << to_string(m(i, j));
    os << '\n';
  }
}

void write_csv(std::ostream& os, const ComplexMatrix& m)
{
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) os << (j ? "," : "") << format_complex(m(i, j));
    os << '\n';
  }
}

std::string format_complex(Complex z, int digits)
{
  std::string im = format_double(std::abs(z.imag()), digits);
  return format_double(z.real(), digits) + (std::signbit(z.imag()) && z.imag() != 0.0 ? "-" : "+") + im + "i";
}

Complex parse_complex(std::string_view text)
{
  std::string s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty complex literal");
  if (s.back() != 'i') return {parse_double(s), 0.0};
  s.pop_back();
  // Split at the last sign that is not a leading sign or part of an exponent.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;)
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  auto imag = [](const std::string& part) {
    if (part.empty() || part == "+") return 1.0;
    if (part == "-") return -1.0;
    return parse_double(part);
  };
  if (split == std::string::npos) return {0.0, imag(s)};
  return {parse_double(s.substr(0, split)), imag(s.substr(split))};
}

std::vector<RationalMatrix> read_rational_csv_blocks(std::istream& is)
{
  auto blocks = read_blocks(is, [](const std::string& f) { return parse_rational(f); });
  std::vector<RationalMatrix> out;
  for (const auto& b : blocks) out.push_back(RationalMatrix::from_rows(b));
  return out;
}

RationalMatrix read_rational_csv(std::istream& is)
{
  auto blocks = read_rational_csv_blocks(is);
  if (blocks.size() != 1) throw std::invalid_argument("expected exactly one matrix block");
  return blocks.front();
}

ComplexMatrix read_complex_csv(std::istream& is)
{
  auto blocks = read_blocks(is, [](const std::string& f) { return parse_complex(f); });
  if (blocks.size() != 1) throw std::invalid_argument("expected exactly one matrix block");
  const auto& b = blocks.front();
  ComplexMatrix m(b.size(), b.front().size());
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b[i].size(); ++j) m(i, j) = b[i][j];
  return m;
}

}  // namespace liebrst
