#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

#include "ncg/classical.hpp"
#include "ncg/errors.hpp"
#include "ncg/matrix.hpp"

namespace ncg::mat {

namespace {

bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

std::int64_t parse_int(const std::string& tok) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(tok, &used);
  } catch (const std::exception&) {
    throw ParseError("bad integer '" + tok + "'");
  }
  if (used != tok.size()) throw ParseError("bad integer '" + tok + "'");
  return v;
}

Code parse_entry(const ff::Field& f, const std::string& tok) {
  const auto p = static_cast<std::int64_t>(f.p());
  auto reduce = [&](std::int64_t v) { return static_cast<Code>(((v % p) + p) % p); };
  if (tok.front() != '(') return reduce(parse_int(tok));
  if (tok.back() != ')') throw ParseError("unterminated tuple '" + tok + "'");
  std::vector<Code> digits;
  std::stringstream ss(tok.substr(1, tok.size() - 2));
  std::string part;
  while (std::getline(ss, part, ',')) {
    auto b = part.find_first_not_of(" \t");
    auto e = part.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError("empty tuple component in '" + tok + "'");
    digits.push_back(reduce(parse_int(part.substr(b, e - b + 1))));
  }
  if (digits.size() > f.k()) throw ParseError("tuple '" + tok + "' is longer than the field degree");
  digits.resize(f.k(), 0);
  return f.from_digits(digits);
}

std::vector<std::string> split_entries(const std::string& line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    if (line[i] == '(') {
      j = line.find(')', i);
      if (j == std::string::npos) throw ParseError("unterminated tuple in row '" + line + "'");
      ++j;
    } else {
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    }
    out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Matrix read_matrix(std::istream& in) {
  std::string line;
  if (!next_content_line(in, line)) throw ParseError("missing matrix header");
  std::stringstream hs(line);
  std::string ns, qs, flag, extra;
  hs >> ns >> qs >> flag >> extra;
  if (qs.empty() || !extra.empty() || (!flag.empty() && flag != "q2"))
    throw ParseError("matrix header must be 'n q' or 'n q q2'");
  const auto n = parse_int(ns);
  const auto q = parse_int(qs);
  if (n < 1 || n > 64) throw ParseError("matrix dimension out of range");
  FieldPtr f;
  try {
    f = field_of_order(static_cast<std::uint64_t>(flag.empty() ? q : q * q));
  } catch (const CapExceeded&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad field order: ") + e.what());
  }
  Matrix m(f, static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    if (!next_content_line(in, line)) throw ParseError("matrix has fewer than n rows");
    auto toks = split_entries(line);
    if (static_cast<std::int64_t>(toks.size()) != n) throw ParseError("row " + std::to_string(i + 1) + " does not have n entries");
    for (std::int64_t j = 0; j < n; ++j)
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = parse_entry(*f, toks[static_cast<std::size_t>(j)]);
  }
  return m;
}

void write_matrix(std::ostream& out, const Matrix& a, bool over_q_squared) {
  const ff::Field& F = *a.field();
  std::uint64_t q = F.q();
  if (over_q_squared) {
    if (F.k() % 2 != 0) throw std::invalid_argument("field is not of square order");
    q = 1;
    for (unsigned i = 0; i < F.k() / 2; ++i) q *= F.p();
  }
  out << a.n() << ' ' << q << (over_q_squared ? " q2" : "") << '\n';
  for (std::size_t i = 0; i < a.n(); ++i) {
    for (std::size_t j = 0; j < a.n(); ++j) {
      if (j) out << ' ';
      if (F.k() == 1) {
        out << a(i, j);
        continue;
      }
      auto d = F.digits(a(i, j));
      out << '(';
      for (std::size_t t = 0; t < d.size(); ++t) out << (t ? "," : "") << d[t];
      out << ')';
    }
    out << '\n';
  }
}

}  // namespace ncg::mat
