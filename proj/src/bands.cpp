#include "rectors/bands.hpp"

#include <algorithm>
#include <sstream>

#include "rectors/error.hpp"
#include "rectors/text_format.hpp"

namespace rectors {

namespace {

[[noreturn]] void bad(std::size_t line, const std::string& why) {
  throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + why, {std::to_string(line)});
}

bool parse_index(const std::string& s, std::uint32_t& out) {
  if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    return false;
  out = static_cast<std::uint32_t>(std::stoul(s));
  return true;
}

}  // namespace

BandTable parse_band(std::string_view text) {
  BandTable b;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t no = 0;
  bool header = false;
  std::uint32_t rows = 0;
  while (std::getline(in, line)) {
    ++no;
    std::istringstream ls(line.substr(0, line.find('#')));
    std::vector<std::string> t;
    for (std::string w; ls >> w;) t.push_back(w);
    if (t.empty()) continue;
    if (!header) {
      if (t.size() != 2 || t[0] != "band" || !parse_index(t[1], b.n) || b.n == 0)
        bad(no, "expected: band <n> with n >= 1");
      if (b.n > 4096) bad(no, "band is too large");
      header = true;
      continue;
    }
    if (rows == b.n) bad(no, "more than n rows");
    if (t.size() != b.n) bad(no, "expected " + std::to_string(b.n) + " entries");
    for (const auto& w : t) {
      std::uint32_t v;
      if (!parse_index(w, v) || v >= b.n) bad(no, "entry '" + w + "' is not an element");
      b.table.push_back(v);
    }
    ++rows;
  }
  if (!header) bad(no, "missing band header");
  if (rows != b.n) bad(no, "expected " + std::to_string(b.n) + " rows, got " + std::to_string(rows));
  return b;
}

BandTable load_band(const std::string& path) { return parse_band(read_file(path)); }

std::string write_band(const BandTable& b) {
  std::ostringstream out;
  out << "band " << b.n << "\n";
  for (std::uint32_t x = 0; x < b.n; ++x)
    for (std::uint32_t y = 0; y < b.n; ++y) out << b.mul(x, y) << (y + 1 == b.n ? "\n" : " ");
  return out.str();
}

const char* to_string(BandLaw l) {
  switch (l) {
    case BandLaw::None: return "None";
    case BandLaw::NotAssociative: return "NotAssociative";
    case BandLaw::NotIdempotent: return "NotIdempotent";
    case BandLaw::NotRectangular: return "NotRectangular";
  }
  return "Unknown";
}

BandVerdict check_band(const BandTable& t) {
  if (t.n == 0) throw Error(ErrorCode::InvalidArgument, "the empty band is excluded");
  if (t.table.size() != std::size_t(t.n) * t.n) throw Error(ErrorCode::InvalidArgument, "table is not n x n");
  for (auto v : t.table)
    if (v >= t.n) throw Error(ErrorCode::InvalidArgument, "table entry out of range");
  BandVerdict v;
  std::uint32_t n = t.n;
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      for (std::uint32_t z = 0; z < n; ++z)
        if (t.mul(t.mul(x, y), z) != t.mul(x, t.mul(y, z))) {
          v.failure = BandLaw::NotAssociative;
          v.witness = {x, y, z};
          return v;
        }
  for (std::uint32_t x = 0; x < n; ++x)
    if (t.mul(x, x) != x) {
      v.failure = BandLaw::NotIdempotent;
      v.witness = {x};
      return v;
    }
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      for (std::uint32_t z = 0; z < n; ++z)
        if (t.mul(t.mul(x, y), z) != t.mul(x, z)) {
          v.failure = BandLaw::NotRectangular;
          v.witness = {x, y, z};
          return v;
        }
  v.ok = true;
  return v;
}

BandDecomposition decompose_band(const BandTable& b) {
  if (!check_band(b).ok) throw Error(ErrorCode::InvalidArgument, "not a rectangular band");
  const std::uint32_t e = 0;
  BandDecomposition d;
  for (std::uint32_t x = 0; x < b.n; ++x) {
    d.left.push_back(b.mul(x, e));
    d.right.push_back(b.mul(e, x));
  }
  for (auto* v : {&d.left, &d.right}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  d.p = static_cast<std::uint32_t>(d.left.size());
  d.q = static_cast<std::uint32_t>(d.right.size());
  auto index = [](const std::vector<std::uint32_t>& v, std::uint32_t x) {
    return static_cast<std::uint32_t>(std::lower_bound(v.begin(), v.end(), x) - v.begin());
  };
  std::vector<bool> hit(std::size_t(d.p) * d.q, false);
  for (std::uint32_t x = 0; x < b.n; ++x) {
    std::uint32_t i = index(d.left, b.mul(x, e)), j = index(d.right, b.mul(e, x));
    if (b.mul(d.left[i], d.right[j]) != x || hit[i * d.q + j])
      throw Error(ErrorCode::Internal, "decomposition is not a bijection", {std::to_string(x)});
    hit[i * d.q + j] = true;
    d.pairs.emplace_back(i, j);
  }
  if (std::size_t(d.p) * d.q != b.n) throw Error(ErrorCode::Internal, "p * q differs from n");
  for (std::uint32_t x = 0; x < b.n; ++x)
    for (std::uint32_t y = 0; y < b.n; ++y) {
      auto xy = d.pairs[b.mul(x, y)];
      if (xy.first != d.pairs[x].first || xy.second != d.pairs[y].second)
        throw Error(ErrorCode::Internal, "transport check failed", {std::to_string(x), std::to_string(y)});
    }
  return d;
}

BandTable recompose_band(const BandDecomposition& d) {
  BandTable b;
  b.n = static_cast<std::uint32_t>(d.pairs.size());
  std::vector<std::uint32_t> back(std::size_t(d.p) * d.q, 0);
  for (std::uint32_t x = 0; x < b.n; ++x) back[d.pairs[x].first * d.q + d.pairs[x].second] = x;
  for (std::uint32_t x = 0; x < b.n; ++x)
    for (std::uint32_t y = 0; y < b.n; ++y) b.table.push_back(back[d.pairs[x].first * d.q + d.pairs[y].second]);
  return b;
}

BandTable product_band(std::uint32_t p, std::uint32_t q) {
  if (p == 0 || q == 0) throw Error(ErrorCode::InvalidArgument, "factor sizes must be positive");
  BandTable b;
  b.n = p * q;
  for (std::uint32_t x = 0; x < b.n; ++x)
    for (std::uint32_t y = 0; y < b.n; ++y) b.table.push_back((x / q) * q + y % q);
  return b;
}

const char* to_string(AlgebraLaw l) {
  switch (l) {
    case AlgebraLaw::None: return "None";
    case AlgebraLaw::Unit: return "UnitLaw";
    case AlgebraLaw::Multiplication: return "MultiplicationLaw";
  }
  return "Unknown";
}

AlgebraVerdict check_set_algebra(const SetMonadAlgebra& a) {
  if (a.n == 0 || a.q.size() != std::size_t(a.n) * a.n)
    throw Error(ErrorCode::InvalidArgument, "structure map must be defined on all pairs");
  AlgebraVerdict v;
  for (std::uint32_t x = 0; x < a.n; ++x)
    if (a.at(x, x) != x) {
      v.failure = AlgebraLaw::Unit;
      v.witness = {x};
      return v;
    }
  for (std::uint32_t p = 0; p < a.n; ++p)
    for (std::uint32_t b = 0; b < a.n; ++b)
      for (std::uint32_t c = 0; c < a.n; ++c)
        for (std::uint32_t d = 0; d < a.n; ++d)
          if (a.at(a.at(p, b), a.at(c, d)) != a.at(p, d)) {
            v.failure = AlgebraLaw::Multiplication;
            v.witness = {p, b, c, d};
            return v;
          }
  v.ok = true;
  return v;
}

BandAlgebraRoundTrip band_algebra_roundtrip(const BandTable& t) {
  BandAlgebraRoundTrip r;
  r.band = check_band(t);
  r.algebra = SetMonadAlgebra{t.n, t.table};
  r.laws = check_set_algebra(r.algebra);
  r.table = BandTable{r.algebra.n, r.algebra.q};
  r.agree = r.band.ok == r.laws.ok;
  r.identity = r.table == t;
  return r;
}

BandAlgebraRoundTrip band_algebra_roundtrip(const SetMonadAlgebra& a) {
  BandAlgebraRoundTrip r = band_algebra_roundtrip(BandTable{a.n, a.q});
  r.identity = r.identity && r.algebra.q == a.q;
  return r;
}

BandEnumeration enumerate_rectangular_bands(std::uint32_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "the empty band is excluded");
  if (n > 3) throw Error(ErrorCode::SizeTooLarge, "full table scan is limited to n <= 3");
  BandEnumeration out;
  out.n = n;
  out.all_decompose = out.laws_agree = true;
  std::size_t cells = std::size_t(n) * n;
  BandTable t{n, std::vector<std::uint32_t>(cells, 0)};
  while (true) {
    ++out.scanned;
    auto rt = band_algebra_roundtrip(t);
    out.laws_agree = out.laws_agree && rt.agree && rt.identity;
    if (rt.band.ok) {
      out.bands.push_back(t);
      try {
        auto d = decompose_band(t);
        out.all_decompose = out.all_decompose && std::size_t(d.p) * d.q == n && recompose_band(d) == t;
        out.decompositions.push_back(std::move(d));
      } catch (const Error&) {
        out.all_decompose = false;
        out.decompositions.emplace_back();
      }
    }
    std::size_t i = cells;
    while (i > 0 && t.table[i - 1] == n - 1) t.table[--i] = 0;
    if (i == 0) break;
    ++t.table[i - 1];
  }
  return out;
}

}  // namespace rectors
