#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rectors {

// Carrier {0..n-1}; table[x * n + y] = x . y.
struct BandTable {
  std::uint32_t n = 0;
  std::vector<std::uint32_t> table;
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const { return table[x * n + y]; }
  bool operator==(const BandTable& o) const { return n == o.n && table == o.table; }
};

// Throws Error(Parse) on malformed text; first line `band <n>`, then n rows of n indices.
BandTable parse_band(std::string_view text);
BandTable load_band(const std::string& path);
std::string write_band(const BandTable& b);

enum class BandLaw { None, NotAssociative, NotIdempotent, NotRectangular };
const char* to_string(BandLaw l);

struct BandVerdict {
  bool ok = false;
  BandLaw failure = BandLaw::None;
  std::vector<std::uint32_t> witness;
};

// Throws InvalidArgument for n = 0, a wrongly sized table or an out-of-range entry.
BandVerdict check_band(const BandTable& t);

struct BandDecomposition {
  std::uint32_t p = 0;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> left;   // representatives x.e, ascending
  std::vector<std::uint32_t> right;  // representatives e.x, ascending
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;  // x |-> (i, j)
};

// Base point e = 0. Throws Error(Internal) if the transport check fails.
BandDecomposition decompose_band(const BandTable& b);
// (i, j) . (k, l) = (i, l) relabelled through the decomposition.
BandTable recompose_band(const BandDecomposition& d);
BandTable product_band(std::uint32_t p, std::uint32_t q);

struct SetMonadAlgebra {
  std::uint32_t n = 0;
  std::vector<std::uint32_t> q;  // q[a * n + b]
  std::uint32_t at(std::uint32_t a, std::uint32_t b) const { return q[a * n + b]; }
};

enum class AlgebraLaw { None, Unit, Multiplication };
const char* to_string(AlgebraLaw l);

struct AlgebraVerdict {
  bool ok = false;
  AlgebraLaw failure = AlgebraLaw::None;
  std::vector<std::uint32_t> witness;
};

AlgebraVerdict check_set_algebra(const SetMonadAlgebra& a);

struct BandAlgebraRoundTrip {
  SetMonadAlgebra algebra;
  BandTable table;
  BandVerdict band;
  AlgebraVerdict laws;
  bool agree = false;     // band laws <=> algebra laws
  bool identity = false;  // table -> algebra -> table is the identity
};

BandAlgebraRoundTrip band_algebra_roundtrip(const BandTable& t);
BandAlgebraRoundTrip band_algebra_roundtrip(const SetMonadAlgebra& a);

struct BandEnumeration {
  std::uint32_t n = 0;
  std::uint64_t scanned = 0;
  std::vector<BandTable> bands;
  std::vector<BandDecomposition> decompositions;
  bool all_decompose = false;
  bool laws_agree = false;
};

// Full n^(n^2) scan; throws SizeTooLarge for n > 3 and InvalidArgument for n = 0.
BandEnumeration enumerate_rectangular_bands(std::uint32_t n);

}  // namespace rectors
