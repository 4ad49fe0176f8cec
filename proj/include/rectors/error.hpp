#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace rectors {

using ObjId = std::uint32_t;
using MorId = std::uint32_t;
inline constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

enum class ErrorCode {
  Parse,
  DuplicateId,
  UnknownId,
  WrongHomSet,
  MissingComposite,
  NonAssociative,
  IdentityLawViolation,
  SizeLimitExceeded,
  EmptyFactorList,
  FactorMismatch,
  NotComposable,
  InvalidArgument,
  Unsupported,
  NotAnEquivalence,
  NotRectangular,
  NotBiQuasiPointed,
  NotPointed,
  SizeTooLarge,
  InternalNonUnique,
  NonEpiInE,
  MissingIso,
  MissingZeroTargetMap,
  IncoherentAlgebra,
  RoundTripMismatch,
  CoherenceFailure,
  Io,
  Internal,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::vector<std::string> witness = {})
      : std::runtime_error(message), code_(code), witness_(std::move(witness)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::string>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<std::string> witness_;
};

struct Limits {
  std::size_t max_objects = 64;
  std::size_t max_morphisms = 4096;
};

// Membership mask over 0..universe-1; members() is ascending.
class IdSet {
 public:
  IdSet() = default;
  explicit IdSet(std::size_t universe) : mask_(universe, false) {}

  static IdSet of(std::size_t universe, const std::vector<std::uint32_t>& ids) {
    IdSet s(universe);
    for (auto i : ids) s.insert(i);
    return s;
  }
  static IdSet all(std::size_t universe) {
    IdSet s;
    s.mask_.assign(universe, true);
    return s;
  }

  std::size_t universe() const { return mask_.size(); }
  bool contains(std::uint32_t i) const { return i < mask_.size() && mask_[i]; }
  void insert(std::uint32_t i) {
    if (i >= mask_.size()) throw Error(ErrorCode::InvalidArgument, "id out of range");
    mask_[i] = true;
  }
  std::size_t size() const {
    std::size_t n = 0;
    for (bool b : mask_) n += b;
    return n;
  }
  bool empty() const { return size() == 0; }
  std::vector<std::uint32_t> members() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < mask_.size(); ++i)
      if (mask_[i]) out.push_back(i);
    return out;
  }
  IdSet intersect(const IdSet& other) const {
    IdSet s(universe());
    for (std::uint32_t i = 0; i < mask_.size(); ++i)
      if (mask_[i] && other.contains(i)) s.mask_[i] = true;
    return s;
  }
  bool operator==(const IdSet&) const = default;

 private:
  std::vector<bool> mask_;
};

}  // namespace rectors
