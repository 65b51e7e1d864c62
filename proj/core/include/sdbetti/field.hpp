#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace sdbetti {

/// Coefficient field: the rationals or GF(p) for a prime p < 2^31.
class FieldSpec {
 public:
  enum class Kind { Rationals, Prime };

  static FieldSpec rationals() noexcept { return FieldSpec(Kind::Rationals, 0); }
  /// Throws InvalidArgument unless p is a prime below 2^31.
  static FieldSpec gf(std::uint32_t p);
  /// "q", "Q", "gf2", "gf<p>".
  static FieldSpec parse(std::string_view text);

  FieldSpec() noexcept : FieldSpec(Kind::Rationals, 0) {}

  [[nodiscard]] Kind kind() const noexcept { return kind_; }
  [[nodiscard]] bool is_rationals() const noexcept { return kind_ == Kind::Rationals; }
  /// The characteristic; 0 for the rationals.
  [[nodiscard]] std::uint32_t characteristic() const noexcept { return p_; }
  /// "q" or "gf<p>".
  [[nodiscard]] std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind kind, std::uint32_t p) noexcept : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

}  // namespace sdbetti
