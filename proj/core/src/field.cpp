#include "sdbetti/field.hpp"

#include <charconv>

#include "sdbetti/error.hpp"

namespace sdbetti {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::gf(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw InvalidArgument("GF(" + std::to_string(p) + "): characteristic must be a prime below 2^31");
  }
  return FieldSpec(Kind::Prime, p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "q" || text == "Q" || text == "rationals") return rationals();
  if (text.size() > 2 && (text.substr(0, 2) == "gf" || text.substr(0, 2) == "GF")) {
    auto digits = text.substr(2);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc{} && ptr == digits.data() + digits.size() && p < (1ull << 31)) {
      return gf(static_cast<std::uint32_t>(p));
    }
  }
  throw InvalidArgument("unknown field '" + std::string(text) + "' (expected q, gf2, gf<p>)");
}

std::string FieldSpec::name() const {
  return is_rationals() ? std::string("q") : "gf" + std::to_string(p_);
}

}  // namespace sdbetti
