#include "sdsirs/cycle_type.hpp"

#include <sstream>

#include "sdsirs/errors.hpp"

namespace sdsirs {

namespace {

std::uint64_t checked_degree(const CycleType::Parts& parts) {
  std::uint64_t degree = 0;
  for (const auto& [length, mult] : parts) {
    require(length >= 1, Errc::invalid_argument, "cycle length must be >= 1");
    const std::uint64_t add = length * mult;
    require(mult == 0 || add / mult == length, Errc::overflow,
            "cycle type degree overflows");
    require(degree + add >= degree, Errc::overflow, "cycle type degree overflows");
    degree += add;
  }
  return degree;
}

}  // namespace

CycleType::CycleType(Parts parts) : parts_(std::move(parts)) {
  std::erase_if(parts_, [](const auto& e) { return e.second == 0; });
  degree_ = checked_degree(parts_);
  require(degree_ >= 1, Errc::invalid_argument, "cycle type must have degree >= 1");
}

CycleType::CycleType(
    std::initializer_list<std::pair<std::uint64_t, std::uint64_t>> parts) {
  for (const auto& [length, mult] : parts) {
    require(parts_.emplace(length, mult).second, Errc::invalid_argument,
            "duplicate cycle length");
  }
  std::erase_if(parts_, [](const auto& e) { return e.second == 0; });
  degree_ = checked_degree(parts_);
  require(degree_ >= 1, Errc::invalid_argument, "cycle type must have degree >= 1");
}

CycleType CycleType::identity(std::uint64_t degree) {
  require(degree >= 1, Errc::invalid_argument, "identity needs degree >= 1");
  return CycleType{{1, degree}};
}

std::uint64_t CycleType::multiplicity(std::uint64_t length) const noexcept {
  const auto it = parts_.find(length);
  return it == parts_.end() ? 0 : it->second;
}

std::uint64_t CycleType::total_cycles() const noexcept {
  std::uint64_t k = 0;
  for (const auto& [length, mult] : parts_) k += mult;
  return k;
}

std::uint64_t CycleType::nontrivial_cycles() const noexcept {
  return total_cycles() - fixed_points();
}

std::uint64_t CycleType::distinct_lengths() const noexcept {
  return parts_.size();
}

bool CycleType::is_identity() const noexcept {
  return degree_ >= 1 && fixed_points() == degree_;
}

BigInt class_size(const CycleType& t) {
  require(t.degree() >= 1, Errc::invalid_argument, "empty cycle type");
  BigInt denom = 1;
  for (const auto& [length, mult] : t.parts()) {
    denom *= factorial(mult);
    denom *= pow(BigInt(length), static_cast<unsigned>(mult));
  }
  return factorial(t.degree()) / denom;
}

int sign(const CycleType& t) {
  std::uint64_t transpositions = 0;
  for (const auto& [length, mult] : t.parts())
    transpositions += (length - 1) * mult;
  return (transpositions % 2 == 0) ? +1 : -1;
}

CycleType diagonal_embed(const CycleType& t, std::uint64_t ell) {
  require(ell >= 1, Errc::invalid_argument, "diagonal embedding needs ell >= 1");
  require(t.degree() >= 1, Errc::invalid_argument, "empty cycle type");
  CycleType::Parts parts;
  for (const auto& [length, mult] : t.parts()) {
    require(mult <= UINT64_MAX / ell, Errc::overflow, "multiplicity overflows");
    parts.emplace(length, mult * ell);
  }
  return CycleType(std::move(parts));
}

CycleType parse_cycle_type(const std::string& text) {
  CycleType::Parts parts;
  std::istringstream in(text);
  std::string factor;
  while (in >> factor) {
    const auto caret = factor.find('^');
    require(caret != std::string::npos && caret > 0 && caret + 1 < factor.size(),
            Errc::parse_error, "expected length^multiplicity, got '" + factor + "'");
    std::uint64_t length = 0, mult = 0;
    try {
      std::size_t used = 0;
      length = std::stoull(factor.substr(0, caret), &used);
      require(used == caret, Errc::parse_error, "bad length in '" + factor + "'");
      mult = std::stoull(factor.substr(caret + 1), &used);
      require(used == factor.size() - caret - 1, Errc::parse_error,
              "bad multiplicity in '" + factor + "'");
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      fail(Errc::parse_error, "not a cycle-type factor: '" + factor + "'");
    }
    require(length >= 1, Errc::parse_error, "cycle length must be >= 1");
    require(parts.find(length) == parts.end(), Errc::parse_error,
            "length listed twice: '" + factor + "'");
    if (mult > 0) parts.emplace(length, mult);
  }
  require(!parts.empty(), Errc::parse_error, "empty cycle type: '" + text + "'");
  return CycleType(std::move(parts));
}

std::string to_string(const CycleType& t) {
  std::string out;
  for (const auto& [length, mult] : t.parts()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(length) + "^" + std::to_string(mult);
  }
  return out;
}

}  // namespace sdsirs
