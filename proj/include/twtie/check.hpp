#pragma once

#include <optional>
#include <string>
#include <utility>

namespace twtie {

// Outcome of a certificate check: either it holds, or it fails with a
// human-readable witness of the first violation found.
struct Check {
  bool ok = true;
  std::string why;

  static Check pass() { return {true, {}}; }
  static Check fail(std::string witness) { return {false, std::move(witness)}; }
  explicit operator bool() const { return ok; }
};

// A value-producing validation (e.g. the width of a decomposition), or a
// description of the first violated condition.
template <class T>
struct Result {
  std::optional<T> value;
  std::string error;

  static Result success(T v) { return {std::move(v), {}}; }
  static Result failure(std::string e) { return {std::nullopt, std::move(e)}; }
  bool ok() const { return value.has_value(); }
  const T& operator*() const { return *value; }
};

}  // namespace twtie
