#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

namespace taufact {

enum class Outcome { Holds, Fails, UnknownAtCap };

std::string to_string(Outcome o);

/// Three-valued verdict. `witness` is null unless outcome is Fails (or the
/// check chose to attach supporting data).
struct Verdict {
  Outcome outcome = Outcome::UnknownAtCap;
  std::optional<std::int64_t> bound;
  int cap = 0;
  bool scoped = false;
  nlohmann::json witness;
  std::string note;

  bool holds() const { return outcome == Outcome::Holds; }
  bool fails() const { return outcome == Outcome::Fails; }
  bool decided() const { return outcome != Outcome::UnknownAtCap; }
};

nlohmann::json to_json(const Verdict& v);

/// Three-valued boolean used by classification flags.
enum class Tri { False, True, Unknown };

inline Tri tri(bool b) { return b ? Tri::True : Tri::False; }
std::string to_string(Tri t);

}  // namespace taufact
