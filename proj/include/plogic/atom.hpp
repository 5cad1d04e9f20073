#pragma once

#include <compare>
#include <set>
#include <string>
#include <string_view>

namespace plogic {

// A subject/object pronoun class such as she/her. The set of atoms is open:
// any pair of ASCII-letter tokens is admissible.
class PronounAtom {
public:
  // Throws std::invalid_argument unless both tokens are nonempty ASCII letters.
  PronounAtom(std::string_view subject, std::string_view object);

  // Parses "subject/object". Throws std::invalid_argument on malformed keys.
  static PronounAtom fromKey(std::string_view key);

  const std::string& subject() const noexcept { return subject_; }
  const std::string& object() const noexcept { return object_; }
  std::string key() const { return subject_ + "/" + object_; }

  friend bool operator==(const PronounAtom&, const PronounAtom&) = default;
  friend std::strong_ordering operator<=>(const PronounAtom&, const PronounAtom&) = default;

private:
  std::string subject_;
  std::string object_;
};

using AtomSet = std::set<PronounAtom>;

bool isPronounToken(std::string_view token) noexcept;

} // namespace plogic
