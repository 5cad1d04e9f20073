#include "plogic/atom.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace plogic {

namespace {

std::string lowered(std::string_view token) {
  std::string out(token);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

} // namespace

bool isPronounToken(std::string_view token) noexcept {
  return !token.empty() && std::all_of(token.begin(), token.end(), [](unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
  });
}

PronounAtom::PronounAtom(std::string_view subject, std::string_view object)
    : subject_(lowered(subject)), object_(lowered(object)) {
  if (!isPronounToken(subject_) || !isPronounToken(object_))
    throw std::invalid_argument("pronoun atom tokens must be nonempty ASCII letters: '" +
                                std::string(subject) + "/" + std::string(object) + "'");
}

PronounAtom PronounAtom::fromKey(std::string_view key) {
  auto slash = key.find('/');
  if (slash == std::string_view::npos)
    throw std::invalid_argument("pronoun atom must have the form subject/object: '" +
                                std::string(key) + "'");
  return PronounAtom(key.substr(0, slash), key.substr(slash + 1));
}

} // namespace plogic
