#ifndef SPECMON_VERDICT_HPP_
#define SPECMON_VERDICT_HPP_

#include <string_view>

namespace specmon {

  enum class Verdict { yes, no, unknown };

  constexpr std::string_view to_string(Verdict v) noexcept {
    switch (v) {
      case Verdict::yes: return "yes";
      case Verdict::no: return "no";
      default: return "unknown";
    }
  }

}  // namespace specmon

#endif  // SPECMON_VERDICT_HPP_
