#pragma once

#include <string>

namespace quatrec {

enum class Tristate { Yes, No, Unknown };

inline std::string to_string(Tristate t) {
  switch (t) {
    case Tristate::Yes: return "yes";
    case Tristate::No: return "no";
    default: return "unknown";
  }
}

}  // namespace quatrec
