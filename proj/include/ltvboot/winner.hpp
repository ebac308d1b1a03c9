#pragma once

#include <string>
#include <string_view>

#include "ltvboot/errors.hpp"

namespace ltvboot {

enum class Winner { Control, Test };

inline const char* to_string(Winner w) {
    return w == Winner::Test ? "Test" : "Control";
}

inline Winner winner_from_string(std::string_view s) {
    if (s == "Control") return Winner::Control;
    if (s == "Test") return Winner::Test;
    throw Error(ErrorCode::Parse, "unknown winner label '" + std::string(s) + "'");
}

}  // namespace ltvboot
