#pragma once

#include "sl2/io.hpp"

#include <string>

namespace sl2 {

std::string render_ascii(const io::Payload& p);
std::string render_svg(const io::Payload& p);

}  // namespace sl2
