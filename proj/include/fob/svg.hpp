#pragma once

#include <string>

#include "fob/openbook.hpp"

namespace fob {

constexpr const char* kSvgGeneratorVersion = "fobtool-svg/1";

std::string render_page_svg(const Page& page);
std::string render_boundary_svg(const FoliatedBoundary& f);

}  // namespace fob
