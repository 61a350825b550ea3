#pragma once

#include "fob/openbook.hpp"

namespace fob {

// The four worked examples shipped with the tool.
FoliatedOpenBook solid_torus_fixture();
FoliatedOpenBook overtwisted_ball_fixture();
FoliatedOpenBook annulus_fixture();
FoliatedOpenBook minimal_overtwisted_fixture();

std::vector<FoliatedOpenBook> all_fixtures();

}  // namespace fob
