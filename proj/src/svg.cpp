#include "fob/svg.hpp"
