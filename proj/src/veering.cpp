#include "fob/veering.hpp"
