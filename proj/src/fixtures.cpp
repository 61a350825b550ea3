#include "fob/fixtures.hpp"
