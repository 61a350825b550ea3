#include "fob/io.hpp"
