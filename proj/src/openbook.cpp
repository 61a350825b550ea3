#include "fob/openbook.hpp"
