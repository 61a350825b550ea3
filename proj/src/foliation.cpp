#include "fob/foliation.hpp"
