#include "aarm/zoo.hpp"
#include "aarm/logstar.hpp"
// placeholder
