#include <doctest.h>
#include "helpers.hpp"
TEST_CASE("frames placeholder") { CHECK(true); }
