#include "doctest.h"

#include <boost/math/special_functions/zeta.hpp>
#include <stdexcept>

#include "dilbasis/zeta.hpp"

using namespace dilbasis;

TEST_CASE("zeta agrees with Boost") {
  for (double s : {1.001, 1.01, 1.1, 1.5, 2.0, 2.5, 3.0, 4.0, 7.5, 20.0, 60.0}) {
    INFO("s = " << s);
    CHECK(zeta(s) == doctest::Approx(boost::math::zeta(s)).epsilon(1e-13));
  }
}

TEST_CASE("zeta special values") {
  constexpr double pi = 3.14159265358979323846;
  CHECK(zeta(2.0) == doctest::Approx(pi * pi / 6).epsilon(1e-15));
  CHECK(zeta(4.0) == doctest::Approx(pi * pi * pi * pi / 90).epsilon(1e-15));
  CHECK(zeta3() == doctest::Approx(1.2020569031595942854).epsilon(1e-15));
}

TEST_CASE("zeta rejects s <= 1") {
  CHECK_THROWS_AS(zeta(1.0), std::domain_error);
  CHECK_THROWS_AS(zeta(0.5), std::domain_error);
}
