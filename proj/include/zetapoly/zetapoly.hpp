#ifndef ZETAPOLY_ZETAPOLY_HPP
#define ZETAPOLY_ZETAPOLY_HPP

#include "acceptance.hpp"
#include "asymptotics.hpp"
#include "bracket_solve.hpp"
#include "combinatorics.hpp"
#include "errors.hpp"
#include "hp_complex.hpp"
#include "hp_real.hpp"
#include "numerics.hpp"
#include "precision.hpp"
#include "report.hpp"
#include "root_solver.hpp"
#include "symbolic.hpp"
#include "unity.hpp"
#include "zeta_value.hpp"

#endif
