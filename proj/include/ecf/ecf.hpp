#ifndef ECF_ECF_HPP
#define ECF_ECF_HPP

#include "ecf/cf.hpp"
#include "ecf/digits.hpp"
#include "ecf/hermite.hpp"
#include "ecf/linsolve.hpp"
#include "ecf/pade.hpp"
#include "ecf/polynomial.hpp"
#include "ecf/rational.hpp"

#endif
