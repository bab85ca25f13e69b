#pragma once

#include "hamres/division.hpp"
#include "hamres/groebner.hpp"
#include "hamres/hamming.hpp"
#include "hamres/matrix.hpp"
#include "hamres/monomial.hpp"
#include "hamres/polynomial.hpp"
#include "hamres/rational.hpp"
#include "hamres/resolver.hpp"
#include "hamres/setops.hpp"
