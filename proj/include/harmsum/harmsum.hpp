#pragma once

#include "harmsum/check.hpp"
#include "harmsum/complex.hpp"
#include "harmsum/constants.hpp"
#include "harmsum/errors.hpp"
#include "harmsum/quad.hpp"
#include "harmsum/rational.hpp"
#include "harmsum/real.hpp"
#include "harmsum/series.hpp"
#include "harmsum/special/combinatorics.hpp"
#include "harmsum/special/dilog.hpp"
#include "harmsum/special/gamma.hpp"
#include "harmsum/verify/antiderivative.hpp"
#include "harmsum/verify/checks.hpp"
#include "harmsum/verify/report.hpp"
