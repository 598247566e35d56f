#pragma once

#include "symdiff/asymptotics.hpp"
#include "symdiff/bigness.hpp"
#include "symdiff/cyclotomic.hpp"
#include "symdiff/error.hpp"
#include "symdiff/exact_rank.hpp"
#include "symdiff/extension.hpp"
#include "symdiff/invariants.hpp"
#include "symdiff/latticesum.hpp"
#include "symdiff/monoblocks.hpp"
#include "symdiff/oracle.hpp"
#include "symdiff/quasi_polynomial.hpp"
#include "symdiff/quasifit.hpp"
#include "symdiff/rational.hpp"
