#pragma once

#include "qtensor/dualcheck/basis.hpp"
#include "qtensor/dualcheck/decomposition.hpp"
#include "qtensor/dualcheck/gram.hpp"
#include "qtensor/dualcheck/psi_checks.hpp"
#include "qtensor/dualcheck/relations.hpp"
#include "qtensor/dualcheck/roots.hpp"
#include "qtensor/dualcheck/specht.hpp"
