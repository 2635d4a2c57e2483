#pragma once

#include "knotcob/embedded_diagram.hpp"
#include "knotcob/error.hpp"
#include "knotcob/families.hpp"
#include "knotcob/filling.hpp"
#include "knotcob/fatgraph.hpp"
#include "knotcob/gauss_code.hpp"
#include "knotcob/graded_matrix.hpp"
#include "knotcob/integer.hpp"
#include "knotcob/invariants.hpp"
#include "knotcob/lagrangian.hpp"
#include "knotcob/matrix_json.hpp"
#include "knotcob/polynomial.hpp"
#include "knotcob/random.hpp"
#include "knotcob/rank.hpp"
#include "knotcob/rmoves.hpp"
#include "knotcob/slice.hpp"
