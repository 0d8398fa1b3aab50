#pragma once

#include "gpcops/errors.hpp"
#include "gpcops/game.hpp"
#include "gpcops/graph.hpp"
#include "gpcops/graph_io.hpp"
#include "gpcops/mask.hpp"
#include "gpcops/parallel.hpp"
#include "gpcops/play.hpp"
#include "gpcops/solver.hpp"
#include "gpcops/state_space.hpp"
#include "gpcops/strategy.hpp"
#include "gpcops/table_io.hpp"
#include "gpcops/verify.hpp"
