#pragma once

#include "pclique/baselines.hpp"
#include "pclique/completion.hpp"
#include "pclique/errors.hpp"
#include "pclique/filter.hpp"
#include "pclique/graph.hpp"
#include "pclique/graph_io.hpp"
#include "pclique/harness.hpp"
#include "pclique/ledger.hpp"
#include "pclique/prng.hpp"
#include "pclique/report.hpp"
#include "pclique/space_budget.hpp"
