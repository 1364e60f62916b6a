#pragma once

#include "kess/budget.hpp"
#include "kess/clique.hpp"
#include "kess/domination.hpp"
#include "kess/generators.hpp"
#include "kess/graph.hpp"
#include "kess/harness/runner.hpp"
#include "kess/harness/statements.hpp"
#include "kess/invariants.hpp"
#include "kess/io/edge_list.hpp"
#include "kess/io/graph6.hpp"
#include "kess/io/report.hpp"
#include "kess/matching.hpp"
#include "kess/recognizers.hpp"
#include "kess/stable.hpp"
