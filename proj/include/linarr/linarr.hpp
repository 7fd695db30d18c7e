#pragma once

#include "linarr/arrangement.hpp"
#include "linarr/gap.hpp"
#include "linarr/graph.hpp"
#include "linarr/io.hpp"
#include "linarr/isomorphism.hpp"
#include "linarr/outerplanar.hpp"
#include "linarr/render.hpp"
#include "linarr/report.hpp"
#include "linarr/solvers.hpp"
