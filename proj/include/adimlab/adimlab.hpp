#pragma once

#include "adimlab/error.hpp"
#include "adimlab/vertex_set.hpp"
#include "adimlab/graph.hpp"
#include "adimlab/graph6.hpp"
#include "adimlab/generators.hpp"
#include "adimlab/metric.hpp"
#include "adimlab/solver.hpp"
#include "adimlab/formulas.hpp"
#include "adimlab/families.hpp"
#include "adimlab/verify.hpp"
