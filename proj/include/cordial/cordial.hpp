#pragma once

#include "cordial/closed_forms.hpp"
#include "cordial/errors.hpp"
#include "cordial/graph.hpp"
#include "cordial/graph_io.hpp"
#include "cordial/labelling.hpp"
#include "cordial/rng.hpp"
#include "cordial/solver.hpp"
#include "cordial/tree_labelling.hpp"
