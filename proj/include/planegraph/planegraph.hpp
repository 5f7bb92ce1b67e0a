#pragma once

// Umbrella header for the full library.

#include "planegraph/bounds.hpp"
#include "planegraph/connectivity.hpp"
#include "planegraph/connectors.hpp"
#include "planegraph/core.hpp"
#include "planegraph/cycles.hpp"
#include "planegraph/extract.hpp"
#include "planegraph/generators.hpp"
#include "planegraph/holes.hpp"
#include "planegraph/io.hpp"
#include "planegraph/subgraph.hpp"
#include "planegraph/verify.hpp"
