#pragma once

/// Umbrella header.

#include "fibroot/exactnum.hpp"
#include "fibroot/rational.hpp"
#include "fibroot/trace.hpp"
#include "fibroot/digitmethod.hpp"
#include "fibroot/refine.hpp"
#include "fibroot/tableau.hpp"
#include "fibroot/trace_json.hpp"
#include "fibroot/corpus.hpp"
