#pragma once

#include "sftglue/error.hpp"
#include "sftglue/graph_analysis.hpp"
#include "sftglue/hyperspace.hpp"
#include "sftglue/io.hpp"
#include "sftglue/sft_graph.hpp"
#include "sftglue/stable_unstable.hpp"
#include "sftglue/symbolic_point.hpp"
#include "sftglue/tracing.hpp"
