#pragma once

#include "tgstc/types.hpp"
#include "tgstc/temporal_stream.hpp"
#include "tgstc/weighting.hpp"
#include "tgstc/graph.hpp"
#include "tgstc/aggregate.hpp"
#include "tgstc/dynamic_pricing.hpp"
#include "tgstc/wedge.hpp"
#include "tgstc/static_stc.hpp"
#include "tgstc/ilp_export.hpp"
#include "tgstc/metrics.hpp"
#include "tgstc/stream_stc.hpp"
#include "tgstc/synth.hpp"
