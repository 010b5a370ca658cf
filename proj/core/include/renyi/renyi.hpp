#pragma once

// Umbrella header for the renyi library.

#include "renyi/bunch.hpp"
#include "renyi/carrier.hpp"
#include "renyi/disintegration.hpp"
#include "renyi/error.hpp"
#include "renyi/event.hpp"
#include "renyi/family.hpp"
#include "renyi/function.hpp"
#include "renyi/measure.hpp"
#include "renyi/model.hpp"
#include "renyi/rational.hpp"
#include "renyi/report.hpp"
#include "renyi/state.hpp"
#include "renyi/statistic.hpp"
#include "renyi/truncation.hpp"
