#pragma once

#include "scuba/fitness.hpp"
#include "scuba/landscape.hpp"
#include "scuba/neutrality.hpp"
#include "scuba/nkq.hpp"
#include "scuba/random.hpp"
#include "scuba/search.hpp"
#include "scuba/tsp.hpp"
