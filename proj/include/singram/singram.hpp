#pragma once

#include "singram/canonical.hpp"
#include "singram/constructions.hpp"
#include "singram/csp.hpp"
#include "singram/enumerate.hpp"
#include "singram/graph.hpp"
#include "singram/graph6.hpp"
#include "singram/json_io.hpp"
#include "singram/pattern.hpp"
#include "singram/search.hpp"
#include "singram/singular.hpp"
#include "singram/turan.hpp"
