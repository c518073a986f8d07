#pragma once

#include "balanced.hpp"
#include "families.hpp"
#include "hypergraph.hpp"
#include "io.hpp"
#include "multiset.hpp"
#include "parallel.hpp"
#include "splitting.hpp"
#include "toric.hpp"
