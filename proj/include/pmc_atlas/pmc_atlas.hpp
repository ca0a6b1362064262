#pragma once

#include "pmc_atlas/bitset.hpp"
#include "pmc_atlas/bounds.hpp"
#include "pmc_atlas/constructions.hpp"
#include "pmc_atlas/cover.hpp"
#include "pmc_atlas/errors.hpp"
#include "pmc_atlas/graph.hpp"
#include "pmc_atlas/io.hpp"
#include "pmc_atlas/pmc.hpp"
