#pragma once

#include "ringline/error.hpp"
#include "ringline/finite_ring.hpp"
#include "ringline/ring_structure.hpp"
#include "ringline/ring_build.hpp"
#include "ringline/ring_file.hpp"
#include "ringline/recipe.hpp"
#include "ringline/projective_line.hpp"
#include "ringline/max_clique.hpp"
#include "ringline/line_stats.hpp"
#include "ringline/catalog.hpp"
#include "ringline/report.hpp"
