#pragma once

#include "atlas.hpp"
#include "clifford.hpp"
#include "config.hpp"
#include "dsl.hpp"
#include "fdalgebra.hpp"
#include "gradedalg.hpp"
#include "hypersurface.hpp"
#include "presentation.hpp"
#include "report.hpp"
#include "rewrite.hpp"
