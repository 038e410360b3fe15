#pragma once

#include "cindex/arith.hpp"
#include "cindex/catalog.hpp"
#include "cindex/constructions.hpp"
#include "cindex/cyclo.hpp"
#include "cindex/group.hpp"
#include "cindex/mci.hpp"
#include "cindex/parallel.hpp"
#include "cindex/pgroup.hpp"
#include "cindex/report.hpp"
#include "cindex/structure.hpp"
#include "cindex/subgroup.hpp"
#include "cindex/verify.hpp"
