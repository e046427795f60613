#pragma once

#include "diagcalc/partition.hpp"
#include "diagcalc/equivalence.hpp"
#include "diagcalc/report.hpp"
#include "diagcalc/finite_monoid.hpp"
#include "diagcalc/families.hpp"
#include "diagcalc/ehresmann.hpp"
#include "diagcalc/presentation.hpp"
#include "diagcalc/render.hpp"
#include "diagcalc/workbench.hpp"
