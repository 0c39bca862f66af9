#pragma once

#include "rainbowdom/assignment.hpp"
#include "rainbowdom/certify.hpp"
#include "rainbowdom/colorset.hpp"
#include "rainbowdom/domatic.hpp"
#include "rainbowdom/dp.hpp"
#include "rainbowdom/errors.hpp"
#include "rainbowdom/graph.hpp"
#include "rainbowdom/laws.hpp"
#include "rainbowdom/middle.hpp"
#include "rainbowdom/solver.hpp"
#include "rainbowdom/verify.hpp"
#include "rainbowdom/version.hpp"
