#pragma once

#include "aalpha/claims.hpp"
#include "aalpha/digraph.hpp"
#include "aalpha/energy.hpp"
#include "aalpha/enumerate.hpp"
#include "aalpha/families.hpp"
#include "aalpha/radius_bounds.hpp"
#include "aalpha/rational.hpp"
#include "aalpha/spectral.hpp"
