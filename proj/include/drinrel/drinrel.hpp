#pragma once

#include "drinfeld.hpp"
#include "newton.hpp"
#include "oracle.hpp"
#include "parse.hpp"
#include "places.hpp"
#include "polymat.hpp"
#include "relation.hpp"
#include "riemann_roch.hpp"
