#pragma once

#include "penney/analysis.hpp"
#include "penney/chain.hpp"
#include "penney/error.hpp"
#include "penney/rational.hpp"
#include "penney/render.hpp"
#include "penney/simulate.hpp"
#include "penney/timing.hpp"
#include "penney/variants.hpp"
#include "penney/word.hpp"
