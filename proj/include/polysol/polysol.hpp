#pragma once

#include "polysol/io.hpp"
#include "polysol/jordan.hpp"
#include "polysol/linalg.hpp"
#include "polysol/matfun.hpp"
#include "polysol/polygon.hpp"
#include "polysol/semidiscrete.hpp"
#include "polysol/soliton.hpp"
#include "polysol/zoo.hpp"
