#pragma once

// Umbrella header for the whole library.

#include "gschur/bijection.hpp"
#include "gschur/core.hpp"
#include "gschur/genome.hpp"
#include "gschur/hecke.hpp"
#include "gschur/json_io.hpp"
#include "gschur/qsym.hpp"
#include "gschur/tableau.hpp"
