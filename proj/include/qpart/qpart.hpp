#pragma once

// Umbrella header.

#include "qpart/budget.hpp"
#include "qpart/codes.hpp"
#include "qpart/cyclotomic.hpp"
#include "qpart/errors.hpp"
#include "qpart/ferrers.hpp"
#include "qpart/gf.hpp"
#include "qpart/kraw.hpp"
#include "qpart/lattice.hpp"
#include "qpart/laurent.hpp"
#include "qpart/matgf.hpp"
#include "qpart/preservers.hpp"
#include "qpart/selftest.hpp"
