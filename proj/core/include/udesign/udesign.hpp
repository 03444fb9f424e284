#pragma once

// Umbrella header for the udesign library.

#include "udesign/classify.hpp"
#include "udesign/construct.hpp"
#include "udesign/design.hpp"
#include "udesign/design_io.hpp"
#include "udesign/fplinalg.hpp"
#include "udesign/padic.hpp"
#include "udesign/partition.hpp"
#include "udesign/prime_field.hpp"
#include "udesign/subsets.hpp"
