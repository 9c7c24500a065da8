#pragma once

#include "commaforge/arrow_hierarchy.hpp"
#include "commaforge/category.hpp"
#include "commaforge/dot.hpp"
#include "commaforge/dsl.hpp"
#include "commaforge/fixtures.hpp"
#include "commaforge/functor.hpp"
#include "commaforge/propagation.hpp"
#include "commaforge/universal.hpp"
