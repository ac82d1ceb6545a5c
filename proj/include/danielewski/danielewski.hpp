#pragma once

#include "danielewski/classify.hpp"
#include "danielewski/error.hpp"
#include "danielewski/extension.hpp"
#include "danielewski/format.hpp"
#include "danielewski/parse.hpp"
#include "danielewski/poly_ops.hpp"
#include "danielewski/reduce.hpp"
#include "danielewski/surface.hpp"
#include "danielewski/transform.hpp"
