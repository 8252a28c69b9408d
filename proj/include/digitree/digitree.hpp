#pragma once

#include "digitree/cantor.hpp"
#include "digitree/convert.hpp"
#include "digitree/digit_space.hpp"
#include "digitree/errors.hpp"
#include "digitree/hausdorff.hpp"
#include "digitree/interval.hpp"
#include "digitree/palm.hpp"
#include "digitree/rational.hpp"
#include "digitree/stream.hpp"
#include "digitree/tree.hpp"
